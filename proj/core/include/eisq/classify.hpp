#pragma once

#include <optional>
#include <string>

#include "eisq/gallery.hpp"
#include "eisq/graph.hpp"
#include "eisq/homology.hpp"

namespace eisq {

/// I(G)^2 Cohen-Macaulay: g is triangle-free and in W2. Refuses graphs with
/// isolated vertices.
bool is_cm_square(const Graph& g, const Budget* budget = nullptr);

/// I(G)^2 generalized Cohen-Macaulay: g well-covered and every nontrivial
/// component of every G_v triangle-free in W2.
bool is_gcm_square(const Graph& g, const Budget* budget = nullptr);

/// I(G)^2 Buchsbaum, decided by the classification list: triangle-free in
/// W2, or isomorphic to one of K_n (n>=3), C_n^c (n>=6), B_n (n>=4), Q9,
/// Q12, P10, P12.
bool is_buchsbaum_square(const Graph& g, const Budget* budget = nullptr);

/// Structural Buchsbaum criterion, independent of the gallery list:
///   alpha = 1: always true;
///   alpha = 2: the 1-skeleton of the independence complex is a spanning
///              cycle or a spanning path (n >= 4);
///   alpha >= 3: the independence complex is Cohen-Macaulay over F and every
///               nontrivial component of every G_v is triangle-free in W2.
bool buchsbaum_square_oracle(const Graph& g, const PrimeField& field,
                             const Budget* budget = nullptr);

/// Gorenstein classification for locally triangle-free graphs: triangle-free
/// in W2, or isomorphic to one of C_n^c (n>=6), Q9, Q12, P10, P12. Refuses
/// graphs that are not locally triangle-free.
bool is_gorenstein_locally_tf(const Graph& g, const Budget* budget = nullptr);

/// Right-hand side of the classification of locally triangle-free graphs in
/// W2 among graphs with alpha >= 3 that are not joins: triangle-free in W2
/// or isomorphic to one of Q9, Q12, P10, P12. The verification harness
/// compares this against the directly computed left-hand side.
bool is_locally_tf_w2_classified(const Graph& g, const Budget* budget = nullptr);

struct ClassificationOptions {
    bool with_oracle = false;
    std::uint32_t characteristic = 2;
    const Budget* budget = nullptr;
};

struct ClassificationReport {
    std::string graph6;
    int n = 0;
    int edges = 0;
    int alpha = 0;
    bool well_covered = false;
    bool w2 = false;
    bool triangle_free = false;
    bool locally_triangle_free = false;
    int join_factor_count = 0;
    std::optional<GalleryId> gallery_match;

    bool cm_square = false;
    std::string cm_square_rule;
    bool gcm_square = false;
    std::string gcm_square_rule;
    bool buchsbaum_square = false;
    std::string buchsbaum_square_rule;
    /// Defined only when the graph is locally triangle-free.
    std::optional<bool> gorenstein_locally_tf;
    std::string gorenstein_rule;

    std::optional<std::uint32_t> oracle_characteristic;
    std::optional<bool> oracle_buchsbaum;
    std::optional<bool> oracle_gorenstein;
    std::optional<bool> agreement_buchsbaum;
    std::optional<bool> agreement_gorenstein;
};

/// Full report; refuses graphs with isolated vertices (precondition_error).
ClassificationReport classify(const Graph& g, const ClassificationOptions& options = {});

/// Stable JSON object, field names as in ClassificationReport.
std::string to_json(const ClassificationReport& report);

}  // namespace eisq

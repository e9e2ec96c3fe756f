#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisq/graph.hpp"

namespace eisq {

enum class GalleryFamily {
    complete,
    cycle,
    path,
    cycle_complement,
    b,
    q9,
    q12,
    p10,
    p12,
};

const char* family_name(GalleryFamily family);
std::optional<GalleryFamily> family_from_name(std::string_view name);

/// A recognized named graph: the family, its parameter (0 for the fixed
/// graphs), and a vertex bijection from the matched graph onto the canonical
/// construction.
struct GalleryId {
    GalleryFamily family;
    int parameter = 0;
    std::vector<int> witness;
};

Graph complete(int n);  // n >= 1
Graph cycle(int n);     // n >= 3
Graph path(int n);      // n >= 1

/// Complement of the n-cycle, n >= 4.
Graph cycle_complement(int n);

/// Complement of the n-path, n >= 4; its independence complex is the path
/// with n vertices. (Read off that complex rather than the defining index
/// formula, whose literal form strands the first vertex; see
/// b_graph_literal.)
Graph b_graph(int n);

/// The literal index formula: edges x_i x_j for 2 <= i, i+1 < j <= n
/// (0-based: 1 <= i, j >= i+2). Leaves vertex 0 isolated; kept for
/// comparison only.
Graph b_graph_literal(int n);

// The four exceptional graphs. Vertex order q9/q12: a, b, c, a_i..., b_i...,
// c_i...; p10: a, b, c, x, y, a1, b1, b2, c1, c2; p12: a, b, c, d, x, y, z,
// t, a1, b1, c1, c2. Their independence complexes triangulate S^2 (q9, p10,
// p12: triaugmented triangular prism, gyroelongated square bipyramid,
// icosahedron) and S^3 (q12).
Graph q9();
Graph q12();
Graph p10();
Graph p12();

/// Vertex labels matching the constructions above.
std::vector<std::string> gallery_vertex_names(GalleryFamily family, int n);

/// Adjacency-preserving bijection g1 -> g2, or nullopt. Deterministic: the
/// first witness in lexicographic search order.
std::optional<std::vector<int>> is_isomorphic(const Graph& g1, const Graph& g2);

/// First match among [complete, cycle_complement, b, q9, q12, p10, p12]
/// within each family's construction range. Candidates are screened by
/// (n, edge count, degree multiset) before the isomorphism search.
std::optional<GalleryId> match_gallery(const Graph& g);

}  // namespace eisq

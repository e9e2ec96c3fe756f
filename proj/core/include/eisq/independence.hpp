#pragma once

#include <functional>
#include <vector>

#include "eisq/graph.hpp"
#include "eisq/util.hpp"

namespace eisq {

struct IndependenceSummary {
    int alpha = 0;
    int mis_count = 0;
    std::vector<int> mis_sizes;  // sorted ascending
    bool well_covered = false;
};

/// All inclusion-maximal independent sets, each once, sorted lexicographically
/// by ascending vertex list.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Budget* budget = nullptr);

/// Visits maximal independent sets in unspecified order; stop early by
/// returning false from the visitor.
void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(VertexSet)>& visit,
                                      const Budget* budget = nullptr);

/// alpha(g); 0 for the graph with no vertices.
int independence_number(const Graph& g);

/// True iff every maximal independent set has size alpha(g). Vacuously true
/// for the graph with no vertices.
bool is_well_covered(const Graph& g, const Budget* budget = nullptr);

/// Well-covered, and deleting any one vertex leaves a well-covered graph with
/// the same independence number. Throws precondition_error if g has an
/// isolated vertex (the class is defined without them; answering false would
/// poison exhaustive sweeps).
bool is_w2(const Graph& g, const Budget* budget = nullptr);

/// G_v is triangle-free for every vertex v (g itself may contain triangles).
bool is_locally_triangle_free(const Graph& g);

IndependenceSummary independence_summary(const Graph& g, const Budget* budget = nullptr);

}  // namespace eisq

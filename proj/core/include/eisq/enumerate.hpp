#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "eisq/graph.hpp"

namespace eisq {

/// Canonical form of a graph with n <= 11: the minimum, over all vertex
/// orderings, of the packed upper-triangle adjacency bits (row k holds the
/// adjacencies of the k-th placed vertex to the earlier ones, most
/// significant first). Equal certificates (at equal n) mean isomorphic.
std::uint64_t canonical_certificate(const Graph& g);

struct EnumerateOptions {
    bool no_isolated = false;
    bool connected = false;
};

/// One representative per isomorphism class on n vertices, 1 <= n <= 9,
/// grown vertex-by-vertex with canonical-certificate rejection of
/// duplicates. Deterministic order.
std::vector<Graph> enumerate_graphs(int n, EnumerateOptions options = {});

/// Streaming variant of enumerate_graphs; visits the same graphs in the
/// same order.
void for_each_graph(int n, EnumerateOptions options, const std::function<void(const Graph&)>& visit);

}  // namespace eisq

#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eisq/util.hpp"

namespace eisq {

/// Subset of the vertices 0..n-1 of some graph, stored as a bitmask.
/// Graphs are capped at 62 vertices (the single-byte graph6 range), so one
/// 64-bit word always suffices.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }
    /// The full set {0, ..., n-1}.
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    bool contains(int v) const { return (bits_ >> v) & 1u; }
    void insert(int v) { bits_ |= 1ull << v; }
    void erase(int v) { bits_ &= ~(1ull << v); }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }

    bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    VertexSet intersect(VertexSet other) const { return VertexSet(bits_ & other.bits_); }
    VertexSet unite(VertexSet other) const { return VertexSet(bits_ | other.bits_); }
    VertexSet minus(VertexSet other) const { return VertexSet(bits_ & ~other.bits_); }

    /// Smallest member; set must be nonempty.
    int min() const { return __builtin_ctzll(bits_); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
        return out;
    }

    friend bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Order on vertex sets: lexicographic on the ascending vertex lists
/// (so {0,3} < {1,2}, and a set precedes its proper supersets).
bool lex_less(VertexSet a, VertexSet b);

/// Immutable simple undirected graph on vertices 0..n-1, adjacency stored as
/// one neighbor bitmask per vertex. Symmetric, irreflexive by construction.
/// Isolated vertices are representable; classification entry points refuse
/// them, derived subgraphs may contain them.
class Graph {
public:
    Graph() = default;

    /// Graph with n vertices and no edges.
    static Graph empty(int n);

    /// Build from an explicit edge list. Duplicate pairs and reversed pairs
    /// collapse to a single edge. Throws precondition_error on loops or
    /// endpoints outside 0..n-1.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Build from per-vertex neighbor masks; validates symmetry and
    /// irreflexivity.
    static Graph from_adjacency(int n, std::vector<std::uint64_t> adjacency);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }
    VertexSet vertices() const { return VertexSet::range(n_); }
    bool has_isolated_vertex() const;

    /// Edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Degrees sorted ascending.
    std::vector<int> degree_sequence() const;

    /// Identity of the labeled graph (not isomorphism).
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Induced subgraph together with the relabeling back to the parent graph:
/// vertex v of `graph` is `to_parent[v]` in the graph it was taken from.
struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;

    int parent_of(int v) const { return to_parent[static_cast<std::size_t>(v)]; }
};

Graph complement(const Graph& g);

/// G[S]: induced subgraph on s, relabeled to 0..|s|-1 in ascending order of
/// the original labels.
Subgraph induced(const Graph& g, VertexSet s);

/// N_G(S): vertices outside s with a neighbor in s.
VertexSet open_neighborhood(const Graph& g, VertexSet s);
/// N_G[S] = S together with its open neighborhood.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

/// G_S: the induced subgraph on V(G) minus N_G[S].
Subgraph local_graph(const Graph& g, VertexSet s);

/// Join: disjoint union of g1 and g2 plus every edge between them.
Graph join(const Graph& g1, const Graph& g2);

/// Disjoint union, g2 relabeled to start at |V(g1)|.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Image of g under the relabeling old -> perm[old].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Bipartition witness (two color classes) when one exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

bool is_triangle_free(const Graph& g);

// graph6 interchange, one graph per line. Single-byte size header only
// (n <= 62): byte 63+n, then the upper triangle in column order (j = 1..n-1,
// i = 0..j-1), packed 6 bits per character, each character offset by 63,
// zero-padded.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Plain text edge-list format: optional '#' comment lines, then a header
// line "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace eisq

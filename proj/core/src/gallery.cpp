#include "eisq/gallery.hpp"

#include <algorithm>
#include <array>

#include "eisq/independence.hpp"

namespace eisq {

namespace {

void require_min(int n, int min, const char* what) {
    if (n < min)
        throw precondition_error(std::string(what) + " requires n >= " + std::to_string(min));
}

// Sorted multiset of BFS-distance multisets, one per vertex; cheap
// isomorphism invariant used to prune the backtracking search.
std::vector<std::vector<int>> distance_profiles(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> profiles(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist;
        std::uint64_t seen = 1ull << root, frontier = 1ull << root;
        int level = 0;
        while (frontier) {
            for (int i = __builtin_popcountll(frontier); i > 0; --i) dist.push_back(level);
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= g.neighbors(__builtin_ctzll(m)).bits();
            frontier = next & ~seen;
            seen |= frontier;
            ++level;
        }
        dist.push_back(n - __builtin_popcountll(seen));  // unreachable count
        std::sort(dist.begin(), dist.end());
        profiles[static_cast<std::size_t>(root)] = std::move(dist);
    }
    return profiles;
}

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    const std::vector<std::vector<int>>& prof1;
    const std::vector<std::vector<int>>& prof2;
    std::vector<int> map;   // g1 vertex -> g2 vertex, -1 unset
    std::uint64_t used = 0; // g2 vertices taken

    bool extend(int v) {
        int n = g1.vertex_count();
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1u) continue;
            if (g1.degree(v) != g2.degree(w)) continue;
            if (prof1[static_cast<std::size_t>(v)] != prof2[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g1.has_edge(u, v) != g2.has_edge(map[static_cast<std::size_t>(u)], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used |= 1ull << w;
            if (extend(v + 1)) return true;
            used &= ~(1ull << w);
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace

const char* family_name(GalleryFamily family) {
    switch (family) {
        case GalleryFamily::complete: return "complete";
        case GalleryFamily::cycle: return "cycle";
        case GalleryFamily::path: return "path";
        case GalleryFamily::cycle_complement: return "cycle_complement";
        case GalleryFamily::b: return "b";
        case GalleryFamily::q9: return "q9";
        case GalleryFamily::q12: return "q12";
        case GalleryFamily::p10: return "p10";
        case GalleryFamily::p12: return "p12";
    }
    return "?";
}

std::optional<GalleryFamily> family_from_name(std::string_view name) {
    using GF = GalleryFamily;
    for (GF f : {GF::complete, GF::cycle, GF::path, GF::cycle_complement, GF::b, GF::q9, GF::q12,
                 GF::p10, GF::p12})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

Graph complete(int n) {
    require_min(n, 1, "complete");
    return complement(Graph::empty(n));
}

Graph cycle(int n) {
    require_min(n, 3, "cycle");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph path(int n) {
    require_min(n, 1, "path");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_complement(int n) {
    require_min(n, 4, "cycle_complement");
    return complement(cycle(n));
}

Graph b_graph(int n) {
    require_min(n, 4, "b_graph");
    return complement(path(n));
}

Graph b_graph_literal(int n) {
    require_min(n, 4, "b_graph_literal");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

// a=0 b=1 c=2 a1=3 a2=4 b1=5 b2=6 c1=7 c2=8. The triangle abc, the pendant
// pairs at a/b/c, and a single 6-cycle a1 c1 b1 a2 c2 b2 through the outer
// vertices.
Graph q9() {
    static const Graph g = Graph::from_edge_list(
        9, {{0, 1}, {0, 2}, {1, 2},            // triangle
            {0, 3}, {0, 4},                    // a-a_i
            {1, 5}, {1, 6},                    // b-b_i
            {2, 7}, {2, 8},                    // c-c_i
            {3, 7}, {4, 8},                    // a_i c_i
            {5, 7}, {6, 8},                    // b_i c_i
            {4, 5}, {3, 6}});                  // a2 b1, a1 b2
    return g;
}

namespace {

// The 33 maximal independent sets of q12 under its canonical labeling
// (a=0 b=1 c=2, a_i=3..5, b_i=6..8, c_i=9..11).
const std::array<VertexSet, 33>& q12_facet_table() {
    static const std::array<VertexSet, 33> table = {
        VertexSet::of({0, 6, 7, 8}),   VertexSet::of({0, 6, 7, 11}),  VertexSet::of({0, 6, 8, 10}),
        VertexSet::of({0, 6, 10, 11}), VertexSet::of({0, 7, 8, 9}),   VertexSet::of({0, 7, 9, 11}),
        VertexSet::of({0, 8, 9, 10}),  VertexSet::of({0, 9, 10, 11}), VertexSet::of({1, 3, 4, 5}),
        VertexSet::of({1, 3, 4, 11}),  VertexSet::of({1, 3, 5, 10}),  VertexSet::of({1, 3, 10, 11}),
        VertexSet::of({1, 4, 5, 9}),   VertexSet::of({1, 4, 9, 11}),  VertexSet::of({1, 5, 9, 10}),
        VertexSet::of({1, 9, 10, 11}), VertexSet::of({2, 3, 4, 5}),   VertexSet::of({2, 3, 4, 6}),
        VertexSet::of({2, 3, 5, 8}),   VertexSet::of({2, 3, 6, 8}),   VertexSet::of({2, 4, 5, 7}),
        VertexSet::of({2, 4, 6, 7}),   VertexSet::of({2, 5, 7, 8}),   VertexSet::of({2, 6, 7, 8}),
        VertexSet::of({3, 4, 6, 11}),  VertexSet::of({3, 5, 8, 10}),  VertexSet::of({3, 6, 8, 10}),
        VertexSet::of({3, 6, 10, 11}), VertexSet::of({4, 5, 7, 9}),   VertexSet::of({4, 6, 7, 11}),
        VertexSet::of({4, 7, 9, 11}),  VertexSet::of({5, 7, 8, 9}),   VertexSet::of({5, 8, 9, 10}),
    };
    return table;
}

Graph build_q12() {
    // a=0 b=1 c=2 a_i=3,4,5 b_i=6,7,8 c_i=9,10,11; the outer vertices form
    // the single 9-cycle a1 c1 b1 a3 c3 b3 a2 c2 b2.
    Graph g = Graph::from_edge_list(
        12, {{0, 1},  {0, 2},  {1, 2},             // triangle
             {0, 3},  {0, 4},  {0, 5},             // a-a_i
             {1, 6},  {1, 7},  {1, 8},             // b-b_i
             {2, 9},  {2, 10}, {2, 11},            // c-c_i
             {3, 9},  {4, 10}, {5, 11},            // a_i c_i
             {6, 9},  {7, 10}, {8, 11},            // b_i c_i
             {5, 6},  {3, 7},  {4, 8}});           // a3 b1, a1 b2, a2 b3
    // the construction is only right if its facets are exactly the table
    auto facets = maximal_independent_sets(g);
    const auto& expected = q12_facet_table();
    std::vector<VertexSet> sorted_expected(expected.begin(), expected.end());
    std::sort(sorted_expected.begin(), sorted_expected.end(), lex_less);
    if (facets.size() != sorted_expected.size() ||
        !std::equal(facets.begin(), facets.end(), sorted_expected.begin()))
        throw std::logic_error("q12 construction does not reproduce its facet table");
    return g;
}

}  // namespace

Graph q12() {
    static const Graph g = build_q12();
    return g;
}

// a=0 b=1 c=2 x=3 y=4 a1=5 b1=6 b2=7 c1=8 c2=9
Graph p10() {
    static const Graph g = Graph::from_edge_list(
        10, {{0, 1}, {0, 2}, {0, 5}, {0, 3}, {0, 4},   // ab ac aa1 ax ay
             {1, 2}, {1, 6}, {1, 7},                   // bc bb1 bb2
             {2, 8}, {2, 9},                           // cc1 cc2
             {3, 4}, {3, 7}, {3, 8},                   // xy xb2 xc1
             {4, 6}, {4, 9},                           // yb1 yc2
             {5, 6}, {5, 7}, {5, 8}, {5, 9},           // a1b1 a1b2 a1c1 a1c2
             {6, 8}, {7, 9}});                         // b1c1 b2c2
    return g;
}

// a=0 b=1 c=2 d=3 x=4 y=5 z=6 t=7 a1=8 b1=9 c1=10 c2=11
Graph p12() {
    static const Graph g = Graph::from_edge_list(
        12, {{0, 1}, {0, 8}, {0, 2},  {0, 3},  {0, 4}, {0, 5},  // ab aa1 ac ad ax ay
             {1, 9}, {1, 2}, {1, 3},  {1, 7},  {1, 6},          // bb1 bc bd bt bz
             {2, 4}, {2, 6}, {2, 10}, {2, 11},                  // cx cz cc1 cc2
             {3, 5}, {3, 7}, {3, 10}, {3, 11},                  // dy dt dc1 dc2
             {8, 9}, {8, 6}, {8, 7},  {8, 10}, {8, 11},         // a1b1 a1z a1t a1c1 a1c2
             {9, 4}, {9, 5}, {9, 10}, {9, 11},                  // b1x b1y b1c1 b1c2
             {4, 5}, {4, 7}, {4, 10},                           // xy xt xc1
             {5, 6}, {5, 11},                                   // yz yc2
             {6, 7}, {6, 10},                                   // zt zc1
             {7, 11}});                                         // tc2
    return g;
}

std::vector<std::string> gallery_vertex_names(GalleryFamily family, int n) {
    switch (family) {
        case GalleryFamily::q9:
            return {"a", "b", "c", "a1", "a2", "b1", "b2", "c1", "c2"};
        case GalleryFamily::q12:
            return {"a", "b", "c", "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"};
        case GalleryFamily::p10:
            return {"a", "b", "c", "x", "y", "a1", "b1", "b2", "c1", "c2"};
        case GalleryFamily::p12:
            return {"a", "b", "c", "d", "x", "y", "z", "t", "a1", "b1", "c1", "c2"};
        default: {
            std::vector<std::string> names;
            for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
            return names;
        }
    }
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return std::nullopt;
    if (g1.edge_count() != g2.edge_count()) return std::nullopt;
    if (g1.degree_sequence() != g2.degree_sequence()) return std::nullopt;
    auto prof1 = distance_profiles(g1), prof2 = distance_profiles(g2);
    {
        auto s1 = prof1, s2 = prof2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    IsoSearch search{g1, g2, prof1, prof2,
                     std::vector<int>(static_cast<std::size_t>(g1.vertex_count()), -1), 0};
    if (search.extend(0)) return search.map;
    return std::nullopt;
}

std::optional<GalleryId> match_gallery(const Graph& g) {
    int n = g.vertex_count();
    struct Candidate {
        GalleryFamily family;
        int parameter;
        Graph target;
    };
    std::vector<Candidate> candidates;
    if (n >= 1) candidates.push_back({GalleryFamily::complete, n, complete(n)});
    if (n >= 4) candidates.push_back({GalleryFamily::cycle_complement, n, cycle_complement(n)});
    if (n >= 4) candidates.push_back({GalleryFamily::b, n, b_graph(n)});
    if (n == 9) candidates.push_back({GalleryFamily::q9, 0, q9()});
    if (n == 12) candidates.push_back({GalleryFamily::q12, 0, q12()});
    if (n == 10) candidates.push_back({GalleryFamily::p10, 0, p10()});
    if (n == 12) candidates.push_back({GalleryFamily::p12, 0, p12()});

    for (auto& c : candidates) {
        if (g.edge_count() != c.target.edge_count()) continue;
        if (g.degree_sequence() != c.target.degree_sequence()) continue;
        if (auto witness = is_isomorphic(g, c.target))
            return GalleryId{c.family, c.parameter, std::move(*witness)};
    }
    return std::nullopt;
}

}  // namespace eisq

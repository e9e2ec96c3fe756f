#include "doctest.h"

#include <algorithm>

#include "eisq/complex.hpp"
#include "eisq/gallery.hpp"
#include "eisq/independence.hpp"
#include "test_util.hpp"

using namespace eisq;

TEST_CASE("standard constructions") {
    CHECK(test_util::brute_isomorphic(cycle(3), complete(3)));
    for (int n = 1; n <= 8; ++n) CHECK(complete(n).edge_count() == n * (n - 1) / 2);
    CHECK(path(2) == complete(2));
    CHECK_THROWS_AS(cycle(2), precondition_error);
    CHECK_THROWS_AS(path(0), precondition_error);
}

TEST_CASE("cycle complements") {
    Graph cc4 = cycle_complement(4);
    CHECK(cc4.edge_count() == 2);
    CHECK(cc4.has_edge(0, 2));
    CHECK(cc4.has_edge(1, 3));

    CHECK(test_util::brute_isomorphic(cycle_complement(5), cycle(5)));
    for (int n = 4; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(test_util::brute_independence_number(cycle_complement(n)) == 2);
    }
    CHECK_THROWS_AS(cycle_complement(3), precondition_error);
}

TEST_CASE("b graphs") {
    Graph b4 = b_graph(4);
    CHECK(b4.edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});

    // the independence complex of b_graph(n) is the n-vertex path
    for (int n = 4; n <= 10; ++n) {
        CAPTURE(n);
        auto facets = maximal_independent_sets(b_graph(n));
        std::vector<VertexSet> path_edges;
        for (int i = 0; i + 1 < n; ++i) path_edges.push_back(VertexSet::of({i, i + 1}));
        std::sort(path_edges.begin(), path_edges.end(), lex_less);
        CHECK(facets == path_edges);
    }

    // well-covered with alpha 2 but not in W2: deleting vertex 2 strands one
    // endpoint
    CHECK(is_well_covered(b4));
    CHECK(independence_number(b4) == 2);
    CHECK(!is_w2(b4));

    // the literal index formula leaves vertex 0 isolated
    Graph lit = b_graph_literal(4);
    CHECK(lit.degree(0) == 0);
    CHECK(lit.edge_count() == 1);
}

TEST_CASE("q9 and q12 counts") {
    CHECK(q9().vertex_count() == 9);
    CHECK(q9().edge_count() == 15);
    CHECK(complement(q9()).edge_count() == 21);
    CHECK(q12().vertex_count() == 12);
    CHECK(q12().edge_count() == 21);
    CHECK(complement(q12()).edge_count() == 45);
}

TEST_CASE("q12 facet table") {
    // the 33 maximal independent sets under the canonical labeling
    // a=0 b=1 c=2 a1..a3=3..5 b1..b3=6..8 c1..c3=9..11
    std::vector<VertexSet> expected = {
        VertexSet::of({0, 6, 7, 8}),    // a b1 b2 b3
        VertexSet::of({0, 6, 7, 11}),   // a b1 b2 c3
        VertexSet::of({0, 6, 8, 10}),   // a b1 b3 c2
        VertexSet::of({0, 6, 10, 11}),  // a b1 c2 c3
        VertexSet::of({0, 7, 8, 9}),    // a b2 b3 c1
        VertexSet::of({0, 7, 9, 11}),   // a b2 c1 c3
        VertexSet::of({0, 8, 9, 10}),   // a b3 c1 c2
        VertexSet::of({0, 9, 10, 11}),  // a c1 c2 c3
        VertexSet::of({1, 3, 4, 5}),    // b a1 a2 a3
        VertexSet::of({1, 3, 4, 11}),   // b a1 a2 c3
        VertexSet::of({1, 3, 5, 10}),   // b a1 a3 c2
        VertexSet::of({1, 3, 10, 11}),  // b a1 c2 c3
        VertexSet::of({1, 4, 5, 9}),    // b a2 a3 c1
        VertexSet::of({1, 4, 9, 11}),   // b a2 c1 c3
        VertexSet::of({1, 5, 9, 10}),   // b a3 c1 c2
        VertexSet::of({1, 9, 10, 11}),  // b c1 c2 c3
        VertexSet::of({2, 3, 4, 5}),    // c a1 a2 a3
        VertexSet::of({2, 3, 4, 6}),    // c a1 a2 b1
        VertexSet::of({2, 3, 5, 8}),    // c a1 a3 b3
        VertexSet::of({2, 3, 6, 8}),    // c a1 b1 b3
        VertexSet::of({2, 4, 5, 7}),    // c a2 a3 b2
        VertexSet::of({2, 4, 6, 7}),    // c a2 b1 b2
        VertexSet::of({2, 5, 7, 8}),    // c a3 b2 b3
        VertexSet::of({2, 6, 7, 8}),    // c b1 b2 b3
        VertexSet::of({3, 4, 6, 11}),   // a1 a2 b1 c3
        VertexSet::of({3, 5, 8, 10}),   // a1 a3 b3 c2
        VertexSet::of({3, 6, 8, 10}),   // a1 b1 b3 c2
        VertexSet::of({3, 6, 10, 11}),  // a1 b1 c2 c3
        VertexSet::of({4, 5, 7, 9}),    // a2 a3 b2 c1
        VertexSet::of({4, 6, 7, 11}),   // a2 b1 b2 c3
        VertexSet::of({4, 7, 9, 11}),   // a2 b2 c1 c3
        VertexSet::of({5, 7, 8, 9}),    // a3 b2 b3 c1
        VertexSet::of({5, 8, 9, 10}),   // a3 b3 c1 c2
    };
    std::sort(expected.begin(), expected.end(), lex_less);
    CHECK(maximal_independent_sets(q12()) == expected);
}

TEST_CASE("p10 and p12 counts") {
    CHECK(p10().vertex_count() == 10);
    CHECK(p10().edge_count() == 21);
    CHECK(p12().vertex_count() == 12);
    CHECK(p12().edge_count() == 36);
    CHECK(complement(p12()).edge_count() == 30);  // icosahedron edges
    CHECK(complement(p10()).edge_count() == 24);  // gyroelongated square bipyramid edges
}

TEST_CASE("the four exceptional graphs satisfy the classification hypotheses") {
    for (const Graph& g : {q9(), q12(), p10(), p12()}) {
        CAPTURE(to_graph6(g));
        CHECK(is_well_covered(g));
        CHECK(is_w2(g));
        CHECK(is_locally_triangle_free(g));
        CHECK(!is_triangle_free(g));
        CHECK(join_factors(g).size() == 1);
    }
}

TEST_CASE("isomorphism") {
    auto witness = is_isomorphic(cycle(5), complement(cycle(5)));
    REQUIRE(witness.has_value());
    CHECK(relabel(cycle(5), *witness) == complement(cycle(5)));

    CHECK(!is_isomorphic(complete(3), path(3)).has_value());

    test_util::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + rng.below(11);
        Graph g = test_util::random_graph(rng, n);
        auto perm = test_util::random_permutation(rng, n);
        Graph h = relabel(g, perm);
        auto w = is_isomorphic(g, h);
        REQUIRE(w.has_value());
        CHECK(relabel(g, *w) == h);
    }

    // non-isomorphic pairs with equal degree sequences
    Graph c6 = cycle(6);
    Graph two_triangles = disjoint_union(complete(3), complete(3));
    CHECK(!is_isomorphic(c6, two_triangles).has_value());
    CHECK(!test_util::brute_isomorphic(c6, two_triangles));
}

TEST_CASE("gallery matching") {
    test_util::Rng rng(33);
    auto q9_match = match_gallery(relabel(q9(), test_util::random_permutation(rng, 9)));
    REQUIRE(q9_match.has_value());
    CHECK(q9_match->family == GalleryFamily::q9);

    CHECK(!match_gallery(cycle(4)).has_value());

    auto k5 = match_gallery(complete(5));
    REQUIRE(k5.has_value());
    CHECK(k5->family == GalleryFamily::complete);
    CHECK(k5->parameter == 5);

    // constructor then matcher round-trips the family
    for (int n = 4; n <= 9; ++n) {
        auto cc = match_gallery(relabel(cycle_complement(n), test_util::random_permutation(rng, n)));
        REQUIRE(cc.has_value());
        CHECK(cc->family == GalleryFamily::cycle_complement);
        CHECK(cc->parameter == n);

        auto b = match_gallery(relabel(b_graph(n), test_util::random_permutation(rng, n)));
        REQUIRE(b.has_value());
        CHECK(b->family == GalleryFamily::b);
        CHECK(b->parameter == n);
    }

    // witnesses map onto the canonical construction
    for (const Graph& g : {q9(), q12(), p10(), p12()}) {
        auto id = match_gallery(g);
        REQUIRE(id.has_value());
        CHECK(relabel(g, id->witness) == g);
    }
}

TEST_CASE("exceptional graph local structure") {
    // q9/q12 (hubs a=0, b=1, c=2 with s = 2 resp. 3 satellites each):
    // the hubs' common neighborhoods are single vertices, each hub's local
    // graph is a perfect matching on 2s vertices, and the 3s outer vertices
    // induce a single cycle
    for (const Graph& g : {q9(), q12()}) {
        int s = (g.vertex_count() - 3) / 3;
        CHECK(g.neighbors(0).intersect(g.neighbors(1)) == VertexSet::of({2}));
        for (int hub : {0, 1, 2}) {
            Graph inner = local_graph(g, VertexSet::of({hub})).graph;
            CHECK(inner.vertex_count() == 2 * s);
            CHECK(inner.edge_count() == s);
            for (int v = 0; v < inner.vertex_count(); ++v) CHECK(inner.degree(v) == 1);
        }
        Graph outer = induced(g, g.vertices().minus(VertexSet::of({0, 1, 2}))).graph;
        CHECK(outer.vertex_count() == 3 * s);
        CHECK(outer.edge_count() == 3 * s);
        CHECK(connected_components(outer).size() == 1);
        for (int v = 0; v < outer.vertex_count(); ++v) CHECK(outer.degree(v) == 2);
    }

    // p10: G_a is two disjoint edges, G_b and G_c are pentagons
    CHECK(is_isomorphic(local_graph(p10(), VertexSet::of({0})).graph,
                        disjoint_union(complete(2), complete(2)))
              .has_value());
    for (int hub : {1, 2})
        CHECK(is_isomorphic(local_graph(p10(), VertexSet::of({hub})).graph, cycle(5)).has_value());

    // p12: the local graphs of a, b, c, d are all pentagons
    for (int hub : {0, 1, 2, 3})
        CHECK(is_isomorphic(local_graph(p12(), VertexSet::of({hub})).graph, cycle(5)).has_value());
}

TEST_CASE("every vertex deletion neighborhood of an exceptional graph is triangle-free W2") {
    for (const Graph& g : {q9(), q12(), p10(), p12()}) {
        int alpha = independence_number(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CAPTURE(to_graph6(g));
            CAPTURE(v);
            Graph gv = local_graph(g, VertexSet::of({v})).graph;
            CHECK(!gv.has_isolated_vertex());
            CHECK(is_triangle_free(gv));
            CHECK(is_w2(gv));
            CHECK(independence_number(gv) == alpha - 1);
        }
    }
}

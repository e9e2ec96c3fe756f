#include "doctest.h"

#include "eisq/gallery.hpp"
#include "eisq/independence.hpp"
#include "test_util.hpp"

using namespace eisq;

TEST_CASE("maximal independent sets against the subset oracle") {
    Graph c4 = cycle(4);
    auto mis = maximal_independent_sets(c4);
    REQUIRE(mis.size() == 2);
    CHECK(mis[0] == VertexSet::of({0, 2}));
    CHECK(mis[1] == VertexSet::of({1, 3}));

    auto five = maximal_independent_sets(cycle(5));
    CHECK(five.size() == 5);
    for (VertexSet s : five) CHECK(s.size() == 2);

    test_util::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = test_util::random_graph(rng, rng.below(10), 20 + rng.below(70));
        CHECK(maximal_independent_sets(g) == test_util::brute_maximal_independent_sets(g));
    }
}

TEST_CASE("independence numbers") {
    CHECK(independence_number(Graph::empty(0)) == 0);
    CHECK(independence_number(complete(7)) == 1);
    CHECK(independence_number(cycle(5)) == test_util::brute_independence_number(cycle(5)));
    CHECK(independence_number(cycle(5)) == 2);
    CHECK(independence_number(q9()) == 3);
    CHECK(independence_number(q9()) == test_util::brute_independence_number(q9()));
    CHECK(independence_number(q12()) == 4);

    test_util::Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = test_util::random_graph(rng, rng.below(11));
        CHECK(independence_number(g) == test_util::brute_independence_number(g));
    }
}

TEST_CASE("well-covered") {
    CHECK(is_well_covered(cycle(4)));
    CHECK(!is_well_covered(path(3)));
    CHECK(is_well_covered(cycle(7)));
    CHECK(independence_number(cycle(7)) == 3);
    CHECK(is_well_covered(Graph::empty(0)));
}

TEST_CASE("W2 membership") {
    CHECK(is_w2(cycle(5)));
    CHECK(!is_w2(cycle(4)));
    CHECK(is_w2(complete(2)));
    CHECK(is_w2(disjoint_union(complete(2), complete(2))));
    CHECK_THROWS_AS(is_w2(Graph::empty(3)), precondition_error);
    CHECK_THROWS_AS(is_w2(disjoint_union(complete(2), Graph::empty(1))), precondition_error);
}

TEST_CASE("locally triangle-free") {
    CHECK(is_locally_triangle_free(complete(4)));
    CHECK(is_locally_triangle_free(q12()));
    CHECK(is_locally_triangle_free(q9()));

    // triangle with a pendant vertex: every G_v misses the triangle
    Graph pendant = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(is_locally_triangle_free(pendant));

    // two disjoint triangles with a connector adjacent to one vertex of each:
    // G_v of a triangle vertex away from the connector still contains the
    // other triangle
    Graph two = Graph::from_edge_list(
        7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {6, 0}, {6, 3}});
    CHECK(!is_locally_triangle_free(two));
}

TEST_CASE("summary invariants") {
    test_util::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = test_util::random_graph(rng, 1 + rng.below(9));
        IndependenceSummary s = independence_summary(g);
        CHECK(s.alpha == independence_number(g));
        CHECK(s.mis_count == static_cast<int>(maximal_independent_sets(g).size()));
        CHECK(s.well_covered == (s.mis_sizes.front() == s.mis_sizes.back()));
        CHECK(s.alpha == s.mis_sizes.back());
    }
}

#include "doctest.h"

#include "eisq/classify.hpp"
#include "eisq/complex.hpp"
#include "eisq/independence.hpp"
#include "test_util.hpp"

using namespace eisq;

TEST_CASE("cm_square") {
    CHECK(is_cm_square(cycle(5)));
    CHECK(!is_cm_square(complete(3)));
    CHECK(!is_cm_square(cycle(4)));
    CHECK_THROWS_AS(is_cm_square(disjoint_union(complete(2), Graph::empty(1))),
                    precondition_error);
}

TEST_CASE("gcm_square") {
    for (int n = 2; n <= 7; ++n) CHECK(is_gcm_square(complete(n)));
    CHECK(is_gcm_square(q9()));
    // C4 is well-covered and every G_v is a single vertex, so the local
    // condition is vacuous
    CHECK(is_gcm_square(cycle(4)));
    CHECK(!is_buchsbaum_square(cycle(4)));
}

TEST_CASE("buchsbaum_square list") {
    CHECK(is_buchsbaum_square(q12()));
    CHECK(is_buchsbaum_square(disjoint_union(complete(2), complete(2))));
    CHECK(!is_buchsbaum_square(cycle(4)));
    CHECK(is_buchsbaum_square(complete(2)));  // triangle-free W2 clause, below the K_n bound
    CHECK(is_buchsbaum_square(b_graph(4)));
    CHECK(is_buchsbaum_square(cycle_complement(6)));
    CHECK(is_buchsbaum_square(path(4)));  // isomorphic to b_graph(4)
}

TEST_CASE("buchsbaum oracle") {
    PrimeField gf2(2);
    for (int n = 2; n <= 7; ++n) CHECK(buchsbaum_square_oracle(complete(n), gf2));
    CHECK(buchsbaum_square_oracle(b_graph(6), gf2));
    CHECK(!buchsbaum_square_oracle(cycle(4), gf2));
    CHECK(buchsbaum_square_oracle(q9(), gf2));
    CHECK(!buchsbaum_square_oracle(path(5), gf2));
}

TEST_CASE("gorenstein classification under the locally triangle-free hypothesis") {
    CHECK(is_gorenstein_locally_tf(p10()));
    CHECK(!is_gorenstein_locally_tf(complete(3)));
    CHECK(is_gorenstein_locally_tf(cycle(5)));
    CHECK(is_gorenstein_locally_tf(complete(2)));
    CHECK(!is_gorenstein_locally_tf(cycle(4)));
    // C6 contains triangles in some G_v? no: C6 is triangle-free, hence
    // locally so; it fails W2 instead
    CHECK(!is_gorenstein_locally_tf(cycle(6)));
    // not locally triangle-free: two triangles sharing nothing, joined badly
    Graph two = Graph::from_edge_list(
        7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {6, 0}, {6, 3}});
    CHECK_THROWS_AS(is_gorenstein_locally_tf(two), precondition_error);
}

TEST_CASE("locally triangle-free W2 classification") {
    CHECK(is_locally_tf_w2_classified(q9()));
    CHECK(is_locally_tf_w2_classified(q9()) ==
          (is_locally_triangle_free(q9()) && is_w2(q9())));

    CHECK(!is_locally_tf_w2_classified(cycle(7)));
    CHECK(is_locally_triangle_free(cycle(7)));
    CHECK(!is_w2(cycle(7)));

    Graph three_edges = disjoint_union(disjoint_union(complete(2), complete(2)), complete(2));
    CHECK(is_locally_tf_w2_classified(three_edges));
    CHECK(is_w2(three_edges));

    CHECK_THROWS_AS(is_locally_tf_w2_classified(cycle(5)), precondition_error);   // alpha 2
    CHECK_THROWS_AS(is_locally_tf_w2_classified(complete(4)), precondition_error);  // a join
}

TEST_CASE("classify reports") {
    ClassificationOptions with_oracle;
    with_oracle.with_oracle = true;

    ClassificationReport q12_report = classify(q12(), with_oracle);
    CHECK(q12_report.buchsbaum_square);
    CHECK(q12_report.gorenstein_locally_tf == true);
    CHECK(!q12_report.cm_square);
    CHECK(q12_report.gcm_square);
    CHECK(q12_report.alpha == 4);
    CHECK(q12_report.agreement_buchsbaum == true);
    CHECK(q12_report.agreement_gorenstein == true);
    REQUIRE(q12_report.gallery_match.has_value());
    CHECK(q12_report.gallery_match->family == GalleryFamily::q12);

    ClassificationReport c5_report = classify(cycle(5), with_oracle);
    CHECK(c5_report.cm_square);
    CHECK(c5_report.gcm_square);
    CHECK(c5_report.buchsbaum_square);
    CHECK(c5_report.gorenstein_locally_tf == true);
    CHECK(c5_report.agreement_buchsbaum == true);
    CHECK(c5_report.agreement_gorenstein == true);

    ClassificationReport k2_report = classify(complete(2));
    CHECK(k2_report.cm_square);
    CHECK(k2_report.gorenstein_locally_tf == true);
    CHECK(!k2_report.oracle_characteristic.has_value());

    CHECK_THROWS_AS(classify(Graph::empty(2)), precondition_error);
}

TEST_CASE("classification JSON shape") {
    ClassificationOptions opts;
    opts.with_oracle = true;
    std::string json = to_json(classify(q9(), opts));
    for (const char* field :
         {"\"graph6\":", "\"n\":9", "\"edges\":15", "\"alpha\":3", "\"well_covered\":true",
          "\"w2\":true", "\"triangle_free\":false", "\"locally_triangle_free\":true",
          "\"join_factor_count\":1", "\"gallery_match\":", "\"family\":\"q9\"",
          "\"cm_square\":false", "\"gcm_square\":true", "\"buchsbaum_square\":true",
          "\"gorenstein_locally_tf\":true", "\"oracle_characteristic\":2",
          "\"oracle_buchsbaum\":true", "\"oracle_gorenstein\":true",
          "\"agreement_buchsbaum\":true", "\"agreement_gorenstein\":true"}) {
        CAPTURE(field);
        CHECK(json.find(field) != std::string::npos);
    }
}

TEST_CASE("report fields stay consistent on random graphs") {
    test_util::Rng rng(61);
    PrimeField gf2(2);
    int tried = 0;
    while (tried < 25) {
        Graph g = test_util::random_graph(rng, 2 + rng.below(6), 30 + rng.below(50));
        if (g.has_isolated_vertex()) continue;
        ++tried;
        ClassificationOptions opts;
        opts.with_oracle = true;
        ClassificationReport r = classify(g, opts);
        CHECK(r.alpha == independence_number(g));
        if (r.cm_square) {
            CHECK(r.buchsbaum_square);
            CHECK(r.gcm_square);
        }
        CHECK(r.buchsbaum_square == is_buchsbaum_square(g));
        CHECK(*r.oracle_buchsbaum == buchsbaum_square_oracle(g, gf2));
        CHECK(*r.agreement_buchsbaum);
    }
}

TEST_CASE("oracle verdicts on the exceptional graphs themselves") {
    // the agreement sweep stops at n = 8; the four named graphs sit above it
    PrimeField gf2(2), gf32003(32003);
    for (const Graph& g : {q9(), q12(), p10(), p12()}) {
        CAPTURE(to_graph6(g));
        CHECK(is_buchsbaum_square(g));
        CHECK(buchsbaum_square_oracle(g, gf2));
        CHECK(buchsbaum_square_oracle(g, gf32003));
        CHECK(is_cm_complex(independence_complex(g), gf2));
    }
    // B_n and C_n^c above the sweep range as well
    for (int n = 9; n <= 12; ++n) {
        CHECK(is_buchsbaum_square(b_graph(n)));
        CHECK(buchsbaum_square_oracle(b_graph(n), gf2));
        CHECK(is_buchsbaum_square(cycle_complement(n)));
        CHECK(buchsbaum_square_oracle(cycle_complement(n), gf2));
        CHECK(is_buchsbaum_square(complete(n)));
        CHECK(buchsbaum_square_oracle(complete(n), gf2));
    }
}

TEST_CASE("list and oracle stay in agreement on random graphs past the sweep range") {
    test_util::Rng rng(62);
    PrimeField gf2(2);
    int tried = 0;
    while (tried < 150) {
        int n = 9 + rng.below(2);
        Graph g = test_util::random_graph(rng, n, 15 + rng.below(70));
        if (g.has_isolated_vertex()) continue;
        ++tried;
        CAPTURE(to_graph6(g));
        CHECK(is_buchsbaum_square(g) == buchsbaum_square_oracle(g, gf2));
    }
}

#include "doctest.h"

#include <algorithm>
#include <set>

#include "eisq/enumerate.hpp"
#include "eisq/gallery.hpp"
#include "test_util.hpp"

using namespace eisq;

namespace {

// all-permutations certificate, independent of the library's pruned search
std::uint64_t brute_certificate(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t value = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                value = (value << 1) |
                        (g.has_edge(perm[static_cast<std::size_t>(i)],
                                    perm[static_cast<std::size_t>(j)])
                             ? 1u
                             : 0u);
        best = std::min(best, value);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n <= 1 ? 0 : best;
}

}  // namespace

TEST_CASE("canonical certificates match the all-permutations oracle") {
    test_util::Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = test_util::random_graph(rng, 1 + rng.below(6), 10 + rng.below(80));
        CHECK(canonical_certificate(g) == brute_certificate(g));
    }
    // symmetric worst cases
    CHECK(canonical_certificate(Graph::empty(9)) == 0);
    CHECK(canonical_certificate(complete(9)) == (1ull << 36) - 1);
    for (const Graph& g : {cycle(6), disjoint_union(complete(3), complete(3)),
                           cycle_complement(7), b_graph(6)})
        CHECK(canonical_certificate(g) == brute_certificate(g));
}

TEST_CASE("certificates are isomorphism invariants") {
    test_util::Rng rng(72);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.below(9);
        Graph g = test_util::random_graph(rng, n);
        Graph h = relabel(g, test_util::random_permutation(rng, n));
        CHECK(canonical_certificate(g) == canonical_certificate(h));
    }
}

TEST_CASE("class counts for small orders") {
    const long long expected[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(static_cast<long long>(enumerate_graphs(n).size()) == expected[n]);
    }
    CHECK(enumerate_graphs(4, {.no_isolated = true}).size() == 7);
    CHECK(enumerate_graphs(1, {.no_isolated = true}).empty());
    CHECK(enumerate_graphs(4, {.connected = true}).size() == 6);
    CHECK(enumerate_graphs(6, {.connected = true}).size() == 112);
}

TEST_CASE("enumerated representatives are pairwise non-isomorphic and exhaustive") {
    // exhaustive: every labeled graph on 5 vertices is isomorphic to exactly
    // one representative
    auto reps = enumerate_graphs(5);
    std::set<std::uint64_t> certs;
    for (const Graph& g : reps) certs.insert(brute_certificate(g));
    CHECK(certs.size() == reps.size());

    std::set<std::uint64_t> all_certs;
    for (std::uint64_t bits = 0; bits < (1u << 10); ++bits) {
        std::vector<std::pair<int, int>> edges;
        int slot = 0;
        for (int j = 1; j < 5; ++j)
            for (int i = 0; i < j; ++i, ++slot)
                if ((bits >> slot) & 1u) edges.emplace_back(i, j);
        all_certs.insert(brute_certificate(Graph::from_edge_list(5, edges)));
    }
    CHECK(all_certs == certs);
}

TEST_CASE("deterministic stream order") {
    auto first = enumerate_graphs(6);
    auto second = enumerate_graphs(6);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);

    std::vector<Graph> streamed;
    for_each_graph(6, {}, [&streamed](const Graph& g) { streamed.push_back(g); });
    CHECK(streamed.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(streamed[i] == first[i]);
}

TEST_CASE("enumeration bounds") {
    CHECK_THROWS_AS(enumerate_graphs(0), precondition_error);
    CHECK_THROWS_AS(enumerate_graphs(10), precondition_error);
    CHECK(enumerate_graphs(1).size() == 1);
}

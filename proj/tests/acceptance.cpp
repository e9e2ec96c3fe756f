// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen here; the sweeps recompute everything
// from scratch.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eisq/classify.hpp"
#include "eisq/complex.hpp"
#include "eisq/enumerate.hpp"
#include "eisq/gallery.hpp"
#include "eisq/homology.hpp"
#include "eisq/independence.hpp"
#include "eisq/verify.hpp"

using namespace eisq;

namespace {

int failures = 0;

void report(int index, const char* label, bool ok, double seconds) {
    std::printf("[%d/7] %s  %-55s (%.2f s)\n", index, ok ? "PASS" : "FAIL", label, seconds);
    if (!ok) ++failures;
}

double run_timed(const std::function<bool()>& body, bool& ok) {
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
        ok = false;
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const CheckResult* find_check(const VerificationReport& report_, const std::string& name) {
    for (const CheckResult& check : report_.checks)
        if (check.name == name) return &check;
    return nullptr;
}

bool clean(const VerificationReport& report_, const std::string& name,
           std::uint64_t* checked_out = nullptr) {
    const CheckResult* check = find_check(report_, name);
    if (!check) {
        std::printf("      missing check %s\n", name.c_str());
        return false;
    }
    if (checked_out) *checked_out = check->checked;
    if (!check->counterexamples.empty()) {
        for (const std::string& cex : check->counterexamples)
            std::printf("      %s counterexample: %s\n", name.c_str(), cex.c_str());
        return false;
    }
    if (check->refused != 0) {
        std::printf("      %s refused %llu graphs\n", name.c_str(),
                    static_cast<unsigned long long>(check->refused));
        return false;
    }
    return check->checked > 0;
}

std::vector<long long> betti_from_zero(const HomologyProfile& profile) {
    return {profile.betti.begin() + 1, profile.betti.end()};
}

}  // namespace

int main() {
    // 1. the q12 facet table and face vector, exact, under one second
    {
        bool ok = false;
        double secs = run_timed([] {
            const int table[33][4] = {
                {0, 6, 7, 8},   {0, 6, 7, 11},  {0, 6, 8, 10}, {0, 6, 10, 11}, {0, 7, 8, 9},
                {0, 7, 9, 11},  {0, 8, 9, 10},  {0, 9, 10, 11},{1, 3, 4, 5},   {1, 3, 4, 11},
                {1, 3, 5, 10},  {1, 3, 10, 11}, {1, 4, 5, 9},  {1, 4, 9, 11},  {1, 5, 9, 10},
                {1, 9, 10, 11}, {2, 3, 4, 5},   {2, 3, 4, 6},  {2, 3, 5, 8},   {2, 3, 6, 8},
                {2, 4, 5, 7},   {2, 4, 6, 7},   {2, 5, 7, 8},  {2, 6, 7, 8},   {3, 4, 6, 11},
                {3, 5, 8, 10},  {3, 6, 8, 10},  {3, 6, 10, 11},{4, 5, 7, 9},   {4, 6, 7, 11},
                {4, 7, 9, 11},  {5, 7, 8, 9},   {5, 8, 9, 10},
            };
            std::vector<VertexSet> expected;
            for (const auto& row : table)
                expected.push_back(VertexSet::of({row[0], row[1], row[2], row[3]}));
            std::sort(expected.begin(), expected.end(), lex_less);
            if (maximal_independent_sets(q12()) != expected) return false;
            return f_vector(independence_complex(q12())) == FVector{{12, 45, 66, 33}};
        }, ok);
        report(1, "q12 facet table and face vector (12,45,66,33)", ok && secs < 1.0, secs);
    }

    // 2. sphere Betti profiles over GF(2) and GF(32003), under ten seconds
    {
        bool ok = false;
        double secs = run_timed([] {
            for (std::uint32_t p : {2u, 32003u}) {
                PrimeField field(p);
                for (int n = 4; n <= 12; ++n)
                    if (betti_from_zero(reduced_betti_numbers(
                            independence_complex(cycle_complement(n)), field)) !=
                        std::vector<long long>{0, 1})
                        return false;
                for (const Graph& g : {q9(), p10(), p12()})
                    if (betti_from_zero(reduced_betti_numbers(independence_complex(g), field)) !=
                        std::vector<long long>{0, 0, 1})
                        return false;
                if (betti_from_zero(reduced_betti_numbers(independence_complex(q12()), field)) !=
                    std::vector<long long>{0, 0, 0, 1})
                    return false;
            }
            return true;
        }, ok);
        report(2, "sphere homology of C_n^c, q9, p10, p12, q12", ok && secs < 10.0, secs);
    }

    // 3. list-based Buchsbaum classification agrees with the structural
    //    criterion over GF(2) on every class without isolated vertices, n <= 8
    {
        bool ok = false;
        double secs = run_timed([] {
            VerifyOptions opts;
            opts.which = {"buchsbaum_agreement"};
            opts.jobs = 0;
            VerificationReport rep = verify_theorems(opts);
            std::uint64_t checked = 0;
            bool good = clean(rep, "buchsbaum_agreement", &checked);
            if (checked != 12345) {
                std::printf("      domain size %llu, expected 12345\n",
                            static_cast<unsigned long long>(checked));
                return false;
            }
            return good;
        }, ok);
        report(3, "Buchsbaum agreement sweep, n <= 8 (12345 classes)", ok && secs < 1800.0, secs);
    }

    // 4. Gorenstein classification agrees with the sphere-link criterion on
    //    locally triangle-free classes, n <= 8, plus both fields on the four
    //    exceptional graphs
    {
        bool ok = false;
        double secs = run_timed([] {
            VerifyOptions opts;
            opts.which = {"gorenstein_agreement"};
            opts.jobs = 0;
            VerificationReport rep = verify_theorems(opts);
            if (!clean(rep, "gorenstein_agreement")) return false;
            for (std::uint32_t p : {2u, 32003u}) {
                PrimeField field(p);
                for (const Graph& g : {q9(), q12(), p10(), p12()})
                    if (!is_gorenstein_complex(independence_complex(g), field)) return false;
            }
            return true;
        }, ok);
        report(4, "Gorenstein agreement sweep, n <= 8, + gallery fields", ok, secs);
    }

    // 5. locally triangle-free W2 classes with alpha >= 3, join-free, n <= 9:
    //    exactly the triangle-free W2 classes plus q9; q12, p10, p12 checked
    //    individually
    {
        bool ok = false;
        double secs = run_timed([] {
            VerifyOptions opts;
            opts.which = {"locally_tf_w2_classification"};
            opts.jobs = 0;
            VerificationReport rep = verify_theorems(opts);
            if (!clean(rep, "locally_tf_w2_classification")) return false;
            const CheckResult* check = find_check(rep, "locally_tf_w2_classification");
            if (check->notes.size() != 1) {
                std::printf("      exceptional bucket holds %zu graphs, expected 1\n",
                            check->notes.size());
                return false;
            }
            if (!is_isomorphic(parse_graph6(check->notes[0]), q9())) return false;
            for (const Graph& g : {q12(), p10(), p12()}) {
                if (!is_locally_tf_w2_classified(g)) return false;
                if (!(is_locally_triangle_free(g) && is_w2(g))) return false;
            }
            return true;
        }, ok);
        report(5, "locally triangle-free W2 classification, n <= 9", ok, secs);
    }

    // 6. lemma suite at the stated quantifier domains; the alpha=2
    //    classification is literal to n = 7 and join-aware to n = 8, where
    //    join(2K2, 2K2) is the one graph whose complement is a disjoint
    //    union of cycles rather than a single cycle
    {
        bool ok = false;
        double secs = run_timed([] {
            VerifyOptions opts;
            opts.which = {"local_subgraph_well_covered", "local_subgraph_w2",
                          "bipartite_w2_matching", "edge_local_subgraph",
                          "join_iff_complex_disconnected", "low_alpha_classification",
                          "low_alpha_join_structure", "triangle_edge_nonempty",
                          "neighborhood_structure", "disjoint_neighborhoods",
                          "w2_from_local_components"};
            opts.jobs = 0;
            VerificationReport rep = verify_theorems(opts);
            bool good = true;
            for (const std::string& name :
                 {std::string("local_subgraph_well_covered"), std::string("local_subgraph_w2"),
                  std::string("bipartite_w2_matching"), std::string("edge_local_subgraph"),
                  std::string("join_iff_complex_disconnected"),
                  std::string("low_alpha_classification"),
                  std::string("low_alpha_join_structure"),
                  std::string("triangle_edge_nonempty"), std::string("neighborhood_structure"),
                  std::string("disjoint_neighborhoods"), std::string("w2_from_local_components")})
                good = clean(rep, name) && good;
            // the join finding at n = 8 is exactly one class: join(2K2, 2K2)
            const CheckResult* joins = find_check(rep, "low_alpha_join_structure");
            if (!joins || joins->notes.size() != 1) {
                std::printf("      expected exactly one alpha=2 join class at n <= 8\n");
                return false;
            }
            Graph two_k2 = disjoint_union(complete(2), complete(2));
            if (!is_isomorphic(parse_graph6(joins->notes[0]), join(two_k2, two_k2))) return false;
            std::printf("      finding: %s = join(2K2,2K2) is locally triangle-free W2 with "
                        "alpha=2 but not a cycle complement\n",
                        joins->notes[0].c_str());
            return good;
        }, ok);
        report(6, "local-structure lemmas, exhaustive at small orders", ok, secs);
    }

    // 7. plumbing: graph6 round-trip on all classes n <= 6, generator counts
    //    vs the brute-force dedup oracle, Euler-Poincare on every profile
    {
        bool ok = false;
        double secs = run_timed([] {
            VerifyOptions opts;
            opts.which = {"graph6_roundtrip", "enumeration_counts"};
            opts.jobs = 0;
            VerificationReport rep = verify_theorems(opts);
            std::uint64_t round_trips = 0;
            if (!clean(rep, "graph6_roundtrip", &round_trips)) return false;
            if (round_trips != 1 + 2 + 4 + 11 + 34 + 156) return false;
            if (!clean(rep, "enumeration_counts")) return false;
            if (enumerate_graphs(4).size() != 11 || enumerate_graphs(5).size() != 34) return false;
            // the Euler-Poincare identity is asserted inside every Betti
            // computation; drive it across all classes with n <= 6
            PrimeField gf2(2);
            for (int n = 1; n <= 6; ++n)
                for (const Graph& g : enumerate_graphs(n))
                    reduced_betti_numbers(independence_complex(g), gf2);
            return true;
        }, ok);
        report(7, "graph6 round-trip, enumeration counts, Euler-Poincare", ok, secs);
    }

    if (failures == 0) std::printf("acceptance: all 7 criteria passed\n");
    else std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}

#include "eisq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <thread>
#include <unordered_set>

#include "eisq/classify.hpp"
#include "eisq/complex.hpp"
#include "eisq/enumerate.hpp"
#include "eisq/gallery.hpp"
#include "eisq/homology.hpp"
#include "eisq/independence.hpp"
#include "json_writer.hpp"

namespace eisq {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Lazily computed per-graph predicates shared by all checks on one graph.
struct GraphFacts {
    const Graph& g;
    const Budget* budget;

    std::optional<bool> no_iso_, wc_, w2_, tf_, ltf_;
    std::optional<int> alpha_, joins_;

    explicit GraphFacts(const Graph& graph, const Budget* b) : g(graph), budget(b) {}

    bool no_isolated() {
        if (!no_iso_) no_iso_ = !g.has_isolated_vertex();
        return *no_iso_;
    }
    bool well_covered() {
        if (!wc_) wc_ = is_well_covered(g, budget);
        return *wc_;
    }
    bool w2() {
        if (!w2_) w2_ = well_covered() && is_w2(g, budget);
        return *w2_;
    }
    bool triangle_free() {
        if (!tf_) tf_ = is_triangle_free(g);
        return *tf_;
    }
    bool locally_triangle_free() {
        if (!ltf_) ltf_ = triangle_free() || is_locally_triangle_free(g);
        return *ltf_;
    }
    int alpha() {
        if (!alpha_) alpha_ = independence_number(g);
        return *alpha_;
    }
    int join_count() {
        if (!joins_) joins_ = static_cast<int>(join_factors(g).size());
        return *joins_;
    }
};

/// All independent sets of g (2^n scan; sweep orders are small).
std::vector<VertexSet> all_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool independent = true;
        for (std::uint64_t m = mask; m && independent; m &= m - 1)
            independent = (g.neighbors(__builtin_ctzll(m)).bits() & mask) == 0;
        if (independent) out.emplace_back(mask);
    }
    return out;
}

bool every_nontrivial_local_component_w2(const Graph& g, const Budget* budget) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        Subgraph gv = local_graph(g, VertexSet::of({v}));
        for (VertexSet comp : connected_components(gv.graph)) {
            if (comp.size() < 2) continue;
            if (!is_w2(induced(gv.graph, comp).graph, budget)) return false;
        }
    }
    return true;
}

bool matches_exceptional_four(const Graph& g) {
    auto id = match_gallery(g);
    if (!id) return false;
    switch (id->family) {
        case GalleryFamily::q9:
        case GalleryFamily::q12:
        case GalleryFamily::p10:
        case GalleryFamily::p12: return true;
        default: return false;
    }
}

// ---------------------------------------------------------------------------
// sweep checks: one callback per enumerated isomorphism class
// ---------------------------------------------------------------------------

struct SweepOutcome {
    bool in_domain = false;
    bool holds = true;
    std::vector<std::string> notes;
};

struct SweepCheck {
    const char* name;
    const char* domain;
    int default_max_n;
    SweepOutcome (*run)(GraphFacts&, const PrimeField&, const Budget*);
};

SweepOutcome sweep_buchsbaum_agreement(GraphFacts& f, const PrimeField& field, const Budget* budget) {
    SweepOutcome out;
    if (!f.no_isolated()) return out;
    out.in_domain = true;
    out.holds = is_buchsbaum_square(f.g, budget) == buchsbaum_square_oracle(f.g, field, budget);
    return out;
}

SweepOutcome sweep_gorenstein_agreement(GraphFacts& f, const PrimeField& field, const Budget* budget) {
    SweepOutcome out;
    if (!f.no_isolated() || !f.locally_triangle_free()) return out;
    out.in_domain = true;
    out.holds = is_gorenstein_locally_tf(f.g, budget) ==
                is_gorenstein_complex(independence_complex(f.g, budget), field, budget);
    return out;
}

SweepOutcome sweep_locally_tf_w2_classification(GraphFacts& f, const PrimeField&, const Budget*) {
    SweepOutcome out;
    if (!f.no_isolated() || f.alpha() < 3 || f.join_count() != 1) return out;
    out.in_domain = true;
    bool lhs = f.locally_triangle_free() && f.w2();
    bool tf_w2 = f.triangle_free() && f.w2();
    bool exceptional = matches_exceptional_four(f.g);
    out.holds = lhs == (tf_w2 || exceptional);
    if (lhs && !tf_w2) out.notes.push_back(to_graph6(f.g));
    return out;
}

SweepOutcome sweep_local_subgraph_well_covered(GraphFacts& f, const PrimeField&, const Budget* budget) {
    SweepOutcome out;
    if (!f.well_covered()) return out;
    out.in_domain = true;
    int alpha = f.alpha();
    for (VertexSet s : all_independent_sets(f.g)) {
        Graph h = local_graph(f.g, s).graph;
        if (!is_well_covered(h, budget) || independence_number(h) != alpha - s.size()) {
            out.holds = false;
            return out;
        }
    }
    return out;
}

SweepOutcome sweep_local_subgraph_w2(GraphFacts& f, const PrimeField&, const Budget* budget) {
    SweepOutcome out;
    if (!f.no_isolated() || !f.w2()) return out;
    out.in_domain = true;
    int alpha = f.alpha();
    for (VertexSet s : all_independent_sets(f.g)) {
        if (s.size() >= alpha) continue;
        Graph h = local_graph(f.g, s).graph;
        if (h.has_isolated_vertex() || !is_w2(h, budget)) {
            out.holds = false;
            return out;
        }
    }
    return out;
}

SweepOutcome sweep_edge_local_subgraph(GraphFacts& f, const PrimeField&, const Budget* budget) {
    SweepOutcome out;
    if (!f.no_isolated() || !f.w2() || !f.locally_triangle_free()) return out;
    out.in_domain = true;
    for (auto [a, b] : f.g.edges()) {
        Graph h = local_graph(f.g, VertexSet::of({a, b})).graph;
        if (h.vertex_count() == 0) continue;
        if (!is_well_covered(h, budget) || independence_number(h) != f.alpha() - 1) {
            out.holds = false;
            return out;
        }
    }
    return out;
}

SweepOutcome sweep_join_iff_disconnected(GraphFacts& f, const PrimeField&, const Budget* budget) {
    SweepOutcome out;
    out.in_domain = true;
    bool joins = f.join_count() >= 2;
    bool disconnected = !is_connected_complex(independence_complex(f.g, budget));
    out.holds = joins == disconnected;
    return out;
}

SweepOutcome sweep_low_alpha_classification(GraphFacts& f, const PrimeField&, const Budget*) {
    SweepOutcome out;
    if (!f.no_isolated() || !f.w2() || !f.locally_triangle_free()) return out;
    int n = f.g.vertex_count();
    if (f.alpha() == 1) {
        out.in_domain = true;
        out.holds = n >= 2 && f.g.edge_count() == n * (n - 1) / 2;
    } else if (f.alpha() == 2) {
        out.in_domain = true;
        out.holds = n >= 4 && is_isomorphic(f.g, cycle_complement(n)).has_value();
    }
    return out;
}

// The single-cycle conclusion of the alpha=2 clause needs join-freeness: the
// complement of a locally triangle-free W2 graph with alpha=2 is 2-regular
// but not necessarily connected. join(2K2, 2K2) on 8 vertices satisfies
// every hypothesis and its complement splits into two 4-cycles. This check
// verifies the join-aware statement and reports join instances as notes.
SweepOutcome sweep_low_alpha_join_structure(GraphFacts& f, const PrimeField&, const Budget*) {
    SweepOutcome out;
    if (!f.no_isolated() || !f.w2() || !f.locally_triangle_free() || f.alpha() != 2) return out;
    out.in_domain = true;
    Graph skeleton = complement(f.g);
    for (VertexSet comp : connected_components(skeleton)) {
        Graph piece = induced(skeleton, comp).graph;
        bool is_long_cycle = comp.size() >= 4 && piece.edge_count() == comp.size() &&
                             connected_components(piece).size() == 1;
        for (int v = 0; v < piece.vertex_count() && is_long_cycle; ++v)
            is_long_cycle = piece.degree(v) == 2;
        if (!is_long_cycle) {
            out.holds = false;
            return out;
        }
    }
    if (f.join_count() == 1) {
        out.holds = is_isomorphic(f.g, cycle_complement(f.g.vertex_count())).has_value();
    } else {
        out.notes.push_back(to_graph6(f.g));
    }
    return out;
}

SweepOutcome sweep_triangle_edge_nonempty(GraphFacts& f, const PrimeField&, const Budget*) {
    SweepOutcome out;
    if (!f.no_isolated() || f.alpha() < 3 || !f.w2() || !f.locally_triangle_free() ||
        f.join_count() != 1)
        return out;
    out.in_domain = true;
    for (auto [a, b] : f.g.edges()) {
        if (f.g.neighbors(a).intersect(f.g.neighbors(b)).empty()) continue;  // not in a triangle
        Graph h = local_graph(f.g, VertexSet::of({a, b})).graph;
        if (h.vertex_count() == 0 || independence_number(h) != f.alpha() - 1) {
            out.holds = false;
            return out;
        }
    }
    return out;
}

SweepOutcome sweep_neighborhood_structure(GraphFacts& f, const PrimeField&, const Budget*) {
    SweepOutcome out;
    if (!f.no_isolated() || f.alpha() < 3 || !f.w2() || !f.locally_triangle_free()) return out;
    out.in_domain = true;
    for (auto [x, y] : f.g.edges()) {
        for (auto [a, b] : {std::pair(x, y), std::pair(y, x)}) {
            if (f.g.neighbors(a).intersect(f.g.neighbors(b)).empty()) continue;
            Graph gab = local_graph(f.g, VertexSet::of({a, b})).graph;
            if (gab.vertex_count() == 0) continue;
            VertexSet a_side =
                f.g.neighbors(a).minus(closed_neighborhood(f.g, VertexSet::of({b})));
            Graph ga = induced(f.g, a_side).graph;
            if (ga.edge_count() == 0) continue;  // A independent: other branch of the dichotomy
            bool structure_ok = ga.edge_count() == 1 && a_side.size() == f.alpha();
            bool size_ok = gab.vertex_count() == 2 * (f.alpha() - 2);
            if (!structure_ok || !size_ok) {
                out.holds = false;
                return out;
            }
        }
    }
    return out;
}

SweepOutcome sweep_disjoint_neighborhoods(GraphFacts& f, const PrimeField&, const Budget*) {
    SweepOutcome out;
    if (!f.no_isolated() || f.alpha() < 3 || !f.w2() || !f.locally_triangle_free() ||
        f.join_count() != 1)
        return out;
    out.in_domain = true;
    for (auto [a, b] : f.g.edges()) {
        if (local_graph(f.g, VertexSet::of({a, b})).graph.vertex_count() != 0) continue;
        if (!f.g.neighbors(a).intersect(f.g.neighbors(b)).empty()) {
            out.holds = false;
            return out;
        }
    }
    return out;
}

SweepOutcome sweep_w2_from_local_components(GraphFacts& f, const PrimeField&, const Budget* budget) {
    SweepOutcome out;
    if (!f.no_isolated() || f.alpha() < 3 || !f.well_covered() || !f.locally_triangle_free() ||
        f.join_count() != 1)
        return out;
    if (connected_components(f.g).size() != 1) return out;
    if (!every_nontrivial_local_component_w2(f.g, budget)) return out;
    out.in_domain = true;
    out.holds = f.w2();
    return out;
}

SweepOutcome sweep_characteristic_agreement(GraphFacts& f, const PrimeField&, const Budget* budget) {
    SweepOutcome out;
    if (!f.no_isolated()) return out;
    out.in_domain = true;
    static const PrimeField gf2(2), gf32003(32003);
    SimplicialComplex delta = independence_complex(f.g, budget);
    out.holds = reduced_betti_numbers(delta, gf2).betti == reduced_betti_numbers(delta, gf32003).betti;
    return out;
}

SweepOutcome sweep_classification_implications(GraphFacts& f, const PrimeField& field,
                                               const Budget* budget) {
    SweepOutcome out;
    if (!f.no_isolated()) return out;
    out.in_domain = true;
    bool cm = is_cm_square(f.g, budget);
    if (cm && !(is_buchsbaum_square(f.g, budget) && is_gcm_square(f.g, budget))) {
        out.holds = false;
        return out;
    }
    SimplicialComplex delta = independence_complex(f.g, budget);
    if (is_gorenstein_complex(delta, field, budget) && !is_cm_complex(delta, field, budget))
        out.holds = false;
    return out;
}

SweepOutcome sweep_graph6_roundtrip(GraphFacts& f, const PrimeField&, const Budget*) {
    SweepOutcome out;
    out.in_domain = true;
    std::string line = to_graph6(f.g);
    out.holds = parse_graph6(line) == f.g && to_graph6(parse_graph6(line)) == line;
    return out;
}

constexpr SweepCheck kSweepChecks[] = {
    {"buchsbaum_agreement",
     "classification list vs structural criterion, all classes without isolated vertices", 8,
     sweep_buchsbaum_agreement},
    {"gorenstein_agreement",
     "classification list vs sphere-link criterion, locally triangle-free classes without "
     "isolated vertices",
     8, sweep_gorenstein_agreement},
    {"locally_tf_w2_classification",
     "locally triangle-free W2 = triangle-free W2 or exceptional; alpha >= 3, join-free classes "
     "without isolated vertices",
     9, sweep_locally_tf_w2_classification},
    {"local_subgraph_well_covered",
     "G_S well-covered with alpha drop |S|, all well-covered classes, all independent S", 7,
     sweep_local_subgraph_well_covered},
    {"local_subgraph_w2", "G_S in W2 without isolated vertices, W2 classes, independent |S| < alpha",
     7, sweep_local_subgraph_w2},
    {"edge_local_subgraph",
     "G_ab empty or well-covered with alpha-1, locally triangle-free W2 classes", 8,
     sweep_edge_local_subgraph},
    {"join_iff_complex_disconnected",
     "join decomposition exists iff the independence complex is disconnected, all classes", 8,
     sweep_join_iff_disconnected},
    // the literal alpha=2 clause fails at n = 8 on join(2K2, 2K2), so this
    // check keeps the n <= 7 bound; low_alpha_join_structure carries the
    // corrected statement one order further
    {"low_alpha_classification",
     "locally triangle-free W2 classes: alpha=1 complete, alpha=2 a cycle complement", 7,
     sweep_low_alpha_classification},
    {"low_alpha_join_structure",
     "locally triangle-free W2 classes with alpha=2: the complement is a disjoint union of "
     "cycles of length >= 4; join-free ones are cycle complements",
     8, sweep_low_alpha_join_structure},
    {"triangle_edge_nonempty",
     "G_ab nonempty with alpha-1 for triangle edges; locally triangle-free W2, alpha >= 3, "
     "join-free",
     8, sweep_triangle_edge_nonempty},
    {"neighborhood_structure",
     "N(a) minus N[b] carries one edge plus alpha-2 isolated vertices when not independent", 8,
     sweep_neighborhood_structure},
    {"disjoint_neighborhoods",
     "empty G_uv for an edge uv forces disjoint neighborhoods; locally triangle-free W2, "
     "alpha >= 3, join-free",
     8, sweep_disjoint_neighborhoods},
    // the hypothesis set is empty below n = 8 and holds one triangle-free
    // instance at n = 8; running to n = 9 brings in q9, the first instance
    // with triangles
    {"w2_from_local_components",
     "connected well-covered locally triangle-free, alpha >= 3, join-free, local components in "
     "W2, implies W2",
     9, sweep_w2_from_local_components},
    {"characteristic_agreement", "reduced Betti numbers agree over GF(2) and GF(32003)", 8,
     sweep_characteristic_agreement},
    {"classification_implications",
     "CM implies gCM and Buchsbaum; Gorenstein complexes are Cohen-Macaulay", 8,
     sweep_classification_implications},
    {"graph6_roundtrip", "graph6 encode/decode identity on all classes", 6, sweep_graph6_roundtrip},
};

// ---------------------------------------------------------------------------
// standalone checks
// ---------------------------------------------------------------------------

/// Exhaustive bipartite sweep: every bipartite graph on up to max_n vertices
/// arises (up to isomorphism) from a biadjacency matrix with row values
/// non-decreasing, enumerated directly as multisets of row masks.
CheckResult check_bipartite_w2_matching(int max_n, int timeout_ms) {
    CheckResult result;
    result.name = "bipartite_w2_matching";
    result.domain = "bipartite W2 graphs are disjoint unions of edges, all bipartite graphs";
    auto start = clock_type::now();

    long long seen = 0;
    for (int total = 2; total <= max_n; ++total) {
        for (int a = 1; a <= total / 2; ++a) {
            int b = total - a;
            // rows[0] <= ... <= rows[a-1], each nonzero so no left vertex is
            // isolated; right coverage checked below
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(a), 1);
            std::uint64_t row_limit = 1ull << b;
            while (true) {
                std::uint64_t cover = 0;
                for (std::uint64_t r : rows) cover |= r;
                if (cover == row_limit - 1) {
                    ++seen;
                    std::vector<std::uint64_t> adj(static_cast<std::size_t>(total), 0);
                    for (int i = 0; i < a; ++i) {
                        adj[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] << a;
                        for (std::uint64_t m = rows[static_cast<std::size_t>(i)]; m; m &= m - 1)
                            adj[static_cast<std::size_t>(a + __builtin_ctzll(m))] |= 1ull << i;
                    }
                    Graph g = Graph::from_adjacency(total, std::move(adj));
                    Budget budget{std::chrono::milliseconds(timeout_ms)};
                    try {
                        if (is_well_covered(g, &budget) && is_w2(g, &budget)) {
                            ++result.checked;
                            bool all_degree_one = true;
                            for (int v = 0; v < total; ++v)
                                if (g.degree(v) != 1) all_degree_one = false;
                            if (!all_degree_one) result.counterexamples.push_back(to_graph6(g));
                        }
                    } catch (const timeout_error&) {
                        ++result.refused;
                    }
                }
                // next non-decreasing row vector
                int pos = a - 1;
                while (pos >= 0 && rows[static_cast<std::size_t>(pos)] == row_limit - 1) --pos;
                if (pos < 0) break;
                std::uint64_t next = rows[static_cast<std::size_t>(pos)] + 1;
                for (int i = pos; i < a; ++i) rows[static_cast<std::size_t>(i)] = next;
            }
        }
    }
    result.stats.emplace_back("bipartite_candidates", seen);
    std::sort(result.counterexamples.begin(), result.counterexamples.end());
    result.seconds = seconds_since(start);
    return result;
}

void expect_profile(const Graph& g, const PrimeField& field, const std::vector<long long>& expected,
                    CheckResult& result) {
    // expected lists reduced Betti numbers for dimensions 0..top
    ++result.checked;
    HomologyProfile profile = reduced_betti_numbers(independence_complex(g), field);
    std::vector<long long> got(profile.betti.begin() + 1, profile.betti.end());
    if (profile.reduced_betti(-1) != 0 || got != expected)
        result.counterexamples.push_back(to_graph6(g));
}

CheckResult check_gallery_complexes() {
    CheckResult result;
    result.name = "gallery_complexes";
    result.domain =
        "facet table, face vectors, sphere Betti profiles and Gorenstein verdicts of the named "
        "graphs over GF(2) and GF(32003)";
    auto start = clock_type::now();

    PrimeField gf2(2), gf32003(32003);

    // q12 facet table is asserted inside q12(); recheck the f-vector here
    ++result.checked;
    if (f_vector(independence_complex(q12())) != FVector{{12, 45, 66, 33}})
        result.counterexamples.push_back(to_graph6(q12()));
    ++result.checked;
    if (f_vector(independence_complex(q9())) != FVector{{9, 21, 14}})
        result.counterexamples.push_back(to_graph6(q9()));
    ++result.checked;
    if (f_vector(independence_complex(p12())) != FVector{{12, 30, 20}})
        result.counterexamples.push_back(to_graph6(p12()));

    for (const PrimeField& field : {gf2, gf32003}) {
        for (int n = 4; n <= 12; ++n) expect_profile(cycle_complement(n), field, {0, 1}, result);
        for (const Graph& g : {q9(), p10(), p12()}) expect_profile(g, field, {0, 0, 1}, result);
        expect_profile(q12(), field, {0, 0, 0, 1}, result);
        for (const Graph& g : {q9(), q12(), p10(), p12()}) {
            ++result.checked;
            if (!is_gorenstein_complex(independence_complex(g), field))
                result.counterexamples.push_back(to_graph6(g));
        }
    }
    std::sort(result.counterexamples.begin(), result.counterexamples.end());
    result.seconds = seconds_since(start);
    return result;
}

/// Independent oracle for the generator: enumerate every labeled graph on n
/// vertices and count distinct canonical forms, where the canonical form is
/// the minimum packed adjacency over all n! permutations.
long long brute_force_class_count(int n, bool no_isolated) {
    if (n > 6) throw precondition_error("brute-force dedup oracle is sized for n <= 6");
    int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);

    std::unordered_set<std::uint64_t> classes;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::uint64_t graph_bits = 0; graph_bits < (1ull << bits); ++graph_bits) {
        bool adjacency[7][7] = {};
        for (int s = 0; s < bits; ++s)
            if ((graph_bits >> s) & 1u) {
                auto [i, j] = slots[static_cast<std::size_t>(s)];
                adjacency[i][j] = adjacency[j][i] = true;
            }
        if (no_isolated) {
            bool bad = false;
            for (int v = 0; v < n && !bad; ++v) {
                bool any = false;
                for (int u = 0; u < n; ++u) any = any || adjacency[v][u];
                bad = !any;
            }
            if (bad) continue;
        }
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
        std::uint64_t best = ~0ull;
        do {
            std::uint64_t value = 0;
            for (auto [i, j] : slots)
                value = (value << 1) |
                        (adjacency[perm[static_cast<std::size_t>(i)]][perm[static_cast<std::size_t>(j)]]
                             ? 1u
                             : 0u);
            best = std::min(best, value);
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return static_cast<long long>(classes.size());
}

CheckResult check_enumeration_counts(int max_n) {
    CheckResult result;
    result.name = "enumeration_counts";
    result.domain = "generator class counts match brute-force canonical deduplication";
    auto start = clock_type::now();
    for (int n = 1; n <= max_n; ++n) {
        for (bool no_isolated : {false, true}) {
            ++result.checked;
            long long generated =
                static_cast<long long>(enumerate_graphs(n, {.no_isolated = no_isolated}).size());
            long long expected = brute_force_class_count(n, no_isolated);
            result.stats.emplace_back(
                "n" + std::to_string(n) + (no_isolated ? "_no_isolated" : ""), generated);
            if (generated != expected)
                result.counterexamples.push_back("count mismatch at n=" + std::to_string(n) +
                                                 (no_isolated ? " (no isolated)" : "") + ": " +
                                                 std::to_string(generated) + " vs " +
                                                 std::to_string(expected));
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

}  // namespace

std::vector<std::string> verify_check_names() {
    std::vector<std::string> names;
    for (const SweepCheck& check : kSweepChecks) names.emplace_back(check.name);
    names.emplace_back("bipartite_w2_matching");
    names.emplace_back("gallery_complexes");
    names.emplace_back("enumeration_counts");
    return names;
}

VerificationReport verify_theorems(const VerifyOptions& options) {
    auto start = clock_type::now();

    auto selected = [&options](std::string_view name) {
        if (options.which.empty()) return true;
        return std::find(options.which.begin(), options.which.end(), name) != options.which.end();
    };
    {
        auto known = verify_check_names();
        for (const std::string& name : options.which)
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw precondition_error("unknown verification check: " + name);
    }
    if (options.max_n > 9)
        throw precondition_error("built-in enumeration is capped at n = 9");

    PrimeField field(options.characteristic);
    VerificationReport report;
    report.characteristic = field.characteristic();

    std::vector<std::size_t> active;
    std::vector<int> effective_n;
    for (std::size_t i = 0; i < std::size(kSweepChecks); ++i) {
        if (!selected(kSweepChecks[i].name)) continue;
        active.push_back(i);
        int cap = kSweepChecks[i].default_max_n;
        if (options.max_n >= 0) cap = std::min(cap, options.max_n);
        effective_n.push_back(cap);
        report.checks.push_back(
            {kSweepChecks[i].name, kSweepChecks[i].domain, 0, 0, {}, {}, {}, 0.0});
    }

    int global_max = 0;
    for (int n : effective_n) global_max = std::max(global_max, n);
    report.max_n = global_max;

    int jobs = resolve_jobs(options.jobs);
    for (int n = 1; n <= global_max; ++n) {
        std::vector<Graph> graphs = enumerate_graphs(n);
        report.graphs_processed += graphs.size();

        struct WorkerTally {
            std::uint64_t checked = 0, refused = 0;
            std::vector<std::string> counterexamples, notes;
            double seconds = 0;
        };
        std::vector<std::vector<WorkerTally>> tallies(
            static_cast<std::size_t>(jobs),
            std::vector<WorkerTally>(active.size()));

        std::atomic<std::size_t> cursor{0};
        std::vector<std::exception_ptr> worker_errors(static_cast<std::size_t>(jobs));
        auto work = [&](int worker) {
            auto& local = tallies[static_cast<std::size_t>(worker)];
            try {
                for (;;) {
                    std::size_t index = cursor.fetch_add(1);
                    if (index >= graphs.size()) break;
                    const Graph& g = graphs[index];
                    std::optional<Budget> budget;
                    if (options.timeout_ms > 0)
                        budget.emplace(std::chrono::milliseconds(options.timeout_ms));
                    const Budget* budget_ptr = budget ? &*budget : nullptr;
                    GraphFacts facts(g, budget_ptr);
                    for (std::size_t c = 0; c < active.size(); ++c) {
                        if (effective_n[c] < n) continue;
                        const SweepCheck& check = kSweepChecks[active[c]];
                        auto check_start = clock_type::now();
                        try {
                            SweepOutcome outcome = check.run(facts, field, budget_ptr);
                            if (outcome.in_domain) {
                                ++local[c].checked;
                                if (!outcome.holds)
                                    local[c].counterexamples.push_back(to_graph6(g));
                                for (std::string& note : outcome.notes)
                                    local[c].notes.push_back(std::move(note));
                            }
                        } catch (const timeout_error&) {
                            ++local[c].refused;
                        }
                        local[c].seconds += seconds_since(check_start);
                    }
                }
            } catch (...) {
                worker_errors[static_cast<std::size_t>(worker)] = std::current_exception();
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
            for (std::thread& t : pool) t.join();
        }
        for (std::exception_ptr& error : worker_errors)
            if (error) std::rethrow_exception(error);

        for (std::size_t w = 0; w < tallies.size(); ++w)
            for (std::size_t c = 0; c < active.size(); ++c) {
                CheckResult& into = report.checks[c];
                WorkerTally& from = tallies[w][c];
                into.checked += from.checked;
                into.refused += from.refused;
                report.graphs_refused += from.refused;
                for (std::string& s : from.counterexamples)
                    into.counterexamples.push_back(std::move(s));
                for (std::string& s : from.notes) into.notes.push_back(std::move(s));
                into.seconds += from.seconds;
            }
    }
    for (CheckResult& check : report.checks) {
        std::sort(check.counterexamples.begin(), check.counterexamples.end());
        std::sort(check.notes.begin(), check.notes.end());
    }

    if (selected("bipartite_w2_matching")) {
        int cap = options.max_n >= 0 ? std::min(10, options.max_n + 1) : 10;
        report.checks.push_back(check_bipartite_w2_matching(cap, options.timeout_ms));
    }
    if (selected("gallery_complexes")) report.checks.push_back(check_gallery_complexes());
    if (selected("enumeration_counts")) {
        int cap = options.max_n >= 0 ? std::min(6, options.max_n) : 6;
        report.checks.push_back(check_enumeration_counts(cap));
    }

    report.seconds = seconds_since(start);
    return report;
}

std::string to_json(const CheckResult& check) {
    detail::JsonObject obj;
    obj.field("name", check.name)
        .field("domain", check.domain)
        .field("checked", static_cast<long long>(check.checked))
        .field("refused", static_cast<long long>(check.refused))
        .field("ok", check.ok())
        .raw("counterexamples", detail::json_string_array(check.counterexamples))
        .raw("notes", detail::json_string_array(check.notes));
    detail::JsonObject stats;
    for (const auto& [key, value] : check.stats) stats.field(key, value);
    obj.raw("stats", stats.str());
    obj.field("seconds", check.seconds);
    return obj.str();
}

std::string to_json(const VerificationReport& report) {
    detail::JsonObject obj;
    obj.field("max_n", report.max_n)
        .field("characteristic", report.characteristic)
        .field("graphs_processed", static_cast<long long>(report.graphs_processed))
        .field("graphs_refused", static_cast<long long>(report.graphs_refused))
        .field("ok", report.ok());
    std::string checks = "[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        if (i) checks += ',';
        checks += to_json(report.checks[i]);
    }
    checks += ']';
    obj.raw("checks", checks);
    obj.field("seconds", report.seconds);
    return obj.str();
}

}  // namespace eisq

#include "eisq/independence.hpp"

#include <algorithm>

namespace eisq {

namespace {

// Maximal independent sets of g are the maximal cliques of its complement;
// enumerate those with pivoting Bron-Kerbosch over neighbor bitmasks.
struct MisEnumerator {
    const std::vector<std::uint64_t>& cadj;  // complement adjacency
    const std::function<bool(VertexSet)>& visit;
    const Budget* budget;
    bool stopped = false;

    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (stopped) return;
        budget_checkpoint(budget);
        if (p == 0 && x == 0) {
            if (!visit(VertexSet(r))) stopped = true;
            return;
        }
        // pivot with the most candidates eliminated
        int pivot = -1, best = -1;
        for (std::uint64_t m = p | x; m; m &= m - 1) {
            int u = __builtin_ctzll(m);
            int cnt = __builtin_popcountll(p & cadj[static_cast<std::size_t>(u)]);
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        }
        std::uint64_t candidates = p & ~cadj[static_cast<std::size_t>(pivot)];
        for (std::uint64_t m = candidates; m; m &= m - 1) {
            int v = __builtin_ctzll(m);
            std::uint64_t vb = 1ull << v;
            run(r | vb, p & cadj[static_cast<std::size_t>(v)], x & cadj[static_cast<std::size_t>(v)]);
            if (stopped) return;
            p &= ~vb;
            x |= vb;
        }
    }
};

std::vector<std::uint64_t> complement_adjacency(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t range = VertexSet::range(n).bits();
    std::vector<std::uint64_t> cadj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        cadj[static_cast<std::size_t>(v)] = ~g.neighbors(v).bits() & range & ~(1ull << v);
    return cadj;
}

}  // namespace

void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(VertexSet)>& visit,
                                      const Budget* budget) {
    if (g.vertex_count() == 0) {
        visit(VertexSet());
        return;
    }
    auto cadj = complement_adjacency(g);
    MisEnumerator e{cadj, visit, budget};
    e.run(0, VertexSet::range(g.vertex_count()).bits(), 0);
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Budget* budget) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(
        g,
        [&out](VertexSet s) {
            out.push_back(s);
            return true;
        },
        budget);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

int independence_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (n <= 16) {
        // memoized branch on the lowest vertex of the remaining mask
        std::vector<int> memo(1u << n, -1);
        memo[0] = 0;
        auto rec = [&](auto&& self, std::uint64_t mask) -> int {
            int& slot = memo[static_cast<std::size_t>(mask)];
            if (slot >= 0) return slot;
            int v = __builtin_ctzll(mask);
            std::uint64_t without = mask & ~(1ull << v);
            int skip = self(self, without);
            int take = 1 + self(self, mask & ~(g.neighbors(v).bits() | (1ull << v)));
            return slot = std::max(skip, take);
        };
        return rec(rec, VertexSet::range(n).bits());
    }
    int best = 0;
    for_each_maximal_independent_set(g, [&best](VertexSet s) {
        best = std::max(best, s.size());
        return true;
    });
    return best;
}

bool is_well_covered(const Graph& g, const Budget* budget) {
    int size_seen = -1;
    bool uniform = true;
    for_each_maximal_independent_set(
        g,
        [&](VertexSet s) {
            if (size_seen == -1) {
                size_seen = s.size();
                return true;
            }
            if (s.size() != size_seen) {
                uniform = false;
                return false;
            }
            return true;
        },
        budget);
    return uniform;
}

bool is_w2(const Graph& g, const Budget* budget) {
    if (g.has_isolated_vertex()) throw precondition_error("is_w2: graph has an isolated vertex");
    if (!is_well_covered(g, budget)) return false;
    int alpha = independence_number(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet rest = g.vertices();
        rest.erase(v);
        Graph h = induced(g, rest).graph;
        if (!is_well_covered(h, budget)) return false;
        if (independence_number(h) != alpha) return false;
    }
    return true;
}

bool is_locally_triangle_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_triangle_free(local_graph(g, VertexSet::of({v})).graph)) return false;
    return true;
}

IndependenceSummary independence_summary(const Graph& g, const Budget* budget) {
    IndependenceSummary s;
    for (VertexSet mis : maximal_independent_sets(g, budget)) s.mis_sizes.push_back(mis.size());
    std::sort(s.mis_sizes.begin(), s.mis_sizes.end());
    s.mis_count = static_cast<int>(s.mis_sizes.size());
    s.alpha = s.mis_sizes.empty() ? 0 : s.mis_sizes.back();
    s.well_covered = s.mis_sizes.empty() || s.mis_sizes.front() == s.mis_sizes.back();
    return s;
}

}  // namespace eisq

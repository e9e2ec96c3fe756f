#include "eisq/enumerate.hpp"

#include <unordered_set>

namespace eisq {

namespace {

// Minimize the packed adjacency string over vertex orderings. At each
// position only the vertices whose row bits against the placed prefix are
// minimal can extend an optimal ordering, so the search branches on exactly
// those; interchangeable candidates (equal neighborhoods apart from each
// other) collapse to one branch, which keeps highly symmetric graphs such as
// complete multipartite graphs linear. A running best certificate prunes the
// rest.
struct CertSearch {
    int n;
    const std::uint64_t* adj;
    int total_bits;
    std::uint64_t best = ~0ull;

    int order[12];

    void run(int depth, std::uint64_t used, std::uint64_t prefix, int prefix_bits) {
        if (depth == n) {
            if (prefix < best) best = prefix;
            return;
        }
        // row bits of each unused vertex against the placed prefix
        std::uint64_t min_row = ~0ull;
        std::uint64_t candidates_mask = VertexSet::range(n).bits() & ~used;
        std::uint64_t rows[12];
        for (std::uint64_t m = candidates_mask; m; m &= m - 1) {
            int v = __builtin_ctzll(m);
            std::uint64_t row = 0;
            for (int j = 0; j < depth; ++j)
                row = (row << 1) | ((adj[v] >> order[j]) & 1u);
            rows[v] = row;
            if (row < min_row) min_row = row;
        }

        std::uint64_t next_prefix = (prefix << depth) | min_row;
        int next_bits = prefix_bits + depth;
        // compare against the same-length prefix of the best certificate
        if (best != ~0ull && next_bits > 0 && (best >> (total_bits - next_bits)) < next_prefix)
            return;

        int chosen[12];
        int chosen_count = 0;
        for (std::uint64_t m = candidates_mask; m; m &= m - 1) {
            int v = __builtin_ctzll(m);
            if (rows[v] != min_row) continue;
            bool twin = false;
            for (int i = 0; i < chosen_count && !twin; ++i) {
                int w = chosen[i];
                twin = (adj[v] & ~(1ull << w)) == (adj[w] & ~(1ull << v));
            }
            if (twin) continue;
            chosen[chosen_count++] = v;
        }
        for (int i = 0; i < chosen_count; ++i) {
            int v = chosen[i];
            order[depth] = v;
            run(depth + 1, used | (1ull << v), next_prefix, next_bits);
        }
    }
};

std::uint64_t certificate_of_adjacency(int n, const std::uint64_t* adj) {
    if (n <= 1) return 0;
    CertSearch search;
    search.n = n;
    search.adj = adj;
    search.total_bits = n * (n - 1) / 2;
    search.run(0, 0, 0, 0);
    return search.best;
}

}  // namespace

std::uint64_t canonical_certificate(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw precondition_error("canonical_certificate: supports n <= 11 only");
    std::uint64_t adj[12];
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).bits();
    return certificate_of_adjacency(n, adj);
}

void for_each_graph(int n, EnumerateOptions options,
                    const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 9)
        throw precondition_error("built-in enumeration covers 1 <= n <= 9; pipe a graph6 corpus "
                                 "for larger orders");

    auto passes = [&options](const Graph& g) {
        if (options.no_isolated && g.has_isolated_vertex()) return false;
        if (options.connected && connected_components(g).size() != 1) return false;
        return true;
    };

    if (n == 1) {
        Graph g = Graph::empty(1);
        if (passes(g)) visit(g);
        return;
    }

    std::vector<std::vector<std::uint64_t>> level = {{0}};  // adjacency rows of K1
    for (int k = 2; k <= n; ++k) {
        std::vector<std::vector<std::uint64_t>> next;
        std::unordered_set<std::uint64_t> seen;
        std::uint64_t adj[12];
        for (const auto& parent : level) {
            for (std::uint64_t mask = 0; mask < (1ull << (k - 1)); ++mask) {
                for (int j = 0; j < k - 1; ++j)
                    adj[j] = parent[static_cast<std::size_t>(j)] |
                             (((mask >> j) & 1u) << (k - 1));
                adj[k - 1] = mask;
                if (!seen.insert(certificate_of_adjacency(k, adj)).second) continue;
                if (k == n) {
                    Graph g = Graph::from_adjacency(k, std::vector<std::uint64_t>(adj, adj + k));
                    if (passes(g)) visit(g);
                } else {
                    next.emplace_back(adj, adj + k);
                }
            }
        }
        level = std::move(next);
    }
}

std::vector<Graph> enumerate_graphs(int n, EnumerateOptions options) {
    std::vector<Graph> out;
    for_each_graph(n, options, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace eisq

#include "eisq/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace eisq {

namespace {

constexpr int kMaxVertices = 62;  // single-byte graph6 header

void check_vertex_count(int n) {
    if (n < 0) throw precondition_error("vertex count must be non-negative");
    if (n > kMaxVertices)
        throw precondition_error("graphs with more than 62 vertices are not supported");
}

}  // namespace

bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x && y) {
        int vx = __builtin_ctzll(x), vy = __builtin_ctzll(y);
        if (vx != vy) return vx < vy;
        x &= x - 1;
        y &= y - 1;
    }
    return y != 0;
}

Graph Graph::empty(int n) {
    check_vertex_count(n);
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    return g;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g = Graph::empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint out of range");
        if (u == v) throw precondition_error("loop edges are not allowed");
        g.adj_[static_cast<std::size_t>(u)] |= 1ull << v;
        g.adj_[static_cast<std::size_t>(v)] |= 1ull << u;
    }
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(int n, std::vector<std::uint64_t> adjacency) {
    check_vertex_count(n);
    if (adjacency.size() != static_cast<std::size_t>(n))
        throw precondition_error("adjacency size does not match vertex count");
    std::uint64_t range = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
        std::uint64_t row = adjacency[static_cast<std::size_t>(v)];
        if (row & ~range) throw precondition_error("adjacency bit out of range");
        if ((row >> v) & 1u) throw precondition_error("loop edges are not allowed");
        for (std::uint64_t m = row; m; m &= m - 1) {
            int u = __builtin_ctzll(m);
            if (!((adjacency[static_cast<std::size_t>(u)] >> v) & 1u))
                throw precondition_error("adjacency is not symmetric");
        }
    }
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(adjacency);
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t row : adj_) total += __builtin_popcountll(row);
    return total / 2;
}

bool Graph::has_isolated_vertex() const {
    for (std::uint64_t row : adj_)
        if (row == 0) return true;
    return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t above = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        for (std::uint64_t m = above; m; m &= m - 1) out.emplace_back(u, __builtin_ctzll(m));
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> degs;
    degs.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) degs.push_back(degree(v));
    std::sort(degs.begin(), degs.end());
    return degs;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t range = VertexSet::range(n).bits();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = ~g.neighbors(v).bits() & range & ~(1ull << v);
    return Graph::from_adjacency(n, std::move(adj));
}

Subgraph induced(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices()))
        throw precondition_error("vertex set not contained in the graph");
    std::vector<int> to_parent = s.to_vector();
    int k = static_cast<int>(to_parent.size());
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(k), 0);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.has_edge(to_parent[static_cast<std::size_t>(a)],
                           to_parent[static_cast<std::size_t>(b)])) {
                adj[static_cast<std::size_t>(a)] |= 1ull << b;
                adj[static_cast<std::size_t>(b)] |= 1ull << a;
            }
    return Subgraph{Graph::from_adjacency(k, std::move(adj)), std::move(to_parent)};
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices()))
        throw precondition_error("vertex set not contained in the graph");
    std::uint64_t acc = 0;
    for (std::uint64_t m = s.bits(); m; m &= m - 1)
        acc |= g.neighbors(__builtin_ctzll(m)).bits();
    return VertexSet(acc & ~s.bits());
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    return open_neighborhood(g, s).unite(s);
}

Subgraph local_graph(const Graph& g, VertexSet s) {
    return induced(g, g.vertices().minus(closed_neighborhood(g, s)));
}

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    check_vertex_count(n1 + n2);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n1 + n2), 0);
    std::uint64_t left = VertexSet::range(n1).bits();
    std::uint64_t right = VertexSet::range(n1 + n2).bits() & ~left;
    for (int v = 0; v < n1; ++v) adj[static_cast<std::size_t>(v)] = g1.neighbors(v).bits() | right;
    for (int v = 0; v < n2; ++v)
        adj[static_cast<std::size_t>(n1 + v)] = (g2.neighbors(v).bits() << n1) | left;
    return Graph::from_adjacency(n1 + n2, std::move(adj));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    check_vertex_count(n1 + n2);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n1 + n2), 0);
    for (int v = 0; v < n1; ++v) adj[static_cast<std::size_t>(v)] = g1.neighbors(v).bits();
    for (int v = 0; v < n2; ++v) adj[static_cast<std::size_t>(n1 + v)] = g2.neighbors(v).bits() << n1;
    return Graph::from_adjacency(n1 + n2, std::move(adj));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw precondition_error("permutation size does not match vertex count");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        int pu = perm[static_cast<std::size_t>(u)], pv = perm[static_cast<std::size_t>(v)];
        adj[static_cast<std::size_t>(pu)] |= 1ull << pv;
        adj[static_cast<std::size_t>(pv)] |= 1ull << pu;
    }
    return Graph::from_adjacency(n, std::move(adj));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> comps;
    std::uint64_t seen = 0;
    for (int v = 0; v < n; ++v) {
        if ((seen >> v) & 1u) continue;
        std::uint64_t comp = 1ull << v, frontier = 1ull << v;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= g.neighbors(__builtin_ctzll(m)).bits();
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        comps.emplace_back(comp);
    }
    return comps;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::uint64_t side0 = 0, side1 = 0;
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        side0 |= 1ull << root;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            int c = color[static_cast<std::size_t>(v)];
            for (std::uint64_t m = g.neighbors(v).bits(); m; m &= m - 1) {
                int u = __builtin_ctzll(m);
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - c;
                    (c == 0 ? side1 : side0) |= 1ull << u;
                    stack.push_back(u);
                } else if (color[static_cast<std::size_t>(u)] == c) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(VertexSet(side0), VertexSet(side1));
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersect(g.neighbors(v)).bits()) return false;
    return true;
}

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw input_error("empty graph6 line");
    if (line.front() == '~')
        throw input_error("multi-byte graph6 size headers (n > 62) are not supported");
    for (char c : line)
        if (c < 63 || c > 126) throw input_error("graph6 character out of range");
    int n = line[0] - 63;
    std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t chars_needed = (bits_needed + 5) / 6;
    if (line.size() != 1 + chars_needed)
        throw input_error("graph6 line has the wrong length for its size header");

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int value = line[1 + bit / 6] - 63;
            if ((value >> (5 - bit % 6)) & 1) {
                adj[static_cast<std::size_t>(i)] |= 1ull << j;
                adj[static_cast<std::size_t>(j)] |= 1ull << i;
            }
        }
    // zero padding in the final character
    for (; bit < chars_needed * 6; ++bit) {
        int value = line[1 + bit / 6] - 63;
        if ((value >> (5 - bit % 6)) & 1) throw input_error("graph6 trailing padding bits are nonzero");
    }
    return Graph::from_adjacency(n, std::move(adj));
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int accum = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            accum = (accum << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + accum));
                accum = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (accum << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw input_error("edge list: missing \"n m\" header");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw input_error("edge list: malformed \"n m\" header");
    if (n > kMaxVertices) throw input_error("edge list: more than 62 vertices");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line)) throw input_error("edge list: fewer edge lines than the header declares");
        std::istringstream row(line);
        long long u, v;
        if (!(row >> u >> v)) throw input_error("edge list: malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n) throw input_error("edge list: endpoint out of range");
        if (u == v) throw input_error("edge list: loop edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace eisq

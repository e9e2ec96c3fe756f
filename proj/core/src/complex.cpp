#include "eisq/complex.hpp"

#include <algorithm>

namespace eisq {

SimplicialComplex SimplicialComplex::from_facets(int ambient_vertex_count,
                                                 std::vector<VertexSet> facets) {
    if (ambient_vertex_count < 0 || ambient_vertex_count > 62)
        throw precondition_error("ambient vertex count out of range");
    std::uint64_t range = VertexSet::range(ambient_vertex_count).bits();
    std::uint64_t active = 0;
    for (VertexSet f : facets) {
        if (f.bits() & ~range) throw precondition_error("facet vertex out of range");
        active |= f.bits();
    }

    // drop dominated and duplicate facets
    std::vector<VertexSet> kept;
    for (VertexSet f : facets) {
        bool dominated = false;
        for (VertexSet other : facets)
            if (other != f && f.is_subset_of(other)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        if (std::find(kept.begin(), kept.end(), f) == kept.end()) kept.push_back(f);
    }
    if (kept.empty()) kept.push_back(VertexSet());

    SimplicialComplex k;
    k.vertex_count_ = __builtin_popcountll(active);
    k.ghost_count_ = ambient_vertex_count - k.vertex_count_;
    if (active == VertexSet::range(k.vertex_count_).bits()) {
        k.facets_ = std::move(kept);
    } else {
        // compact labels, preserving order
        std::vector<int> new_label(static_cast<std::size_t>(ambient_vertex_count), -1);
        int next = 0;
        for (std::uint64_t m = active; m; m &= m - 1)
            new_label[static_cast<std::size_t>(__builtin_ctzll(m))] = next++;
        for (VertexSet f : kept) {
            VertexSet g;
            for (std::uint64_t m = f.bits(); m; m &= m - 1)
                g.insert(new_label[static_cast<std::size_t>(__builtin_ctzll(m))]);
            k.facets_.push_back(g);
        }
    }
    std::sort(k.facets_.begin(), k.facets_.end(), lex_less);
    return k;
}

int SimplicialComplex::dimension() const {
    int best = -1;
    for (VertexSet f : facets_) best = std::max(best, f.size() - 1);
    return best;
}

bool SimplicialComplex::contains_face(VertexSet face) const {
    for (VertexSet f : facets_)
        if (face.is_subset_of(f)) return true;
    return false;
}

long long FaceTable::total_faces() const {
    long long total = 0;
    for (const auto& group : by_size) total += static_cast<long long>(group.size());
    return total;
}

FaceTable enumerate_faces(const SimplicialComplex& k) {
    FaceTable table;
    table.by_size.resize(static_cast<std::size_t>(k.dimension() + 2));
    std::vector<VertexSet> all;
    for (VertexSet facet : k.facets()) {
        // all subsets of the facet, standard submask walk
        std::uint64_t bits = facet.bits(), sub = bits;
        while (true) {
            all.emplace_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & bits;
        }
    }
    std::sort(all.begin(), all.end(), lex_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (VertexSet face : all)
        table.by_size[static_cast<std::size_t>(face.size())].push_back(face);
    return table;
}

FVector f_vector(const SimplicialComplex& k) {
    FaceTable table = enumerate_faces(k);
    FVector fv;
    for (std::size_t s = 1; s < table.by_size.size(); ++s)
        fv.counts.push_back(static_cast<long long>(table.by_size[s].size()));
    return fv;
}

SimplicialComplex independence_complex(const Graph& g, const Budget* budget) {
    return SimplicialComplex::from_facets(g.vertex_count(), maximal_independent_sets(g, budget));
}

bool is_connected_complex(const SimplicialComplex& k) {
    int n = k.vertex_count();
    if (n <= 1) return true;
    // union-find over the facets' vertices
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&parent](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (VertexSet f : k.facets()) {
        auto verts = f.to_vector();
        for (std::size_t i = 1; i < verts.size(); ++i)
            parent[static_cast<std::size_t>(find(verts[i]))] = find(verts[0]);
    }
    int root = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != root) return false;
    return true;
}

std::vector<VertexSet> join_factors(const Graph& g) {
    if (g.vertex_count() == 0) throw precondition_error("join_factors: graph has no vertices");
    return connected_components(complement(g));
}

namespace {

// Rebuild on exactly the vertices the facets use, relabeled ascending.
SimplicialComplex on_own_vertices(std::vector<VertexSet> facets) {
    std::uint64_t active = 0;
    for (VertexSet f : facets) active |= f.bits();
    std::vector<int> new_label(64, -1);
    int next = 0;
    for (std::uint64_t m = active; m; m &= m - 1)
        new_label[static_cast<std::size_t>(__builtin_ctzll(m))] = next++;
    for (VertexSet& f : facets) {
        VertexSet g;
        for (std::uint64_t m = f.bits(); m; m &= m - 1)
            g.insert(new_label[static_cast<std::size_t>(__builtin_ctzll(m))]);
        f = g;
    }
    return SimplicialComplex::from_facets(next, std::move(facets));
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, VertexSet face) {
    std::vector<VertexSet> facets;
    for (VertexSet f : k.facets())
        if (face.is_subset_of(f)) facets.push_back(f.minus(face));
    if (facets.empty()) throw precondition_error("link: face is not in the complex");
    return on_own_vertices(std::move(facets));
}

SimplicialComplex core(const SimplicialComplex& k) {
    std::uint64_t common = ~0ull;
    for (VertexSet f : k.facets()) common &= f.bits();
    VertexSet cone(common & VertexSet::range(k.vertex_count()).bits());
    if (cone.empty()) return k;
    std::vector<VertexSet> facets;
    for (VertexSet f : k.facets()) facets.push_back(f.minus(cone));
    return on_own_vertices(std::move(facets));
}

long long reduced_euler_characteristic(const SimplicialComplex& k) {
    long long chi = -1;
    int sign = 1;
    for (long long f : f_vector(k).counts) {
        chi += sign * f;
        sign = -sign;
    }
    return chi;
}

}  // namespace eisq

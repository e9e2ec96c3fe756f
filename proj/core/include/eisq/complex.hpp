#pragma once

#include <span>
#include <vector>

#include "eisq/graph.hpp"
#include "eisq/independence.hpp"

namespace eisq {

/// Facet-listed simplicial complex. Facets are mutually incomparable and
/// every vertex 0..vertex_count()-1 lies in some facet; ambient vertices
/// that appear in no facet are relabeled away and only counted
/// (ghost_count). An empty facet list denotes the complex whose only face
/// is the empty face.
class SimplicialComplex {
public:
    /// Normalize: dedupe, drop dominated facets, compact ghost vertices.
    static SimplicialComplex from_facets(int ambient_vertex_count, std::vector<VertexSet> facets);

    int vertex_count() const { return vertex_count_; }
    int ghost_count() const { return ghost_count_; }
    /// -1 for the empty-face-only complex.
    int dimension() const;
    /// Facets sorted lexicographically by ascending vertex list.
    std::span<const VertexSet> facets() const { return facets_; }
    bool contains_face(VertexSet face) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int vertex_count_ = 0;
    int ghost_count_ = 0;
    std::vector<VertexSet> facets_;  // single empty set for the {∅} complex
};

/// All faces grouped by cardinality: by_size[k] lists the k-vertex faces
/// (dimension k-1); by_size[0] is the empty face. Within a group, faces are
/// sorted lexicographically by ascending vertex list. This is the canonical
/// face order used for boundary matrices.
struct FaceTable {
    std::vector<std::vector<VertexSet>> by_size;

    long long total_faces() const;  // includes the empty face
};

FaceTable enumerate_faces(const SimplicialComplex& k);

/// Face counts f_0..f_d (the empty face is excluded, as in reported face
/// vectors; homology uses the reduced chain complex internally).
struct FVector {
    std::vector<long long> counts;

    int dimension() const { return static_cast<int>(counts.size()) - 1; }
    friend bool operator==(const FVector&, const FVector&) = default;
};

FVector f_vector(const SimplicialComplex& k);

/// Independence complex: facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const Graph& g, const Budget* budget = nullptr);

/// Connectivity of the 1-skeleton, isolated complex vertices included. The
/// empty-face complex and the one-vertex complex count as connected.
bool is_connected_complex(const SimplicialComplex& k);

/// The finest join decomposition of g: vertex classes are the connected
/// components of complement(g), ordered by smallest member. One class means
/// g is not a join of two proper subgraphs.
std::vector<VertexSet> join_factors(const Graph& g);

/// lk(face) = { t : t disjoint from face, t ∪ face in k }, relabeled onto
/// its own vertices. Throws precondition_error if face is not in k.
SimplicialComplex link(const SimplicialComplex& k, VertexSet face);

/// Restriction to the vertices that are not in every facet; idempotent.
SimplicialComplex core(const SimplicialComplex& k);

/// Reduced Euler characteristic: -1 + f_0 - f_1 + ...
long long reduced_euler_characteristic(const SimplicialComplex& k);

}  // namespace eisq

#pragma once

#include <cstdint>
#include <vector>

#include "eisq/complex.hpp"

namespace eisq {

/// GF(p), p prime, 2 <= p < 2^31. Products are reduced through 64-bit
/// intermediates.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t p_;
};

/// Dense matrix over a prime field, row-major.
struct FieldMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;

    std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Rank by Gaussian elimination, pivoting on the first nonzero entry.
std::size_t matrix_rank(FieldMatrix m, const PrimeField& field);

/// Matrix of the boundary map from dim-faces to (dim-1)-faces in the
/// canonical face order; the boundary of a vertex is the empty face (reduced
/// chain complex). Requires 0 <= dim <= dimension of the complex.
FieldMatrix boundary_matrix(const SimplicialComplex& k, int dim, const PrimeField& field);
FieldMatrix boundary_matrix(const FaceTable& faces, int dim, const PrimeField& field);

/// Reduced Betti numbers over a prime field; betti[i] is the dimension of
/// the reduced homology in dimension i-1 (so betti.front() covers the empty
/// face and is 1 exactly for the empty-face-only complex).
struct HomologyProfile {
    std::uint32_t characteristic = 2;
    std::vector<long long> betti;  // index 0 <-> dimension -1

    long long reduced_betti(int dim) const {
        std::size_t i = static_cast<std::size_t>(dim + 1);
        return i < betti.size() ? betti[i] : 0;
    }
    int top_dimension() const { return static_cast<int>(betti.size()) - 2; }
};

/// Exact Gaussian elimination over the field; verifies the Euler-Poincare
/// identity against the face counts before returning.
HomologyProfile reduced_betti_numbers(const SimplicialComplex& k, const PrimeField& field);

/// Every face link (the empty face included) has vanishing reduced homology
/// below its own dimension.
bool is_cm_complex(const SimplicialComplex& k, const PrimeField& field,
                   const Budget* budget = nullptr);

/// On the core of k, every face link has the reduced homology of a sphere of
/// its dimension; the empty-face-only complex counts as the (-1)-sphere.
bool is_gorenstein_complex(const SimplicialComplex& k, const PrimeField& field,
                           const Budget* budget = nullptr);

}  // namespace eisq

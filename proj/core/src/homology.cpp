#include "eisq/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace eisq {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31)) throw precondition_error("field characteristic must be below 2^31");
    if (!is_prime(p)) throw precondition_error("field characteristic must be prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw precondition_error("zero has no inverse");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::size_t matrix_rank(FieldMatrix m, const PrimeField& field) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        std::uint32_t scale = field.inv(m.at(rank, col));
        for (std::size_t c = col; c < m.cols; ++c) m.at(rank, c) = field.mul(m.at(rank, c), scale);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            std::uint32_t factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = field.add(m.at(r, c), field.neg(field.mul(factor, m.at(rank, c))));
        }
        ++rank;
    }
    return rank;
}

FieldMatrix boundary_matrix(const FaceTable& faces, int dim, const PrimeField& field) {
    int top = static_cast<int>(faces.by_size.size()) - 2;
    if (dim < 0 || dim > top) throw precondition_error("boundary dimension out of range");
    const auto& domain = faces.by_size[static_cast<std::size_t>(dim + 1)];
    const auto& target = faces.by_size[static_cast<std::size_t>(dim)];

    FieldMatrix m;
    m.rows = target.size();
    m.cols = domain.size();
    m.a.assign(m.rows * m.cols, 0);

    auto row_of = [&target](VertexSet face) {
        auto it = std::lower_bound(target.begin(), target.end(), face, lex_less);
        return static_cast<std::size_t>(it - target.begin());
    };

    std::uint32_t minus_one = field.neg(1);
    for (std::size_t c = 0; c < domain.size(); ++c) {
        VertexSet face = domain[c];
        int position = 0;
        for (std::uint64_t bits = face.bits(); bits; bits &= bits - 1, ++position) {
            VertexSet smaller = face;
            smaller.erase(__builtin_ctzll(bits));
            m.at(row_of(smaller), c) = (position % 2 == 0) ? 1 : minus_one;
        }
    }
    return m;
}

FieldMatrix boundary_matrix(const SimplicialComplex& k, int dim, const PrimeField& field) {
    return boundary_matrix(enumerate_faces(k), dim, field);
}

HomologyProfile reduced_betti_numbers(const SimplicialComplex& k, const PrimeField& field) {
    FaceTable faces = enumerate_faces(k);
    int top = static_cast<int>(faces.by_size.size()) - 2;  // -1 for {∅}

    // rank of each boundary map; the map out of dimension -1 is zero
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int dim = 0; dim <= top; ++dim)
        ranks[static_cast<std::size_t>(dim + 1)] =
            matrix_rank(boundary_matrix(faces, dim, field), field);

    HomologyProfile profile;
    profile.characteristic = field.characteristic();
    for (int dim = -1; dim <= top; ++dim) {
        long long chains = static_cast<long long>(faces.by_size[static_cast<std::size_t>(dim + 1)].size());
        long long rank_out = static_cast<long long>(ranks[static_cast<std::size_t>(dim + 1)]);
        long long rank_in =
            dim + 2 < static_cast<int>(ranks.size()) ? static_cast<long long>(ranks[static_cast<std::size_t>(dim + 2)]) : 0;
        profile.betti.push_back(chains - rank_out - rank_in);
    }

    // Euler-Poincare identity
    long long from_betti = 0, from_faces = -1;
    int sign = -1;
    for (std::size_t i = 0; i < profile.betti.size(); ++i, sign = -sign)
        from_betti += sign * profile.betti[i];
    sign = 1;
    for (std::size_t s = 1; s < faces.by_size.size(); ++s, sign = -sign)
        from_faces += sign * static_cast<long long>(faces.by_size[s].size());
    if (from_betti != from_faces)
        throw std::logic_error("Euler-Poincare identity violated by a homology computation");

    return profile;
}

namespace {

// spherical means: vanishing below the top dimension, one-dimensional on top
bool has_sphere_homology(const HomologyProfile& profile) {
    int top = profile.top_dimension();
    for (int d = -1; d < top; ++d)
        if (profile.reduced_betti(d) != 0) return false;
    return profile.reduced_betti(top) == 1;
}

bool links_satisfy(const SimplicialComplex& k, const PrimeField& field, const Budget* budget,
                   bool (*predicate)(const HomologyProfile&)) {
    FaceTable faces = enumerate_faces(k);
    for (const auto& group : faces.by_size)
        for (VertexSet face : group) {
            budget_checkpoint(budget);
            if (!predicate(reduced_betti_numbers(link(k, face), field))) return false;
        }
    return true;
}

}  // namespace

bool is_cm_complex(const SimplicialComplex& k, const PrimeField& field, const Budget* budget) {
    return links_satisfy(k, field, budget, [](const HomologyProfile& profile) {
        int top = profile.top_dimension();
        for (int d = -1; d < top; ++d)
            if (profile.reduced_betti(d) != 0) return false;
        return true;
    });
}

bool is_gorenstein_complex(const SimplicialComplex& k, const PrimeField& field,
                           const Budget* budget) {
    return links_satisfy(core(k), field, budget, has_sphere_homology);
}

}  // namespace eisq

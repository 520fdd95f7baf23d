// Subspaces of Q(i)^n in canonical (reduced row echelon) form, so equality
// of subspaces is equality of representations.

#pragma once

#include "mhad/matrix.hpp"

namespace mhad {

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    // Span of the given vectors.
    static Subspace span(std::size_t ambient, const std::vector<Vec>& gens);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }

    // Canonical basis, one vector per row.
    const Mat& basis() const { return basis_; }
    Vec basis_vec(std::size_t k) const { return basis_.row(k); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    // Coordinates of v in the canonical basis; nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

private:
    std::size_t ambient_ = 0;
    Mat basis_;  // RREF, full row rank
};

}  // namespace mhad

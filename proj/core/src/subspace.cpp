#include "mhad/subspace.hpp"

#include <cassert>

namespace mhad {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& gens) {
    Subspace s(ambient);
    if (gens.empty()) return s;
    Mat m = Mat::from_rows(gens);
    assert(m.cols() == ambient);
    auto pivots = rref(m);
    Mat basis(pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) basis.at(i, j) = m.at(i, j);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Mat::identity(ambient);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    assert(v.size() == ambient_);
    // Reduce v against the RREF basis.
    Vec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // Locate the pivot of row i.
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        if (p == ambient_) continue;
        if (!w[p].is_zero()) {
            GRat f = w[p];  // pivot entries are 1
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
        }
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_vec(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    assert(ambient_ == o.ambient_);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < dim(); ++i) gens.push_back(basis_vec(i));
    for (std::size_t i = 0; i < o.dim(); ++i) gens.push_back(o.basis_vec(i));
    return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& o) const {
    assert(ambient_ == o.ambient_);
    // x in U cap V iff x = B1^T a = B2^T b; solve [B1^T | -B2^T] [a;b] = 0.
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    Mat lhs = basis_.transpose().hstack(o.basis_.transpose().scaled(GRat(-1)));
    auto null = nullspace(lhs);
    std::vector<Vec> gens;
    for (const auto& ab : null) {
        Vec a(ab.begin(), ab.begin() + dim());
        gens.push_back(basis_.transpose() * a);
    }
    return span(ambient_, gens);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    assert(v.size() == ambient_);
    Vec w = v;
    Vec coords(dim());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        if (p == ambient_) continue;
        if (!w[p].is_zero()) {
            GRat f = w[p];
            coords[i] = f;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
        }
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return coords;
}

}  // namespace mhad

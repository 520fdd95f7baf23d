#include "mhad/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace mhad {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GRat(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        assert(cols[j].size() == m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GRat& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const GRat& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Vec Mat::operator*(const Vec& v) const {
    assert(cols_ == v.size());
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const GRat& a = at(i, j);
            if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
        }
    return r;
}

Mat Mat::scaled(const GRat& c) const {
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::conj_transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

Mat Mat::kron(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const GRat& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l) {
                    const GRat& b = o.at(k, l);
                    if (!b.is_zero())
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
                }
        }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    if (rows_ == 0) return o;
    if (o.rows_ == 0) return *this;
    assert(cols_ == o.cols_);
    Mat r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    if (cols_ == 0) return o;
    if (o.cols_ == 0) return *this;
    assert(rows_ == o.rows_);
    Mat r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scaled(const Vec& a, const GRat& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

GRat dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    GRat s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = GRat(1);
    return v;
}

Vec vec_kron(const Vec& a, const Vec& b) {
    Vec r(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // Find a pivot in column c at or below row r.
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        GRat inv = m.at(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            GRat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Mat& a) {
    Mat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols());
        v[free] = GRat(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    assert(a.rows() == b.rows());
    Mat aug = a.hstack(b);
    auto pivots = rref(aug);
    // Inconsistent iff some pivot falls in the B block.
    for (auto c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(pivots[k], j) = aug.at(k, a.cols() + j);
    return x;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    auto x = solve(a, Mat::from_cols({b}));
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<Mat> solve_unique(const Mat& a, const Mat& b) {
    if (rank(a) != a.cols()) return std::nullopt;
    return solve(a, b);
}

std::optional<Vec> solve_unique(const Mat& a, const Vec& b) {
    if (rank(a) != a.cols()) return std::nullopt;
    return solve(a, b);
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    Mat aug = a.hstack(Mat::identity(a.rows()));
    auto pivots = rref(aug);
    if (pivots.size() != a.rows()) return std::nullopt;
    for (auto c : pivots)
        if (c >= a.cols()) return std::nullopt;  // singular: pivot escaped into I
    Mat inv(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) inv.at(i, j) = aug.at(i, a.cols() + j);
    return inv;
}

bool hermitian_psd(const Mat& a) {
    if (a.rows() != a.cols()) return false;
    if (a != a.conj_transpose()) return false;
    Mat m = a;
    std::size_t n = m.rows();
    std::vector<bool> done(n, false);
    // Pivoted congruence: repeatedly pick a strictly positive diagonal
    // pivot and eliminate its row/column via the Schur complement. A
    // Hermitian PSD matrix with a zero diagonal entry has that whole
    // row/column zero, so if no pivot remains the residual must be zero.
    for (;;) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            const GRat& d = m.at(i, i);
            if (!d.is_real()) return false;       // not Hermitian anyway
            if (d.re < 0) return false;           // negative diagonal
            if (d.re > 0) { p = i; break; }
        }
        if (p == n) break;
        GRat dinv = m.at(p, p).inv();
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == p) continue;
            GRat f = m.at(i, p) * dinv;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j] || j == p) continue;
                m.at(i, j) -= f * m.at(p, j);
            }
        }
        for (std::size_t k = 0; k < n; ++k) { m.at(p, k) = GRat(); m.at(k, p) = GRat(); }
        done[p] = true;
    }
    // All remaining diagonal entries are zero; PSD iff the residual block
    // is entirely zero.
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!done[j] && !m.at(i, j).is_zero()) return false;
    }
    return true;
}

}  // namespace mhad

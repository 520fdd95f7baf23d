// Dense exact matrices over Q(i) and the linear-algebra kernel used by the
// whole library: reduced row echelon form, rank, solving, nullspaces,
// Kronecker products, and an exact PSD test via pivoted LDL* congruence.

#pragma once

#include "mhad/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mhad {

using Vec = std::vector<GRat>;

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    // Matrix whose rows are the given vectors (all the same length).
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_cols(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GRat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GRat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    bool is_zero() const;
    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat scaled(const GRat& c) const;

    Mat transpose() const;
    Mat conj_transpose() const;

    // Kronecker product; (A (x) B)((i,k),(j,l)) = A(i,j) B(k,l).
    Mat kron(const Mat& o) const;

    // Stack vertically / horizontally.
    Mat vstack(const Mat& o) const;
    Mat hstack(const Mat& o) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GRat> data_;
};

// --- vector helpers -------------------------------------------------------

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const GRat& c);
bool vec_is_zero(const Vec& v);
GRat dot(const Vec& a, const Vec& b);  // plain bilinear sum, no conjugation
Vec basis_vec(std::size_t n, std::size_t i);
// Kronecker product of coordinate vectors: (a (x) b)[i*len(b)+j] = a[i]b[j].
Vec vec_kron(const Vec& a, const Vec& b);

// Flattened index of e_i (x) e_j in an n*m tensor square.
inline std::size_t tidx(std::size_t i, std::size_t j, std::size_t m) {
    return i * m + j;
}

// --- elimination ----------------------------------------------------------

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

// Basis of the right nullspace {x : Ax = 0}, one Vec per basis element.
std::vector<Vec> nullspace(const Mat& a);

// Solve A X = B; nullopt when inconsistent. When the system is
// underdetermined an arbitrary particular solution is returned (free
// variables set to zero); use `solve_unique` to insist on uniqueness.
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Solve insisting the solution is unique (A has full column rank).
std::optional<Mat> solve_unique(const Mat& a, const Mat& b);
std::optional<Vec> solve_unique(const Mat& a, const Vec& b);

std::optional<Mat> inverse(const Mat& a);

// Exact positive semidefiniteness of a Hermitian matrix via pivoted LDL*
// congruence. Returns false (with no misclassification) for non-Hermitian
// input. Never touches floating point.
bool hermitian_psd(const Mat& a);

}  // namespace mhad

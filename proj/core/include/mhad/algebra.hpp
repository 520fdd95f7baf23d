// Finite-dimensional, possibly non-unital algebras over Q(i) given by
// structure constants, their multiplier algebras, and basic constructions
// (opposite algebra, extension of nondegenerate homomorphisms).

#pragma once

#include "mhad/subspace.hpp"

#include <string>
#include <vector>

namespace mhad {

// Two-sided multiplier of an algebra A: a pair (lam, rho) of linear maps
// with lam(ab) = lam(a)b, rho(ab) = a rho(b) and a lam(b) = rho(a) b.
// lam is "left multiply by T", rho is "right multiply by T".
struct Multiplier {
    Mat lam;
    Mat rho;

    bool operator==(const Multiplier& o) const { return lam == o.lam && rho == o.rho; }
    bool operator!=(const Multiplier& o) const { return !(*this == o); }

    Multiplier operator*(const Multiplier& o) const {
        // (ST)a = S(Ta), a(ST) = (aS)T.
        return Multiplier{lam * o.lam, o.rho * rho};
    }
    Multiplier operator+(const Multiplier& o) const {
        return Multiplier{lam + o.lam, rho + o.rho};
    }
    Multiplier scaled(const GRat& c) const { return Multiplier{lam.scaled(c), rho.scaled(c)}; }

    static Multiplier identity(std::size_t n) {
        return Multiplier{Mat::identity(n), Mat::identity(n)};
    }
};

class FiniteAlgebra {
public:
    FiniteAlgebra() = default;

    // mult[i] is the matrix of left multiplication by basis vector e_i.
    FiniteAlgebra(std::vector<Mat> left_mult, std::vector<std::string> labels = {});

    std::size_t dim() const { return lm_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }

    // Product of basis elements / arbitrary elements.
    Vec mul(const Vec& a, const Vec& b) const;

    // Left/right multiplication operators of an element.
    Mat lmul(const Vec& a) const;
    Mat rmul(const Vec& a) const;
    const Mat& lmul_basis(std::size_t i) const { return lm_[i]; }
    const Mat& rmul_basis(std::size_t i) const { return rm_[i]; }

    Multiplier embed(const Vec& a) const { return Multiplier{lmul(a), rmul(a)}; }

    // Optional unit and involution.
    void set_unit(Vec u) { unit_ = std::move(u); }
    const std::optional<Vec>& unit() const { return unit_; }

    // Involution a -> a* as an antilinear map: star(a) = star_mat * conj(a).
    void set_star(Mat s) { star_ = std::move(s); }
    const std::optional<Mat>& star() const { return star_; }
    Vec apply_star(const Vec& a) const;

    bool is_associative(std::string* witness = nullptr) const;
    bool is_commutative() const;
    // Left and right nondegeneracy: ab = 0 for all b implies a = 0, and
    // symmetrically.
    bool is_nondegenerate() const;
    // A^2 = A.
    bool is_idempotent() const;
    // In finite dimension, local units for the whole basis amount to a
    // two-sided unit; returns it if the linear system is solvable.
    std::optional<Vec> find_unit() const;
    // star is involutive, antimultiplicative: (ab)* = b* a*.
    bool star_ok(std::string* witness = nullptr) const;

    FiniteAlgebra opposite() const;

private:
    std::vector<Mat> lm_;  // left multiplication by e_i
    std::vector<Mat> rm_;  // right multiplication by e_i
    std::vector<std::string> labels_;
    std::optional<Vec> unit_;
    std::optional<Mat> star_;
};

struct AlgebraReport {
    bool associative = false;
    bool nondegenerate = false;
    bool idempotent = false;
    bool has_unit = false;  // equivalently, local units in finite dimension
    bool star_ok = true;    // vacuously true without a star
    bool commutative = false;
    std::optional<Vec> unit;
    std::string witness;  // first failure found, if any

    bool ok() const { return associative && nondegenerate && idempotent && star_ok; }
};

AlgebraReport validate_algebra(const FiniteAlgebra& a);

// The multiplier algebra M(A) of a nondegenerate algebra, with a chosen
// basis of multipliers and its own structure constants.
struct MultiplierAlgebra {
    FiniteAlgebra algebra;             // M(A) as an abstract unital algebra
    std::vector<Multiplier> basis;     // basis[k] realizes algebra basis e_k
    std::size_t source_dim = 0;

    // Coordinates of a concrete multiplier in the chosen basis; nullopt if
    // it is not a multiplier of A at all.
    std::optional<Vec> coordinates(const Multiplier& m) const;
    Multiplier realize(const Vec& coords) const;

    // Coordinates of the canonical image of a in M(A).
    Vec embed_coords(const FiniteAlgebra& a, const Vec& v) const;
};

MultiplierAlgebra multiplier_algebra(const FiniteAlgebra& a);

// Check the three multiplier identities of (lam, rho) against A directly,
// without building all of M(A).
bool is_multiplier(const FiniteAlgebra& a, const Multiplier& m);

// Extend a nondegenerate homomorphism pi : D -> M(A) (given on a basis of
// D) to M(D) -> M(A). Returns nullopt when pi is degenerate, i.e.
// span(pi(D)A) or span(A pi(D)) is a proper subspace.
std::optional<Multiplier> extend_hom(const FiniteAlgebra& d,
                                     const std::vector<Multiplier>& pi,
                                     const FiniteAlgebra& a,
                                     const Multiplier& t);

}  // namespace mhad

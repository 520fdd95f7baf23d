// Structure-constant algebras, multiplier algebras, and homomorphism
// extension, on small hand-checkable examples.

#include <doctest.h>

#include "mhad/algebra.hpp"

using namespace mhad;

namespace {

// 2x2 matrix units e11, e12, e21, e22 (basis order).
FiniteAlgebra mat2() {
    auto idx = [](std::size_t i, std::size_t j) { return i * 2 + j; };
    std::vector<Mat> lm(4, Mat(4, 4));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    if (j == k) lm[idx(i, j)].at(idx(i, l), idx(k, l)) = GRat(1);
    return FiniteAlgebra(lm);
}

FiniteAlgebra functions(std::size_t n) {
    std::vector<Mat> lm(n, Mat(n, n));
    for (std::size_t i = 0; i < n; ++i) lm[i].at(i, i) = GRat(1);
    return FiniteAlgebra(lm);
}

}  // namespace

TEST_CASE("matrix algebra validates") {
    FiniteAlgebra a = mat2();
    AlgebraReport r = validate_algebra(a);
    CHECK(r.associative);
    CHECK(r.nondegenerate);
    CHECK(r.idempotent);
    CHECK(r.has_unit);
    CHECK(!r.commutative);
    REQUIRE(r.unit.has_value());
    // unit = e11 + e22
    CHECK((*r.unit)[0] == GRat(1));
    CHECK((*r.unit)[1] == GRat(0));
    CHECK((*r.unit)[3] == GRat(1));
}

TEST_CASE("function algebra validates and is commutative") {
    FiniteAlgebra a = functions(3);
    AlgebraReport r = validate_algebra(a);
    CHECK(r.associative);
    CHECK(r.commutative);
    CHECK(r.has_unit);
}

TEST_CASE("zero multiplication fails nondegeneracy and idempotency") {
    std::vector<Mat> lm{Mat(1, 1)};
    FiniteAlgebra a(lm);
    AlgebraReport r = validate_algebra(a);
    CHECK(r.associative);
    CHECK(!r.nondegenerate);
    CHECK(!r.idempotent);
    CHECK(!r.has_unit);
}

TEST_CASE("opposite algebra reverses products") {
    FiniteAlgebra a = mat2();
    FiniteAlgebra op = a.opposite();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Vec x = basis_vec(4, i), y = basis_vec(4, j);
            CHECK(op.mul(x, y) == a.mul(y, x));
        }
    CHECK(op.is_associative());
}

TEST_CASE("multiplier algebra of a unital algebra is the algebra itself") {
    FiniteAlgebra a = functions(2);
    MultiplierAlgebra m = multiplier_algebra(a);
    CHECK(m.algebra.dim() == 2);
    // Each basis element of A embeds with recoverable coordinates.
    for (std::size_t i = 0; i < 2; ++i) {
        Vec c = m.embed_coords(a, basis_vec(2, i));
        Multiplier emb = a.embed(basis_vec(2, i));
        auto back = m.coordinates(emb);
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
}

TEST_CASE("multiplier recognition") {
    FiniteAlgebra a = mat2();
    CHECK(is_multiplier(a, Multiplier::identity(4)));
    CHECK(is_multiplier(a, a.embed(basis_vec(4, 1))));
    // lam and rho that are not compatible.
    Multiplier bad{a.lmul(basis_vec(4, 1)), a.rmul(basis_vec(4, 2))};
    CHECK(!is_multiplier(a, bad));
}

TEST_CASE("star validation") {
    FiniteAlgebra a = mat2();
    // Conjugate transpose: e12* = e21.
    Mat s(4, 4);
    s.at(0, 0) = GRat(1); s.at(3, 3) = GRat(1);
    s.at(2, 1) = GRat(1); s.at(1, 2) = GRat(1);
    a.set_star(s);
    CHECK(a.star_ok());
    // Identity star is not antimultiplicative on a noncommutative algebra.
    a.set_star(Mat::identity(4));
    CHECK(!a.star_ok());
}

TEST_CASE("homomorphism extension to multipliers") {
    FiniteAlgebra d = functions(2);
    FiniteAlgebra a = mat2();
    // pi sends the two points to the two diagonal matrix units.
    std::vector<Multiplier> pi{a.embed(basis_vec(4, 0)), a.embed(basis_vec(4, 3))};
    // The unit of D extends to the unit of M(A).
    Multiplier unit_d = Multiplier::identity(2);
    auto ext = extend_hom(d, pi, a, unit_d);
    REQUIRE(ext.has_value());
    CHECK(*ext == Multiplier::identity(4));
}

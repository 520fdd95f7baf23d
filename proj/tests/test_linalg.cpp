// Exact scalar, matrix and subspace kernel tests. Expected values in this
// file are small enough to be checked by hand.

#include <doctest.h>

#include "mhad/matrix.hpp"
#include "mhad/subspace.hpp"

using namespace mhad;

TEST_CASE("rational parsing and printing round trips") {
    auto r = parse_rat("-22/4");
    REQUIRE(r.has_value());
    CHECK(rat_to_string(*r) == "-11/2");
    CHECK(rat_to_string(*parse_rat("6/3")) == "2");
    CHECK(!parse_rat("1/0").has_value());
    CHECK(!parse_rat("abc").has_value());
    CHECK(!parse_rat("").has_value());
}

TEST_CASE("gaussian rational arithmetic") {
    GRat a(Rat(1, 2), Rat(3));   // 1/2 + 3i
    GRat b(Rat(2), Rat(-1));     // 2 - i
    CHECK((a * b) == GRat(Rat(4), Rat(Rat(11, 2))));
    CHECK((a * a.inv()) == GRat(1));
    CHECK(a.conj() == GRat(Rat(1, 2), Rat(-3)));
    CHECK((grat_i() * grat_i()) == GRat(-1));
    CHECK(grat_to_string(a) == "1/2+3i");
    CHECK(*parse_grat("1/2+3i") == a);
    CHECK(*parse_grat("-i") == GRat(Rat(0), Rat(-1)));
    CHECK(*parse_grat("5/7") == GRat(Rat(5, 7)));
    CHECK(*parse_grat("1/2-3/4i") == GRat(Rat(1, 2), Rat(-3, 4)));
}

TEST_CASE("rref, rank, inverse") {
    Mat m(3, 3);
    // [[1,2,3],[4,5,6],[7,8,10]]: invertible
    int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = GRat(vals[i][j]);
    CHECK(rank(m) == 3);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((*inv * m) == Mat::identity(3));

    Mat sing(2, 2);
    sing.at(0, 0) = GRat(1); sing.at(0, 1) = GRat(2);
    sing.at(1, 0) = GRat(2); sing.at(1, 1) = GRat(4);
    CHECK(rank(sing) == 1);
    CHECK(!inverse(sing).has_value());
}

TEST_CASE("solve and nullspace") {
    Mat a(2, 3);
    a.at(0, 0) = GRat(1); a.at(0, 1) = GRat(1); a.at(0, 2) = GRat(1);
    a.at(1, 0) = GRat(1); a.at(1, 1) = GRat(-1);
    Vec b{GRat(3), GRat(1)};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(vec_is_zero(vec_sub(a * *x, b)));
    auto ns = nullspace(a);
    CHECK(ns.size() == 1);
    CHECK(vec_is_zero(a * ns[0]));

    // Inconsistent system.
    Mat c(2, 1);
    c.at(0, 0) = GRat(1);
    c.at(1, 0) = GRat(1);
    Vec d{GRat(1), GRat(2)};
    CHECK(!solve(c, d).has_value());
}

TEST_CASE("kronecker structure") {
    Mat a(2, 2), b(2, 2);
    a.at(0, 1) = GRat(1);                      // shift
    b.at(0, 0) = GRat(2); b.at(1, 1) = GRat(3);
    Mat k = a.kron(b);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 2) == GRat(2));
    CHECK(k.at(1, 3) == GRat(3));
    Vec u{GRat(1), GRat(0)}, v{GRat(0), GRat(1)};
    CHECK(vec_kron(u, v)[1] == GRat(1));
}

TEST_CASE("hermitian psd is exact") {
    // [[2, i],[-i, 1]] has eigenvalues (3 +- sqrt(5))/2 > 0.
    Mat h(2, 2);
    h.at(0, 0) = GRat(2); h.at(0, 1) = grat_i();
    h.at(1, 0) = -grat_i(); h.at(1, 1) = GRat(1);
    CHECK(hermitian_psd(h));

    // [[1, 2],[2, 1]] has a negative eigenvalue.
    Mat n(2, 2);
    n.at(0, 0) = GRat(1); n.at(0, 1) = GRat(2);
    n.at(1, 0) = GRat(2); n.at(1, 1) = GRat(1);
    CHECK(!hermitian_psd(n));

    // Rank-deficient PSD: [[1,1],[1,1]].
    Mat p(2, 2);
    p.at(0, 0) = GRat(1); p.at(0, 1) = GRat(1);
    p.at(1, 0) = GRat(1); p.at(1, 1) = GRat(1);
    CHECK(hermitian_psd(p));

    // Zero diagonal with nonzero off-diagonal entry cannot be PSD.
    Mat z(2, 2);
    z.at(0, 1) = GRat(1); z.at(1, 0) = GRat(1);
    CHECK(!hermitian_psd(z));

    // Not Hermitian at all.
    Mat nh(2, 2);
    nh.at(0, 1) = GRat(1);
    CHECK(!hermitian_psd(nh));

    CHECK(hermitian_psd(Mat::zero(3, 3)));
}

TEST_CASE("subspace canonical form and operations") {
    Vec v1{GRat(1), GRat(2), GRat(0)};
    Vec v2{GRat(2), GRat(4), GRat(0)};
    Vec v3{GRat(0), GRat(0), GRat(1)};
    Subspace s = Subspace::span(3, {v1, v2, v3});
    CHECK(s.dim() == 2);
    CHECK(s.contains(v2));
    CHECK(!s.contains(Vec{GRat(1), GRat(0), GRat(0)}));

    Subspace t = Subspace::span(3, {Vec{GRat(1), GRat(0), GRat(5)}});
    Subspace meet = s.intersect(t);
    CHECK(meet.dim() == 0);
    Subspace join = s.sum(t);
    CHECK(join.dim() == 3);
    CHECK(join == Subspace::full(3));

    auto coords = s.coordinates(vec_add(v1, v3));
    REQUIRE(coords.has_value());
    // Reconstruct from canonical basis.
    Vec rec(3);
    for (std::size_t k = 0; k < s.dim(); ++k)
        rec = vec_add(rec, vec_scaled(s.basis_vec(k), (*coords)[k]));
    CHECK(rec == vec_add(v1, v3));
}

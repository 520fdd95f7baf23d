// Hopf algebra suppliers: group algebras, function algebras, their duals,
// and the wrapping of a Hopf algebra as an algebroid over the trivial
// base. The dual of a group algebra must come out as the function algebra
// of the same group, computed two independent ways (the Hopf-level dual
// and the generic algebroid dual), and both must agree.

#include <doctest.h>

#include "mhad/duality.hpp"
#include "mhad/hopf.hpp"

using namespace mhad;

namespace {

void expect_all_pass(const CheckReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

// Multiplication table of S3 from permutation composition; index 0 is the
// identity.
std::vector<std::vector<std::size_t>> s3_table() {
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto find = [&](const std::array<int, 3>& p) -> std::size_t {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        REQUIRE(false);
        return 0;
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> comp;
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = find(comp);
        }
    return t;
}

MeasuredAlgebroid measured_from_hopf(const HopfModel& hm) {
    Algebroid al = build_algebroid(hm.data);
    REQUIRE(compute_counits(al));
    REQUIRE(compute_antipode(al));
    MeasuredAlgebroid m = make_measured(std::move(al), *hm.data.muB,
                                        *hm.data.muC, hm.phiC, hm.psiB);
    REQUIRE(validate_measured(m).ok());
    REQUIRE(modular_automorphisms(m).ok());
    REQUIRE(modular_element(m).ok());
    return m;
}

}  // namespace

TEST_CASE("group algebra of Z/2 passes the Hopf battery") {
    HopfData h = group_algebra_hopf({{0, 1}, {1, 0}});
    expect_all_pass(validate_hopf(h));
    CHECK(h.H.is_commutative());
    CHECK(h.S == Mat::identity(2));
}

TEST_CASE("group algebra and function algebra of S3") {
    auto t = s3_table();
    HopfData kg = group_algebra_hopf(t);
    HopfData fg = function_algebra_hopf(t);
    expect_all_pass(validate_hopf(kg));
    expect_all_pass(validate_hopf(fg));
    CHECK(!kg.H.is_commutative());
    CHECK(fg.H.is_commutative());

    // Grouplikes multiply like the group, deltas like pointwise functions.
    CHECK(kg.H.mul(basis_vec(6, 1), basis_vec(6, 1)) == basis_vec(6, t[1][1]));
    CHECK(fg.H.mul(basis_vec(6, 2), basis_vec(6, 2)) == basis_vec(6, 2));
    CHECK(vec_is_zero(fg.H.mul(basis_vec(6, 1), basis_vec(6, 2))));
}

TEST_CASE("the dual of a group algebra is the function algebra") {
    auto t = s3_table();
    HopfData kg = group_algebra_hopf(t);
    auto d = dual_hopf(kg);
    REQUIRE(d.has_value());
    expect_all_pass(validate_hopf(*d));

    // With the Haar integral at the neutral element, the shift basis
    // e_g . phi is the delta at g^-1; reindex through the pairing values
    // to compare with the pointwise model on the nose.
    Mat g = hopf_shift_grid(kg);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            // (e_i . phi)(e_j) = 1 exactly when ij = e.
            CHECK(g.at(j, i) == GRat(t[j][i] == 0 ? 1 : 0));
        }

    // Pointwise product and counting integral in the shift coordinates.
    HopfData fg = function_algebra_hopf(t);
    std::vector<std::size_t> invp(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (t[i][j] == 0) invp[i] = j;
    for (std::size_t i = 0; i < 6; ++i) {
        // e_i . phi corresponds to the delta at i^-1.
        for (std::size_t j = 0; j < 6; ++j) {
            Vec prod = d->H.mul(basis_vec(6, i), basis_vec(6, j));
            Vec expect(6);
            if (invp[i] == invp[j]) expect[i] = GRat(1);
            CHECK(prod == expect);
        }
        CHECK(d->eps[i] == GRat(i == 0 ? 1 : 0));
        // The dual right integral counts: every delta has mass one.
        CHECK(d->psi[i] == GRat(1));
        CHECK(d->phi[i] == GRat(1));
    }
}

TEST_CASE("double dual of the function algebra returns the group algebra") {
    HopfData h = function_algebra_hopf({{0, 1}, {1, 0}});
    auto d = dual_hopf(h);
    REQUIRE(d.has_value());
    expect_all_pass(validate_hopf(*d));
    auto dd = dual_hopf(*d);
    REQUIRE(dd.has_value());
    expect_all_pass(validate_hopf(*dd));
    // Counting integrals pair the deltas to themselves, so the double
    // shift returns the original structure constants exactly.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(dd->H.mul(basis_vec(2, i), basis_vec(2, j)) ==
                  h.H.mul(basis_vec(2, i), basis_vec(2, j)));
}

TEST_CASE("a Hopf algebra is an algebroid over the one-dimensional base") {
    HopfData h = group_algebra_hopf({{0, 1}, {1, 0}});
    HopfModel hm = hopf_algebroid(h);
    Algebroid al = build_algebroid(hm.data);
    expect_all_pass(validate_bialgebroid(al));
    MeasuredAlgebroid m = measured_from_hopf(hm);
    expect_all_pass(check_H1_H2(m.al));
    expect_all_pass(check_regular_identities(m.al));
    expect_all_pass(check_local_projectivity(m.al));

    // Counits collapse to the Hopf counit, the antipode to the Hopf one.
    for (std::size_t a = 0; a < 2; ++a)
        CHECK(m.al.epsC->at(0, a) == h.eps[a]);
    CHECK(*m.al.S == h.S);
}

TEST_CASE("the algebroid dual of a wrapped Hopf algebra matches the Hopf dual") {
    auto t = s3_table();
    HopfData h = group_algebra_hopf(t);
    HopfModel hm = hopf_algebroid(h);
    MeasuredAlgebroid m = measured_from_hopf(hm);
    DualResult dr;
    expect_all_pass(build_dual(m, &dr));
    expect_all_pass(act_identities(m, dr.space, dr.actions));
    expect_all_pass(dual_structure_identities(m, dr));
    expect_all_pass(biduality(m, dr));

    auto d = dual_hopf(h);
    REQUIRE(d.has_value());
    // Same shift basis on both sides, so everything matches entrywise.
    CHECK(dr.space.G == hopf_shift_grid(h));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(dr.dual.al.d.A.mul(basis_vec(6, i), basis_vec(6, j)) ==
                  d->H.mul(basis_vec(6, i), basis_vec(6, j)));
    CHECK(*dr.dual.al.S == d->S);
    CHECK(dr.dual.phi == d->phi);
    CHECK(dr.dual.psi == d->psi);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(dr.dual.al.epsC->at(0, i) == d->eps[i]);
}

// Duals of groupoid function algebras, where everything is computable by
// hand: the dual of functions on a group(oid) is its convolution algebra,
// the actions are translation operators, the antipode inverts arrows, and
// the cointegrals are indicators of units.

#include <doctest.h>

#include "mhad/duality.hpp"
#include "mhad/groupoid.hpp"

using namespace mhad;

namespace {

void expect_all_pass(const CheckReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

MeasuredAlgebroid measured_from(const GroupoidModel& gm) {
    Algebroid al = build_algebroid(gm.data);
    REQUIRE(compute_counits(al));
    REQUIRE(compute_antipode(al));
    MeasuredAlgebroid m = make_measured(std::move(al), *gm.data.muB,
                                        *gm.data.muC, gm.phiC, gm.psiB);
    REQUIRE(validate_measured(m).ok());
    REQUIRE(modular_automorphisms(m).ok());
    REQUIRE(modular_element(m).ok());
    return m;
}

void full_battery(const MeasuredAlgebroid& m, DualResult* dr) {
    expect_all_pass(build_dual(m, dr));
    expect_all_pass(act_identities(m, dr->space, dr->actions));
    expect_all_pass(dual_structure_identities(m, *dr));
    expect_all_pass(dual_multiplier_space(m, *dr));
    expect_all_pass(biduality(m, *dr));
    expect_all_pass(cointegrals(m, dr));
}

}  // namespace

TEST_CASE("trivial groupoid is self dual") {
    MeasuredAlgebroid m = measured_from(groupoid_algebroid(group_groupoid({{0}})));
    DualResult dr;
    full_battery(m, &dr);
    CHECK(dr.space.G == Mat::identity(1));
    CHECK(dr.dual.al.d.A.unit().has_value());
}

TEST_CASE("Z/2 with counting weights dualizes to the group algebra") {
    GroupoidModel gm = groupoid_algebroid(group_groupoid({{0, 1}, {1, 0}}));
    MeasuredAlgebroid m = measured_from(gm);
    DualResult dr;
    full_battery(m, &dr);

    // Counting weights make the shift basis the dual basis of deltas.
    CHECK(dr.space.G == Mat::identity(2));

    // Convolution is the group product: omega_g omega_g = omega_e.
    const FiniteAlgebra& ahat = dr.dual.al.d.A;
    CHECK(ahat.mul(basis_vec(2, 1), basis_vec(2, 1)) == basis_vec(2, 0));
    CHECK(ahat.mul(basis_vec(2, 0), basis_vec(2, 1)) == basis_vec(2, 1));

    // Both actions of omega_g translate by g; omega_e acts as identity.
    Mat swap(2, 2);
    swap.at(0, 1) = GRat(1);
    swap.at(1, 0) = GRat(1);
    CHECK(dr.actions.tri[0] == Mat::identity(2));
    CHECK(dr.actions.itri[0] == Mat::identity(2));
    CHECK(dr.actions.tri[1] == swap);
    CHECK(dr.actions.itri[1] == swap);

    // The dual integrals both evaluate at the unit arrow.
    CHECK(dr.dual.phi == Vec{GRat(1), GRat(0)});
    CHECK(dr.dual.psi == Vec{GRat(1), GRat(0)});

    // The dual antipode fixes both group elements (g = g^-1), and the
    // involution is trivial for the same reason.
    CHECK(*dr.dual.al.S == Mat::identity(2));
    CHECK(*dr.dual.al.d.A.star() == Mat::identity(2));

    // Cointegrals: the delta at the unit on the function side.
    CointegralResult cr;
    expect_all_pass(cointegrals(m, &dr, &cr));
    CHECK(cr.left.dim() == 1);
    CHECK(cr.right.dim() == 1);
    CHECK(*cr.normalizedLeft == basis_vec(2, 0));
    CHECK(*cr.normalizedRight == basis_vec(2, 0));
}

TEST_CASE("pair groupoid with unit weights dualizes to matrix units") {
    GroupoidModel gm = groupoid_algebroid(pair_groupoid(2, {Rat(1), Rat(1)}));
    MeasuredAlgebroid m = measured_from(gm);
    DualResult dr;
    full_battery(m, &dr);

    // Arrow i*2+j runs from j to i; convolution realizes matrix units
    // E_ij E_jl = E_il and kills incomposable pairs.
    const FiniteAlgebra& ahat = dr.dual.al.d.A;
    auto arrow = [](std::size_t i, std::size_t j) { return i * 2 + j; };
    CHECK(ahat.mul(basis_vec(4, arrow(0, 1)), basis_vec(4, arrow(1, 0))) ==
          basis_vec(4, arrow(0, 0)));
    CHECK(ahat.mul(basis_vec(4, arrow(0, 1)), basis_vec(4, arrow(1, 1))) ==
          basis_vec(4, arrow(0, 1)));
    CHECK(vec_is_zero(ahat.mul(basis_vec(4, arrow(0, 1)), basis_vec(4, arrow(0, 1)))));

    // Antipode and involution both flip an arrow.
    CHECK(dr.dual.al.S->col(arrow(0, 1)) == basis_vec(4, arrow(1, 0)));
    CHECK(dr.dual.al.d.A.star()->col(arrow(0, 1)) == basis_vec(4, arrow(1, 0)));

    // Backward action of omega_gamma0: (a <| omega)(gamma') picks the
    // value of a at gamma0 gamma' when composable.
    for (std::size_t g0 = 0; g0 < 4; ++g0)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t gp = 0; gp < 4; ++gp) {
                const GroupoidSpec& sp = gm.spec;
                GRat expect = sp.compose[g0][gp] && *sp.compose[g0][gp] == b
                                  ? GRat(1)
                                  : GRat(0);
                CHECK(dr.actions.itri[g0].at(gp, b) == expect);
            }

    // The matched tensor squares are eight dimensional and every pairing
    // grid has full rank on them.
    CHECK(m.al.Q1.q.dim() == 8);
    CHECK(rank(dr.ara) == 8);
    CHECK(rank(dr.ala) == 8);

    // Cointegrals: the functions supported on unit arrows. The defining
    // equation is C-linear, so the space has one dimension per vertex;
    // normalizing against phiC singles out the indicator of the units.
    CointegralResult cr;
    expect_all_pass(cointegrals(m, &dr, &cr));
    Vec units(4);
    units[arrow(0, 0)] = GRat(1);
    units[arrow(1, 1)] = GRat(1);
    CHECK(cr.left.dim() == 2);
    CHECK(cr.right.dim() == 2);
    CHECK(*cr.normalizedLeft == units);
    CHECK(*cr.normalizedRight == units);
}

TEST_CASE("pair groupoid with weights (1, 4)") {
    GroupoidModel gm = groupoid_algebroid(pair_groupoid(2, {Rat(1), Rat(4)}));
    MeasuredAlgebroid m = measured_from(gm);
    DualResult dr;
    full_battery(m, &dr);

    // The shift basis now carries the target weight: G is the diagonal of
    // weight(tgt).
    Mat g(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
        g.at(a, a) = GRat(gm.spec.weight_at(gm.spec.tgt[a]));
    CHECK(dr.space.G == g);

    // Nontrivial modular data on the dual side must still pass the closed
    // forms; spot check that the dual is not unimodular.
    CHECK(*dr.dual.sigmaPhi != Mat::identity(4));
}

TEST_CASE("dropping the right integral breaks the shift identifications") {
    GroupoidModel gm = groupoid_algebroid(group_groupoid({{0, 1}, {1, 0}}));
    Algebroid al = build_algebroid(gm.data);
    REQUIRE(compute_counits(al));
    REQUIRE(compute_antipode(al));
    MeasuredAlgebroid m = make_measured(std::move(al), *gm.data.muB,
                                        *gm.data.muC, gm.phiC, Mat(1, 2));
    DualSpace ds;
    CheckReport rep = dual_space(m, &ds);
    CHECK(!rep.ok());
    const Check* c = rep.find("shift images of the integrals agree");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
    CHECK(c->detail == "psi shifts span a proper subspace");
}

TEST_CASE("corrupted counit breaks the cointegral and unitality match") {
    GroupoidModel gm = groupoid_algebroid(group_groupoid({{0, 1}, {1, 0}}));
    MeasuredAlgebroid m = measured_from(gm);
    DualResult dr;
    REQUIRE(build_dual(m, &dr).ok());
    // Scale the left counit after the fact: the dual still has a unit but
    // no function satisfies the doubled cointegral equation.
    m.al.epsC = m.al.epsC->scaled(GRat(2));
    CointegralResult cr;
    CheckReport rep = cointegrals(m, &dr, &cr);
    CHECK(cr.left.dim() == 0);
    CHECK(!cr.normalizedLeft.has_value());
    const Check* c = rep.find("left cointegral normalization matches dual unitality");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
}

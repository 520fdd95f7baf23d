// The closed-form convolution oracle for groupoid duals against the
// generic duality machinery, including the square-root weight twist that
// the shift basis picks up. The oracle refuses weights whose cocycle is
// not a rational square; the generic route has no such restriction, which
// is itself checked.

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

void compare_oracle(const GroupoidSpec& spec) {
    GroupoidModel gm = groupoid_algebroid(spec);
    MeasuredAlgebroid m = measured_from(gm);
    DualResult dr;
    expect_all_pass(build_dual(m, &dr));

    auto oracle = groupoid_dual_oracle(spec);
    REQUIRE(oracle.has_value());
    std::size_t n = spec.num_arrows;

    CHECK(dr.space.G == oracle->G);
    for (std::size_t a = 0; a < n; ++a) {
        CHECK(dr.actions.tri[a] == oracle->tri[a]);
        CHECK(dr.actions.itri[a] == oracle->itri[a]);
        for (std::size_t b = 0; b < n; ++b)
            CHECK(dr.dual.al.d.A.mul(basis_vec(n, a), basis_vec(n, b)) ==
                  oracle->mul[a * n + b]);
    }
    CHECK(dr.dual.phi == oracle->phiHat);
    CHECK(dr.dual.psi == oracle->psiHat);
    CHECK(*dr.dual.al.S == oracle->S);
    CHECK(*dr.dual.al.d.A.star() == oracle->star);
}

}  // namespace

TEST_CASE("oracle matches the generic dual for the group Z/2") {
    compare_oracle(group_groupoid({{0, 1}, {1, 0}}));
}

TEST_CASE("oracle matches the generic dual for the pair groupoid") {
    compare_oracle(pair_groupoid(2, {Rat(1), Rat(1)}));
}

TEST_CASE("oracle matches for square weights and twists every slot it should") {
    GroupoidSpec spec = pair_groupoid(2, {Rat(1), Rat(4)});
    compare_oracle(spec);

    // The twist sits in the backward action and the antipode, never in the
    // forward action or the convolution table: the cocycle roots cancel
    // there. Spot check the off-diagonal arrow 0->1 (index 2), whose
    // cocycle value is 4.
    auto oracle = groupoid_dual_oracle(spec);
    REQUIRE(oracle.has_value());
    std::size_t up = 2, down = 1;  // arrow 1*2+0 runs 0 -> 1, its inverse 0*2+1
    CHECK(spec.tgt[up] == 3);
    CHECK(spec.inv[up] == down);
    CHECK(oracle->S.at(down, up) == GRat(4));
    CHECK(oracle->star.at(down, up) == GRat(4));
    CHECK(oracle->itri[up].at(down, *spec.compose[up][down]) == GRat(4));
    CHECK(oracle->tri[up].at(down, *spec.compose[down][up]) == GRat(1));
    CHECK(oracle->mul[up * 4 + down][*spec.compose[up][down]] == GRat(1));
}

TEST_CASE("non-square weights refuse the oracle but not the generic dual") {
    GroupoidSpec spec = pair_groupoid(2, {Rat(1), Rat(2)});
    CHECK(!groupoid_dual_oracle(spec).has_value());
    MeasuredAlgebroid m = measured_from(groupoid_algebroid(spec));
    DualResult dr;
    expect_all_pass(build_dual(m, &dr));
    expect_all_pass(biduality(m, dr));
}

// Full axiom battery, counits, antipode and structural side conditions on
// function algebras of small groupoids, where every expected value has a
// closed form: the trivial groupoid, the group Z/2 viewed as a one-unit
// groupoid, and the pair groupoid on two points.

#include <doctest.h>

#include "mhad/algebroid.hpp"
#include "mhad/groupoid.hpp"

using namespace mhad;

namespace {

GroupoidSpec z2_spec() { return group_groupoid({{0, 1}, {1, 0}}); }

GroupoidSpec p2_spec() { return pair_groupoid(2, {Rat(1), Rat(1)}); }

void expect_all_pass(const CheckReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("groupoid specs validate") {
    expect_all_pass(validate_groupoid(z2_spec()));
    expect_all_pass(validate_groupoid(p2_spec()));
    expect_all_pass(validate_groupoid(pair_groupoid(2, {Rat(1), Rat(4)})));
    expect_all_pass(validate_groupoid(group_groupoid({{0}})));

    // Broken inverse table.
    GroupoidSpec bad = z2_spec();
    bad.inv[1] = 0;
    CheckReport rep = validate_groupoid(bad);
    CHECK(!rep.ok());
    CHECK(!rep.find("inverse laws")->pass);
}

TEST_CASE("trivial algebroid: everything is the identity") {
    GroupoidModel m = groupoid_algebroid(group_groupoid({{0}}));
    Algebroid al = build_algebroid(m.data);
    expect_all_pass(validate_bialgebroid(al));
    CHECK(al.Q1.q.dim() == 1);
    CHECK(al.Q4.q.dim() == 1);
    REQUIRE(al.Tr.has_value());
    CHECK(*al.Tr == Mat::identity(1));
    CheckReport rep;
    REQUIRE(compute_counits(al, &rep));
    REQUIRE(compute_antipode(al, &rep));
    expect_all_pass(rep);
    CHECK(*al.S == Mat::identity(1));
    CHECK(*al.epsC == Mat::identity(1));
    expect_all_pass(check_H1_H2(al));
    expect_all_pass(check_regular_identities(al));
    expect_all_pass(check_star(al));
    expect_all_pass(check_local_projectivity(al));
}

TEST_CASE("group Z/2 as a one-unit groupoid") {
    GroupoidModel m = groupoid_algebroid(z2_spec());
    Algebroid al = build_algebroid(m.data);
    expect_all_pass(validate_bialgebroid(al));

    // One-dimensional base: the balanced tensor squares are all of A (x) A.
    CHECK(al.Q1.q.dim() == 4);
    CHECK(al.Q4.q.dim() == 4);

    // Oracle: the right canonical map sends delta_a (x) delta_b to
    // delta_{a b^{-1}} (x) delta_b; with a group every element is
    // self-composable, so this is a permutation of the four basis tensors.
    REQUIRE(al.Tr.has_value());
    Mat expected(4, 4);
    // (e,e)->(e,e), (e,g)->(g,g), (g,e)->(g,e), (g,g)->(e,g)
    expected.at(tidx(0, 0, 2), tidx(0, 0, 2)) = GRat(1);
    expected.at(tidx(1, 1, 2), tidx(0, 1, 2)) = GRat(1);
    expected.at(tidx(1, 0, 2), tidx(1, 0, 2)) = GRat(1);
    expected.at(tidx(0, 1, 2), tidx(1, 1, 2)) = GRat(1);
    // The quotient has no relations here, so sections are trivial.
    CHECK(al.Q1.q.proj == Mat::identity(4));
    CHECK(*al.Tr == expected);

    CheckReport rep;
    REQUIRE(compute_counits(al, &rep));
    REQUIRE(compute_antipode(al, &rep));
    expect_all_pass(rep);
    // Counit restricts to the unit point; both group elements are
    // self-inverse so the antipode is the identity.
    CHECK(*al.epsC == m.epsC_expected);
    CHECK(*al.epsB == m.epsB_expected);
    CHECK(*al.S == m.S_expected);
    CHECK(*al.S == Mat::identity(2));

    expect_all_pass(check_H1_H2(al));
    expect_all_pass(check_regular_identities(al));
    expect_all_pass(check_star(al));
    expect_all_pass(check_local_projectivity(al));
}

TEST_CASE("pair groupoid on two points") {
    GroupoidModel m = groupoid_algebroid(p2_spec());
    Algebroid al = build_algebroid(m.data);
    expect_all_pass(validate_bialgebroid(al));

    // Arrows (i,j) with i,j in {1,2}: four arrows, two units; composable
    // pairs form a 2x2x2 = 8 element set, so each square has dimension 8.
    CHECK(al.n() == 4);
    CHECK(al.Q1.q.dim() == 8);
    CHECK(al.Q2.q.dim() == 8);

    CheckReport rep;
    REQUIRE(compute_counits(al, &rep));
    REQUIRE(compute_antipode(al, &rep));
    expect_all_pass(rep);
    CHECK(*al.epsC == m.epsC_expected);
    CHECK(*al.epsB == m.epsB_expected);
    // S flips an arrow: delta_(1,2) goes to delta_(2,1).
    CHECK(*al.S == m.S_expected);
    CHECK(al.S->at(2, 1) == GRat(1));
    CHECK(al.S->at(1, 2) == GRat(1));
    CHECK(al.S->at(0, 0) == GRat(1));

    expect_all_pass(check_H1_H2(al));
    expect_all_pass(check_regular_identities(al));
    expect_all_pass(check_star(al));
    expect_all_pass(check_local_projectivity(al));
}

TEST_CASE("weights do not change the underlying algebroid") {
    GroupoidModel m = groupoid_algebroid(pair_groupoid(2, {Rat(1), Rat(4)}));
    Algebroid al = build_algebroid(m.data);
    expect_all_pass(validate_bialgebroid(al));
    CheckReport rep;
    REQUIRE(compute_counits(al, &rep));
    REQUIRE(compute_antipode(al, &rep));
    expect_all_pass(rep);
    CHECK(*al.S == m.S_expected);
    // Cocycle values: D(1,2) = w1/w2 = 1/4, D(2,1) = 4.
    CHECK(m.D[tidx(0, 1, 2)] == GRat(Rat(1, 4)));
    CHECK(m.D[tidx(1, 0, 2)] == GRat(4));
    std::vector<Rat> roots;
    CHECK(m.spec.cocycle_square(&roots));
    CHECK(roots[tidx(0, 1, 2)] == Rat(1, 2));
}

TEST_CASE("corrupted comultiplication is caught with a witness") {
    GroupoidModel m = groupoid_algebroid(p2_spec());
    // Tamper with a single representative entry on a composable pair, so
    // the change is visible modulo the balancing relations.
    m.data.dcr[0 * 4 + 0][tidx(0, 0, 4)] += GRat(1);
    Algebroid al = build_algebroid(m.data);
    CheckReport rep = validate_bialgebroid(al);
    CHECK(!rep.ok());
    const Check* c = rep.find("left comult representatives consistent");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
    CHECK(c->detail.find("witness") != std::string::npos);
}

TEST_CASE("scaled comultiplication breaks coassociativity but not consistency") {
    GroupoidModel m = groupoid_algebroid(p2_spec());
    // Scale the left comultiplication of one basis element in both of its
    // representative tables; the pair stays consistent and bilinear, but
    // the mixed coassociativity identities fail.
    std::size_t a = 1;
    for (std::size_t b = 0; b < 4; ++b) {
        for (auto& x : m.data.dcr[a * 4 + b]) x = x * GRat(2);
        for (auto& x : m.data.dcl[a * 4 + b]) x = x * GRat(2);
    }
    Algebroid al = build_algebroid(m.data);
    CheckReport rep = validate_bialgebroid(al);
    CHECK(!rep.ok());
    CHECK(rep.find("left comult representatives consistent")->pass);
    CHECK(rep.find("left comult bilinear")->pass);
    CHECK(!rep.find("coassociativity mixed one")->pass);
    CHECK(rep.find("coassociativity mixed one")->detail.find("witness") != std::string::npos);
}

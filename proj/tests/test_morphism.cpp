// Morphism machinery on groupoid fixtures: the identity map, the
// comultiplication extension to multipliers, a pullback that is a perfectly
// good algebra map but not a morphism, and the evaluation embedding into
// the double dual checked through the pairing criterion.

#include <doctest.h>

#include "mhad/groupoid.hpp"
#include "mhad/morphism.hpp"

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
    return m;
}

MorphismSpec identity_spec(const Algebroid& al) {
    MorphismSpec sp;
    sp.src = &al;
    sp.dst = &al;
    for (std::size_t d = 0; d < al.n(); ++d)
        sp.pi.push_back(Multiplier{al.d.A.lmul_basis(d), al.d.A.rmul_basis(d)});
    return sp;
}

}  // namespace

TEST_CASE("identity morphism on the pair groupoid") {
    GroupoidModel gm = groupoid_algebroid(pair_groupoid(2, {Rat(1), Rat(1)}));
    MeasuredAlgebroid m = measured_from(gm);
    MorphismSpec sp = identity_spec(m.al);
    expect_all_pass(validate_morphism(sp));
    expect_all_pass(check_antipode_preserved(sp));
}

TEST_CASE("comultiplication extension to multipliers") {
    GroupoidModel gm = groupoid_algebroid(pair_groupoid(2, {Rat(1), Rat(1)}));
    MeasuredAlgebroid m = measured_from(gm);
    const Algebroid& al = m.al;
    std::size_t n = al.n();

    // The identity multiplier extends to the identity on both squares.
    {
        CheckReport rep;
        auto e = extend_comultiplications(al, Multiplier::identity(n), &rep);
        expect_all_pass(rep);
        REQUIRE(e.has_value());
        CHECK(e->onQ1 == Mat::identity(al.Q1.q.dim()));
        CHECK(e->onQ2 == Mat::identity(al.Q2.q.dim()));
    }

    // An element of A extends to its elementwise comultiplication; the
    // report records the restriction check.
    {
        CheckReport rep;
        Vec t = vec_add(basis_vec(n, 0), basis_vec(n, 1));
        auto e = extend_comultiplications(
            al, Multiplier{al.d.A.lmul(t), al.d.A.rmul(t)}, &rep);
        REQUIRE(e.has_value());
        expect_all_pass(rep);
        REQUIRE(rep.find("extension restricts to the comultiplication tables"));
    }

    // A genuine multiplier from the base: the pullback of an indicator of
    // a vertex through the source map. Its right comultiplication must
    // multiply each class by the indicator value at the source of the
    // composite arrow, on all quotient coordinates.
    {
        CheckReport rep;
        auto e = extend_comultiplications(al, al.d.B.img[1], &rep);
        expect_all_pass(rep);
        REQUIRE(e.has_value());
        const GroupoidSpec& spc = gm.spec;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) {
                Vec cls = al.Q2.q.proj * vec_kron(basis_vec(n, a), basis_vec(n, c));
                GRat val = spc.src[c] == spc.units[1] ? GRat(1) : GRat(0);
                CHECK(e->onQ2 * cls == vec_scaled(cls, val));
            }
    }
}

TEST_CASE("pullback along inversion is not a morphism") {
    GroupoidModel gm = groupoid_algebroid(pair_groupoid(2, {Rat(1), Rat(1)}));
    MeasuredAlgebroid m = measured_from(gm);
    std::size_t n = m.al.n();
    MorphismSpec sp;
    sp.src = &m.al;
    sp.dst = &m.al;
    for (std::size_t d = 0; d < n; ++d) {
        std::size_t di = gm.spec.inv[d];
        sp.pi.push_back(
            Multiplier{m.al.d.A.lmul_basis(di), m.al.d.A.rmul_basis(di)});
    }
    CheckReport rep = validate_morphism(sp);
    CHECK(!rep.ok());
    // It is a perfectly fine non-degenerate homomorphism; only the base
    // conditions fail (source functions pull back to target functions).
    CHECK(rep.find("the map is a homomorphism")->pass);
    CHECK(rep.find("the map is non-degenerate")->pass);
    CHECK(!rep.find("base images land in the target bases")->pass);

    // Composing it with itself gives back the identity morphism.
    auto sq = compose_morphisms(sp, sp);
    REQUIRE(sq.has_value());
    MorphismSpec id = identity_spec(m.al);
    for (std::size_t d = 0; d < n; ++d) CHECK(sq->pi[d] == id.pi[d]);
    expect_all_pass(validate_morphism(*sq));
}

TEST_CASE("evaluation embedding into the double dual is a morphism") {
    GroupoidModel gm = groupoid_algebroid(pair_groupoid(2, {Rat(1), Rat(1)}));
    MeasuredAlgebroid m = measured_from(gm);
    DualResult dr;
    REQUIRE(build_dual(m, &dr).ok());
    DualResult ddr;
    REQUIRE(build_dual(dr.dual, &ddr).ok());

    std::size_t n = m.al.n();
    Mat j = ddr.space.Ginv * dr.space.G.transpose();
    std::vector<Multiplier> pi;
    const FiniteAlgebra& ahh = ddr.dual.al.d.A;
    for (std::size_t a = 0; a < n; ++a)
        pi.push_back(Multiplier{ahh.lmul(j.col(a)), ahh.rmul(j.col(a))});

    expect_all_pass(check_morphism_into_dual(dr.dual, ddr, m.al, pi));

    MorphismSpec sp{&m.al, &ddr.dual.al, pi};
    expect_all_pass(validate_morphism(sp));
    expect_all_pass(check_antipode_preserved(sp));
}

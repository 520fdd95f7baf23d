// Two-sided crossed products C (x) H (x) C^op: the axiom batteries on the
// resulting algebroid, the closed forms for counits and antipode, the Hopf
// algebra sitting inside as a morphism, and the dual identified with rank
// one operators on C tensored with the dual Hopf algebra, including the
// two degenerate limits where one tensor factor disappears.

#include <doctest.h>

#include "mhad/morphism.hpp"
#include "mhad/groupoid.hpp"
#include "mhad/smash.hpp"

using namespace mhad;

namespace {

void expect_all_pass(const CheckReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
}

// Functions on two points with Z/2 translating them; the uniform measure
// is the invariant normalized faithful functional.
SmashSpec translation_fixture() {
    SmashSpec s;
    s.H = group_algebra_hopf({{0, 1}, {1, 0}});
    s.C = function_algebra_hopf({{0, 1}, {1, 0}}).H;
    s.action = Mat(2, 4);
    s.action.at(0, 0 * 2 + 0) = GRat(1);  // identity fixes both deltas
    s.action.at(1, 0 * 2 + 1) = GRat(1);
    s.action.at(1, 1 * 2 + 0) = GRat(1);  // the flip swaps them
    s.action.at(0, 1 * 2 + 1) = GRat(1);
    s.muC = {GRat(Rat(1, 2)), GRat(Rat(1, 2))};
    return s;
}

SmashSpec trivial_hopf_fixture() {
    SmashSpec s;
    s.H = group_algebra_hopf({{0}});
    s.C = function_algebra_hopf({{0, 1}, {1, 0}}).H;
    s.action = Mat::identity(2);
    s.muC = {GRat(Rat(1, 2)), GRat(Rat(1, 2))};
    return s;
}

SmashSpec trivial_coefficients_fixture() {
    SmashSpec s;
    s.H = group_algebra_hopf({{0, 1}, {1, 0}});
    s.C = FiniteAlgebra({Mat::identity(1)});
    s.C.set_unit(basis_vec(1, 0));
    s.action = Mat(1, 2);
    s.action.at(0, 0) = s.H.eps[0];
    s.action.at(0, 1) = s.H.eps[1];
    s.muC = {GRat(1)};
    return s;
}

MeasuredAlgebroid measured_from(const CrossedModel& cm) {
    Algebroid al = build_algebroid(cm.data);
    REQUIRE(compute_counits(al));
    REQUIRE(compute_antipode(al));
    MeasuredAlgebroid m = make_measured(std::move(al), *cm.data.muB,
                                        *cm.data.muC, cm.phiC, cm.psiB);
    REQUIRE(validate_measured(m).ok());
    REQUIRE(modular_automorphisms(m).ok());
    REQUIRE(modular_element(m).ok());
    return m;
}

Algebroid algebroid_of_hopf(const HopfData& h) {
    HopfModel hm = hopf_algebroid(h);
    Algebroid al = build_algebroid(hm.data);
    REQUIRE(compute_counits(al));
    REQUIRE(compute_antipode(al));
    return al;
}

// Rank one operators |y_p><x_q| on C with the product forced by
// z -> muC(z y) x, tensored with the dual Hopf algebra on its shift
// basis; index (p*c + q)*hdim + v.
struct KHModel {
    FiniteAlgebra alg;
    HopfData dual;
    std::size_t c = 0, hd = 0;

    std::size_t kidx(std::size_t p, std::size_t q, std::size_t v) const {
        return (p * c + q) * hd + v;
    }
};

KHModel make_kh(const SmashSpec& s) {
    KHModel kh;
    kh.c = s.C.dim();
    auto d = dual_hopf(s.H);
    REQUIRE(d.has_value());
    kh.dual = *d;
    kh.hd = s.H.H.dim();
    std::size_t c = kh.c, hd = kh.hd, n = c * c * hd;
    std::vector<Mat> lm(n, Mat(n, n));
    for (std::size_t p = 0; p < c; ++p)
        for (std::size_t q = 0; q < c; ++q)
            for (std::size_t v = 0; v < hd; ++v)
                for (std::size_t p2 = 0; p2 < c; ++p2)
                    for (std::size_t q2 = 0; q2 < c; ++q2) {
                        GRat w = dot(s.muC, s.C.mul(basis_vec(c, p2), basis_vec(c, q)));
                        if (w == GRat(0)) continue;
                        for (std::size_t v2 = 0; v2 < hd; ++v2) {
                            Vec hv = kh.dual.H.mul(basis_vec(hd, v), basis_vec(hd, v2));
                            for (std::size_t r = 0; r < hd; ++r)
                                if (hv[r] != GRat(0))
                                    lm[kh.kidx(p, q, v)].at(kh.kidx(p, q2, r),
                                                            kh.kidx(p2, q2, v2)) +=
                                        w * hv[r];
                        }
                    }
    kh.alg = FiniteAlgebra(lm);
    if (auto u = kh.alg.find_unit()) kh.alg.set_unit(*u);
    return kh;
}

// The identification of the dual with K (x) Hhat, as a coordinate matrix
// from dual-shift coordinates to KH coordinates, built by pushing the
// spanning functionals h_k y_i . phi . x_j through the pairing grid.
Mat identification(const CrossedModel& cm, const MeasuredAlgebroid& m,
                   const DualResult& dr, const KHModel& kh) {
    std::size_t c = kh.c, hd = kh.hd, n = m.al.n();
    const FiniteAlgebra& A = m.al.d.A;
    Mat fam(n, n), tgt(n, n);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t k = 0; k < hd; ++k)
            for (std::size_t j = 0; j < c; ++j) {
                std::size_t t = (i * hd + k) * c + j;
                Functional f = sandwich(m.phi, A.lmul(cm.embB[j]),
                                        A.rmul(A.mul(cm.embH[k], cm.embC[i])));
                Vec coords = dr.space.coords(f);
                for (std::size_t r = 0; r < n; ++r) fam.at(r, t) = coords[r];
                tgt.at(kh.kidx(i, j, k), t) = GRat(1);
            }
    auto fi = inverse(fam);
    REQUIRE(fi.has_value());
    return tgt * *fi;
}

// Full comparison of the generic dual with the closed form.
void dual_oracle_check(const SmashSpec& s) {
    auto cm = crossed_product(s);
    REQUIRE(cm.has_value());
    MeasuredAlgebroid m = measured_from(*cm);
    DualResult dr;
    expect_all_pass(build_dual(m, &dr));
    expect_all_pass(biduality(m, dr));

    KHModel kh = make_kh(s);
    std::size_t c = kh.c, hd = kh.hd, n = m.al.n();
    REQUIRE(kh.alg.dim() == n);
    Mat t = identification(*cm, m, dr, kh);
    auto ti = inverse(t);
    REQUIRE(ti.has_value());

    // Algebra isomorphism onto K (x) Hhat.
    bool iso = true;
    for (std::size_t a = 0; a < n && iso; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec lhs = t * dr.dual.al.d.A.mul(ti->col(a), ti->col(b));
            if (lhs != kh.alg.mul(basis_vec(n, a), basis_vec(n, b))) {
                iso = false;
                break;
            }
        }
    CHECK(iso);

    // Embedding of the source base: z appends to the ket.
    bool bemb = true;
    for (std::size_t z = 0; z < c && bemb; ++z) {
        Mat lhs = t * dr.dual.al.d.C.img[z].lam * *ti;
        Mat expect(n, n);
        for (std::size_t p = 0; p < c; ++p) {
            Vec yz = s.C.mul(basis_vec(c, p), basis_vec(c, z));
            for (std::size_t q = 0; q < c; ++q)
                for (std::size_t v = 0; v < hd; ++v)
                    for (std::size_t r = 0; r < c; ++r)
                        if (yz[r] != GRat(0))
                            expect.at(kh.kidx(r, q, v), kh.kidx(p, q, v)) += yz[r];
        }
        bemb = lhs == expect;
    }
    CHECK(bemb);

    // Embedding of the target base: z is twisted into the ket through the
    // inverse antipode of the first comultiplication leg.
    auto shinv = inverse(s.H.S);
    REQUIRE(shinv.has_value());
    bool cemb = true;
    for (std::size_t z = 0; z < c && cemb; ++z) {
        Mat lhs = t * dr.dual.al.d.B.img[z].lam * *ti;
        Mat expect(n, n);
        for (std::size_t p = 0; p < c; ++p)
            for (std::size_t q = 0; q < c; ++q)
                for (std::size_t v = 0; v < hd; ++v)
                    for (std::size_t p1 = 0; p1 < hd; ++p1)
                        for (std::size_t q1 = 0; q1 < hd; ++q1) {
                            const GRat& dcoef = s.H.Delta.at(tidx(p1, q1, hd), v);
                            if (dcoef == GRat(0)) continue;
                            Vec zz(c);
                            for (std::size_t u = 0; u < hd; ++u)
                                if (shinv->at(u, p1) != GRat(0))
                                    zz = vec_add(zz, vec_scaled(s.act(u, z),
                                                                shinv->at(u, p1)));
                            Vec ket = s.C.mul(zz, basis_vec(c, p));
                            for (std::size_t r = 0; r < c; ++r)
                                if (ket[r] != GRat(0))
                                    expect.at(kh.kidx(r, q, q1), kh.kidx(p, q, v)) +=
                                        dcoef * ket[r];
                        }
        cemb = lhs == expect;
    }
    CHECK(cemb);

    // Counit functional and dual left integral in closed form.
    Functional epshat_kh(n), phihat_kh(n);
    for (std::size_t p = 0; p < c; ++p)
        for (std::size_t q = 0; q < c; ++q)
            for (std::size_t v = 0; v < hd; ++v) {
                epshat_kh[kh.kidx(p, q, v)] = s.muC[p] * s.muC[q] * kh.dual.eps[v];
                phihat_kh[kh.kidx(p, q, v)] =
                    dot(s.muC, s.C.mul(basis_vec(c, q), basis_vec(c, p))) *
                    kh.dual.phi[v];
            }
    Functional epshat(n);
    for (std::size_t a = 0; a < n; ++a)
        epshat[a] = dot(dr.dual.muC, dr.dual.al.epsC->col(a));
    CHECK(epshat == precompose(epshat_kh, t));
    CHECK(dr.dual.phi == precompose(phihat_kh, t));

    // The slice at the rank one projection of the unit is a morphism from
    // the dual Hopf algebra into the dual algebroid.
    Algebroid src = algebroid_of_hopf(kh.dual);
    const Vec& uC = *s.C.unit();
    std::vector<Multiplier> pi;
    for (std::size_t v = 0; v < hd; ++v) {
        Vec target(n);
        for (std::size_t p = 0; p < c; ++p)
            for (std::size_t q = 0; q < c; ++q)
                target[kh.kidx(p, q, v)] = uC[p] * uC[q];
        pi.push_back(dr.dual.al.d.A.embed(*ti * target));
    }
    expect_all_pass(check_morphism_into_dual(m, dr, src, pi));
}

}  // namespace

TEST_CASE("the translation action on two points validates") {
    expect_all_pass(validate_smash(translation_fixture()));
}

TEST_CASE("breaking invariance of the measure is caught") {
    SmashSpec s = translation_fixture();
    s.muC = {GRat(Rat(1, 4)), GRat(Rat(3, 4))};
    CheckReport rep = validate_smash(s);
    CHECK(!rep.ok());
    CHECK(!rep.find("the base functional is action-invariant")->pass);
}

TEST_CASE("the crossed product of Z/2 acting on two points") {
    SmashSpec s = translation_fixture();
    auto cm = crossed_product(s);
    REQUIRE(cm.has_value());
    CHECK(cm->data.A.dim() == 8);

    Algebroid al = build_algebroid(cm->data);
    expect_all_pass(validate_bialgebroid(al));
    MeasuredAlgebroid m = measured_from(*cm);
    expect_all_pass(check_H1_H2(m.al));
    expect_all_pass(check_regular_identities(m.al));
    expect_all_pass(check_local_projectivity(m.al));

    // Generic solutions agree with the closed forms.
    CHECK(*m.al.epsC == cm->epsC_expected);
    CHECK(*m.al.epsB == cm->epsB_expected);
    CHECK(*m.al.S == cm->S_expected);

    // The measure is a trace here, so the modular automorphism of the
    // source weight is trivial.
    CHECK(*m.sigmaB == Mat::identity(2));
}

TEST_CASE("the Hopf algebra embeds as a morphism") {
    SmashSpec s = translation_fixture();
    auto cm = crossed_product(s);
    REQUIRE(cm.has_value());
    MeasuredAlgebroid m = measured_from(*cm);
    Algebroid src = algebroid_of_hopf(s.H);
    MorphismSpec sp;
    sp.src = &src;
    sp.dst = &m.al;
    for (std::size_t k = 0; k < 2; ++k)
        sp.pi.push_back(m.al.d.A.embed(cm->embH[k]));
    expect_all_pass(validate_morphism(sp));
    expect_all_pass(check_antipode_preserved(sp));
}

TEST_CASE("a map that crosses the bases fails base compatibility") {
    // Transposing the pair groupoid swaps source and target functions, an
    // algebra automorphism that sends B into C.
    GroupoidModel gm = groupoid_algebroid(pair_groupoid(2, {Rat(1), Rat(1)}));
    Algebroid al = build_algebroid(gm.data);
    REQUIRE(compute_counits(al));
    REQUIRE(compute_antipode(al));
    MorphismSpec sp;
    sp.src = &al;
    sp.dst = &al;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            sp.pi.push_back(al.d.A.embed(basis_vec(4, j * 2 + i)));
    CheckReport rep = validate_morphism(sp);
    CHECK(!rep.ok());
    CHECK(rep.find("the map is a homomorphism")->pass);
    CHECK(!rep.find("base images land in the target bases")->pass);
}

TEST_CASE("the dual is rank one operators tensor the dual Hopf algebra") {
    dual_oracle_check(translation_fixture());
}

TEST_CASE("a trivial Hopf algebra leaves the two-sided base") {
    SmashSpec s = trivial_hopf_fixture();
    expect_all_pass(validate_smash(s));
    auto cm = crossed_product(s);
    REQUIRE(cm.has_value());
    CHECK(cm->data.A.dim() == 4);
    dual_oracle_check(s);
}

TEST_CASE("trivial coefficients leave the Hopf algebra") {
    SmashSpec s = trivial_coefficients_fixture();
    expect_all_pass(validate_smash(s));
    auto cm = crossed_product(s);
    REQUIRE(cm.has_value());
    CHECK(cm->data.A.dim() == 2);
    dual_oracle_check(s);

    // With one-dimensional coefficients the dual algebroid is literally
    // the dual Hopf algebra in the shift basis.
    MeasuredAlgebroid m = measured_from(*cm);
    DualResult dr;
    REQUIRE(build_dual(m, &dr).ok());
    auto d = dual_hopf(s.H);
    REQUIRE(d.has_value());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(dr.dual.al.d.A.mul(basis_vec(2, i), basis_vec(2, j)) ==
                  d->H.mul(basis_vec(2, i), basis_vec(2, j)));
}

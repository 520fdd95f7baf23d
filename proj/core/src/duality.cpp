// Dual construction. The dual space carries the shifted functionals
// e_i . phi in a fixed basis; the two actions of a functional on A come
// from slicing comultiplication representatives through its partial maps;
// convolution routes one action through evaluation. The dual
// comultiplication tables are not written down by formula: they are
// solved, entry by entry, from the four evaluation pairings against
// closed-form right hand sides, with an extra consistency system for the
// left table whose representatives are the only ones the downstream
// battery is sensitive to. The assembled dual is then pushed through
// every generic validator the primal went through.

#include "mhad/duality.hpp"

#include <string>
#include <utility>

namespace mhad {

namespace {

std::string itos(std::size_t k) { return std::to_string(k); }

std::string pairw(std::size_t i, std::size_t j) {
    return "witness pair (" + itos(i) + "," + itos(j) + ")";
}

// Gram grid f(e_i e_j) of a functional against the multiplication.
Mat gram(const FiniteAlgebra& alg, const Functional& f) {
    std::size_t n = alg.dim();
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Mat& l = alg.lmul_basis(i);
        for (std::size_t j = 0; j < n; ++j) g.at(i, j) = dot(f, l.col(j));
    }
    return g;
}

Mat conj_mat(const Mat& m) {
    Mat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).conj();
    return r;
}

Vec vec_of(const Mat& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

// Columns are the vectorized left (right) multiplication operators, so
// vec(lmul(c)) = stack * c and membership of an operator in the span of
// multiplications is a linear condition.
Mat lmul_stack(const FiniteAlgebra& a) {
    std::size_t n = a.dim();
    Mat s(n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec v = vec_of(a.lmul_basis(k));
        for (std::size_t r = 0; r < n * n; ++r) s.at(r, k) = v[r];
    }
    return s;
}

Mat rmul_stack(const FiniteAlgebra& a) {
    std::size_t n = a.dim();
    Mat s(n * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec v = vec_of(a.rmul_basis(k));
        for (std::size_t r = 0; r < n * n; ++r) s.at(r, k) = v[r];
    }
    return s;
}

bool kills_relations(const Mat& slice, const QuotientSpace& q) {
    for (std::size_t r = 0; r < q.relations.dim(); ++r)
        if (!vec_is_zero(slice * q.relations.basis_vec(r))) return false;
    return true;
}

bool self_adjoint(const Functional& f, const Mat& star) {
    for (std::size_t j = 0; j < star.cols(); ++j)
        if (dot(f, star.col(j)) != f[j].conj()) return false;
    return true;
}

// Coordinates of sig . img[k] . siginv in the span of the embedded base.
std::optional<Mat> restrict_to_base(const Mat& sig, const Mat& siginv,
                                    const BaseEmbedding& e) {
    std::size_t n = sig.rows(), m = e.dim();
    Mat basis(2 * n * n, m);
    Mat target(2 * n * n, m);
    for (std::size_t k = 0; k < m; ++k) {
        Vec bl = vec_of(e.img[k].lam), br = vec_of(e.img[k].rho);
        Vec tl = vec_of(sig * e.img[k].lam * siginv);
        Vec tr = vec_of(sig * e.img[k].rho * siginv);
        for (std::size_t r = 0; r < n * n; ++r) {
            basis.at(r, k) = bl[r];
            basis.at(n * n + r, k) = br[r];
            target.at(r, k) = tl[r];
            target.at(n * n + r, k) = tr[r];
        }
    }
    return solve(basis, target);
}

// Coordinate matrices on the dual space of the four base shifts of a
// functional: for x in B and y in C,
//   x . omega : m -> omega(tB(x) m)     (XL)
//   omega . x : m -> omega(x m)         (XR)
//   y . omega : m -> omega(m y)         (YL)
//   omega . y : m -> omega(m tC(y))     (YR)
struct DualShifts {
    std::vector<Mat> XL, XR, YL, YR;
};

DualShifts base_shifts(const MeasuredAlgebroid& m, const DualSpace& ds) {
    const AlgebroidData& d = m.al.d;
    DualShifts s;
    for (std::size_t k = 0; k < d.B.dim(); ++k) {
        s.XL.push_back(ds.Ginv * d.C.lmul_on_A(d.tB.col(k)).transpose() * ds.G);
        s.XR.push_back(ds.Ginv * d.B.lmul_on_A(basis_vec(d.B.dim(), k)).transpose() * ds.G);
    }
    for (std::size_t k = 0; k < d.C.dim(); ++k) {
        s.YL.push_back(ds.Ginv * d.C.rmul_on_A(basis_vec(d.C.dim(), k)).transpose() * ds.G);
        s.YR.push_back(ds.Ginv * d.B.rmul_on_A(d.tC.col(k)).transpose() * ds.G);
    }
    return s;
}

}  // namespace

Mat DualActions::of_tri(const Vec& coords) const {
    std::size_t n = tri.empty() ? 0 : tri[0].rows();
    Mat r(n, n);
    for (std::size_t u = 0; u < coords.size(); ++u)
        if (!coords[u].is_zero()) r = r + tri[u].scaled(coords[u]);
    return r;
}

Mat DualActions::of_itri(const Vec& coords) const {
    std::size_t n = itri.empty() ? 0 : itri[0].rows();
    Mat r(n, n);
    for (std::size_t u = 0; u < coords.size(); ++u)
        if (!coords[u].is_zero()) r = r + itri[u].scaled(coords[u]);
    return r;
}

CheckReport dual_space(const MeasuredAlgebroid& m, DualSpace* out) {
    CheckReport rep;
    const Algebroid& al = m.al;
    const FiniteAlgebra& a = al.d.A;
    std::size_t n = al.n();

    Mat g = gram(a, m.phi);
    auto gi = inverse(g);
    rep.add("shifting integral faithful", gi.has_value());
    if (!gi) return rep;
    out->G = g;
    out->Ginv = *gi;

    Mat gpsi = gram(a, m.psi);
    out->viaPhiRight = out->Ginv * g.transpose();
    out->viaPsiLeft = out->Ginv * gpsi.transpose();
    out->viaPsiRight = out->Ginv * gpsi;
    rep.add("shift images of the integrals agree", rank(gpsi) == n,
            rank(gpsi) == n ? "" : "psi shifts span a proper subspace");

    if (m.sigmaPhi)
        rep.add("right phi shift base change is the modular automorphism",
                out->viaPhiRight == *m.sigmaPhi);
    if (m.delta) {
        rep.add("right psi shift base change is the modular element",
                out->viaPsiRight == m.delta->rho);
        if (m.sigmaPhi)
            rep.add("left psi shift base change factors through the modular element",
                    out->viaPsiLeft == m.delta->lam * *m.sigmaPhi);
    }

    bool fact = true;
    std::string fw;
    out->pm.clear();
    for (std::size_t u = 0; u < n; ++u) {
        out->pm.push_back(
            factorize(al.mods, al.d.B, al.d.C, m.muB, m.muC, g.col(u)));
        if (fact && !out->pm.back().fully_factorizable()) {
            fact = false;
            fw = "witness basis functional " + itos(u);
        }
    }
    rep.add("shifted basis functionals fully factorizable", fact, fw);
    return rep;
}

std::optional<ActPair> act(const Algebroid& al, const PartialMaps& pm, const Vec& a) {
    if (!pm.lB || !pm.rB || !pm.lC || !pm.rC) return std::nullopt;
    if (!al.tBinv || !al.tCinv) return std::nullopt;
    std::size_t n = al.n();
    Mat f1 = slice_second_ambient(al.mods.Cs_r, *pm.lC, n);
    Mat f2 = slice_second_ambient(al.mods.B_r, (*al.tBinv) * (*pm.rC), n);
    Mat f3 = slice_first_ambient(al.mods.C_l, (*al.tCinv) * (*pm.lB), n);
    Mat f4 = slice_first_ambient(al.mods.Bs_l, *pm.rB, n);
    ActPair ap{Multiplier{Mat(n, n), Mat(n, n)}, Multiplier{Mat(n, n), Mat(n, n)}};
    for (std::size_t b = 0; b < n; ++b) {
        Vec vcl(n * n), vbl(n * n), vcr(n * n), vbr(n * n);
        for (std::size_t j = 0; j < n; ++j) {
            if (a[j].is_zero()) continue;
            vcl = vec_add(vcl, vec_scaled(al.d.dcl_at(j, b), a[j]));
            vbl = vec_add(vbl, vec_scaled(al.d.dbl_at(j, b), a[j]));
            vcr = vec_add(vcr, vec_scaled(al.d.dcr_at(j, b), a[j]));
            vbr = vec_add(vbr, vec_scaled(al.d.dbr_at(j, b), a[j]));
        }
        Vec c1 = f1 * vcl, c2 = f2 * vbl, c3 = f3 * vcr, c4 = f4 * vbr;
        for (std::size_t r = 0; r < n; ++r) {
            ap.fwd.lam.at(r, b) = c1[r];
            ap.fwd.rho.at(r, b) = c2[r];
            ap.bwd.lam.at(r, b) = c3[r];
            ap.bwd.rho.at(r, b) = c4[r];
        }
    }
    return ap;
}

CheckReport build_actions(const MeasuredAlgebroid& m, const DualSpace& ds,
                          DualActions* out) {
    CheckReport rep;
    const Algebroid& al = m.al;
    const FiniteAlgebra& a = al.d.A;
    std::size_t n = al.n();
    Mat lst = lmul_stack(a), rst = rmul_stack(a);

    bool slices = true, mult = true, inside = true;
    std::string sw, mw, iw;
    out->tri.assign(n, Mat(n, n));
    out->itri.assign(n, Mat(n, n));
    for (std::size_t u = 0; u < n; ++u) {
        const PartialMaps& pm = ds.pm[u];
        Mat f1 = slice_second_ambient(al.mods.Cs_r, *pm.lC, n);
        Mat f2 = slice_second_ambient(al.mods.B_r, (*al.tBinv) * (*pm.rC), n);
        Mat f3 = slice_first_ambient(al.mods.C_l, (*al.tCinv) * (*pm.lB), n);
        Mat f4 = slice_first_ambient(al.mods.Bs_l, *pm.rB, n);
        if (slices && !(kills_relations(f1, al.Q1.q) && kills_relations(f2, al.Q2.q) &&
                        kills_relations(f3, al.Q1.q) && kills_relations(f4, al.Q2.q))) {
            slices = false;
            sw = "witness basis functional " + itos(u);
        }
        Mat vfl(n * n, n), vfr(n * n, n), vbl(n * n, n), vbr(n * n, n);
        for (std::size_t x = 0; x < n; ++x) {
            Multiplier fwd{Mat(n, n), Mat(n, n)}, bwd{Mat(n, n), Mat(n, n)};
            for (std::size_t b = 0; b < n; ++b) {
                Vec c1 = f1 * al.d.dcl_at(x, b);
                Vec c2 = f2 * al.d.dbl_at(x, b);
                Vec c3 = f3 * al.d.dcr_at(x, b);
                Vec c4 = f4 * al.d.dbr_at(x, b);
                for (std::size_t r = 0; r < n; ++r) {
                    fwd.lam.at(r, b) = c1[r];
                    fwd.rho.at(r, b) = c2[r];
                    bwd.lam.at(r, b) = c3[r];
                    bwd.rho.at(r, b) = c4[r];
                }
            }
            if (mult && !(is_multiplier(a, fwd) && is_multiplier(a, bwd))) {
                mult = false;
                mw = pairw(u, x);
            }
            Vec w1 = vec_of(fwd.lam), w2 = vec_of(fwd.rho);
            Vec w3 = vec_of(bwd.lam), w4 = vec_of(bwd.rho);
            for (std::size_t r = 0; r < n * n; ++r) {
                vfl.at(r, x) = w1[r];
                vfr.at(r, x) = w2[r];
                vbl.at(r, x) = w3[r];
                vbr.at(r, x) = w4[r];
            }
        }
        auto ef = solve_unique(lst, vfl);
        auto eb = solve_unique(lst, vbl);
        if (!ef || !eb || rst * *ef != vfr || rst * *eb != vbr) {
            if (inside) {
                inside = false;
                iw = "witness basis functional " + itos(u);
            }
            continue;
        }
        out->tri[u] = *ef;
        out->itri[u] = *eb;
    }
    rep.add("action slices well defined", slices, sw);
    rep.add("action outputs are multipliers", mult, mw);
    rep.add("actions land inside the algebra", inside, iw);
    return rep;
}

CheckReport act_identities(const MeasuredAlgebroid& m, const DualSpace& ds,
                           const DualActions& ac) {
    CheckReport rep;
    const Algebroid& al = m.al;
    const AlgebroidData& d = al.d;
    const FiniteAlgebra& a = d.A;
    std::size_t n = al.n();
    const Mat& g = ds.G;
    const Mat& s = *al.S;

    Functional epsrow = precompose(m.muC, *al.epsC);
    Vec ceps = ds.coords(epsrow);
    rep.add("counit acts as the identity",
            ac.of_tri(ceps) == Mat::identity(n) && ac.of_itri(ceps) == Mat::identity(n));

    bool ev = true;
    std::string evw;
    for (std::size_t u = 0; u < n && ev; ++u) {
        if (precompose(epsrow, ac.tri[u]) != g.col(u) ||
            precompose(epsrow, ac.itri[u]) != g.col(u)) {
            ev = false;
            evw = "witness basis functional " + itos(u);
        }
    }
    rep.add("counit reads off evaluation through the actions", ev, evw);

    bool comm = true;
    std::string cw;
    for (std::size_t u = 0; u < n && comm; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (ac.tri[u] * ac.itri[v] != ac.itri[v] * ac.tri[u]) {
                comm = false;
                cw = pairw(u, v);
                break;
            }
    rep.add("forward and backward actions commute", comm, cw);

    bool si1 = true, si2 = true;
    std::string s1w, s2w;
    for (std::size_t x = 0; x < n; ++x) {
        Mat lhs1 = ac.of_tri(ds.viaPhiRight.col(x));
        Mat lhs2 = ac.of_itri(ds.viaPsiRight.col(x));
        for (std::size_t b = 0; b < n; ++b) {
            if (si1 && lhs1.col(b) != s * ac.tri[b].col(x)) {
                si1 = false;
                s1w = pairw(x, b);
            }
            if (si2 && lhs2.col(b) != s * (ac.of_itri(ds.viaPsiLeft.col(b)).col(x))) {
                si2 = false;
                s2w = pairw(x, b);
            }
        }
    }
    rep.add("strong invariance of the forward action", si1, s1w);
    rep.add("strong invariance of the backward action", si2, s2w);

    Mat shat = ds.Ginv * s.transpose() * g;
    bool exch = true;
    std::string xw;
    for (std::size_t u = 0; u < n && exch; ++u) {
        if (ac.tri[u] * s != s * ac.of_itri(shat.col(u)) ||
            ac.itri[u] * s != s * ac.of_tri(shat.col(u))) {
            exch = false;
            xw = "witness basis functional " + itos(u);
        }
    }
    rep.add("actions exchange through the antipode", exch, xw);

    if (a.star()) {
        const Mat& st = *a.star();
        bool inv = true;
        std::string iw;
        for (std::size_t u = 0; u < n && inv; ++u) {
            // coordinates of the functional m -> conj(omega_u(m*))
            Vec cc = ds.Ginv * (conj_mat(st.transpose()) * conj_mat(g).col(u));
            Mat rhs = ac.of_tri(cc);
            for (std::size_t x = 0; x < n; ++x)
                if (a.apply_star(ac.tri[u].col(x)) != rhs * st.col(x)) {
                    inv = false;
                    iw = pairw(u, x);
                    break;
                }
        }
        rep.add("involution exchanges with the forward action", inv, iw);
    }

    DualShifts sh = base_shifts(m, ds);
    bool mf = true, mb = true, bf = true, bb = true;
    std::string mfw, mbw, bfw, bbw;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t k = 0; k < d.B.dim(); ++k) {
            Vec ek = basis_vec(d.B.dim(), k);
            if (mf && (ac.of_tri(sh.XL[k].col(u)) != d.B.lmul_on_A(ek) * ac.tri[u] ||
                       ac.of_tri(sh.XR[k].col(u)) != ac.tri[u] * d.B.lmul_on_A(ek))) {
                mf = false;
                mfw = pairw(u, k);
            }
            if (mb && (ac.of_itri(sh.XL[k].col(u)) != ac.itri[u] * d.C.lmul_on_A(d.tB.col(k)) ||
                       ac.of_itri(sh.XR[k].col(u)) != d.C.lmul_on_A(d.tB.col(k)) * ac.itri[u])) {
                mb = false;
                mbw = pairw(u, k);
            }
            if (bb && (ac.itri[u] * d.B.lmul_on_A(ek) != d.B.lmul_on_A(ek) * ac.itri[u] ||
                       ac.itri[u] * d.B.rmul_on_A(ek) != d.B.rmul_on_A(ek) * ac.itri[u])) {
                bb = false;
                bbw = pairw(u, k);
            }
        }
        for (std::size_t k = 0; k < d.C.dim(); ++k) {
            Vec ek = basis_vec(d.C.dim(), k);
            if (mf && (ac.of_tri(sh.YL[k].col(u)) != d.B.rmul_on_A(d.tC.col(k)) * ac.tri[u] ||
                       ac.of_tri(sh.YR[k].col(u)) != ac.tri[u] * d.B.rmul_on_A(d.tC.col(k)))) {
                mf = false;
                mfw = pairw(u, k);
            }
            if (mb && (ac.of_itri(sh.YL[k].col(u)) != ac.itri[u] * d.C.rmul_on_A(ek) ||
                       ac.of_itri(sh.YR[k].col(u)) != d.C.rmul_on_A(ek) * ac.itri[u])) {
                mb = false;
                mbw = pairw(u, k);
            }
            if (bf && (ac.tri[u] * d.C.lmul_on_A(ek) != d.C.lmul_on_A(ek) * ac.tri[u] ||
                       ac.tri[u] * d.C.rmul_on_A(ek) != d.C.rmul_on_A(ek) * ac.tri[u])) {
                bf = false;
                bfw = pairw(u, k);
            }
        }
    }
    rep.add("base shifts on functionals move through the forward action", mf, mfw);
    rep.add("base shifts on functionals move through the backward action", mb, mbw);
    rep.add("forward action is a base bimodule map", bf, bfw);
    rep.add("backward action is a base bimodule map", bb, bbw);
    return rep;
}

CheckReport build_dual(const MeasuredAlgebroid& m, DualResult* out) {
    CheckReport rep;
    const Algebroid& al = m.al;
    const AlgebroidData& d = al.d;
    const FiniteAlgebra& a = d.A;
    std::size_t n = al.n(), dB = d.B.dim(), dC = d.C.dim();

    rep.merge(dual_space(m, &out->space));
    if (!rep.ok()) return rep;
    rep.merge(build_actions(m, out->space, &out->actions));
    if (!rep.ok()) return rep;
    const DualSpace& ds = out->space;
    const DualActions& ac = out->actions;
    const Mat& g = ds.G;
    const Mat& gi = ds.Ginv;
    Mat gt = g.transpose();

    // Convolution: (omega_i omega_j)(b) = omega_i(omega_j |> b), with the
    // backward route and the antipode shortcut as cross-checks.
    std::vector<Mat> lhat(n, Mat(n, n));
    for (std::size_t j = 0; j < n; ++j) {
        Mat mj = gi * ac.tri[j].transpose() * g;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < n; ++r) lhat[i].at(r, j) = mj.at(r, i);
    }
    bool back = true, sc = true;
    std::string backw, scw;
    for (std::size_t i = 0; i < n; ++i) {
        Mat ni = gi * ac.itri[i].transpose() * g;
        Mat sci = (*al.S) * ac.tri[i] * (*al.Sinv);
        for (std::size_t j = 0; j < n; ++j) {
            if (back && lhat[i].col(j) != ni.col(j)) {
                back = false;
                backw = pairw(i, j);
            }
            if (sc && lhat[i].col(j) != sci.col(j)) {
                sc = false;
                scw = pairw(i, j);
            }
        }
    }
    rep.add("convolution agrees across both action routes", back, backw);
    rep.add("convolution matches the antipode shortcut", sc, scw);

    FiniteAlgebra ahat(lhat);
    if (auto u = ahat.find_unit()) ahat.set_unit(*u);
    if (a.star()) {
        const Mat& st = *a.star();
        Mat starhat = gi * al.S->transpose() * conj_mat(st.transpose()) * conj_mat(g);
        ahat.set_star(starhat);
        if (self_adjoint(m.phi, st)) {
            Functional phis = precompose(m.phi, *al.S);
            bool ok = true;
            std::string w;
            for (std::size_t x = 0; x < n && ok; ++x) {
                Vec rhs = gi * precompose(phis, a.rmul(a.apply_star(al.S->col(x))));
                if (starhat.col(x) != rhs) {
                    ok = false;
                    w = "witness basis functional " + itos(x);
                }
            }
            rep.add("involution on shifted functionals matches the integral twist", ok, w);
        }
    }

    DualShifts sh = base_shifts(m, ds);
    BaseEmbedding bhat, chat;
    bhat.alg = d.C.alg;
    for (std::size_t k = 0; k < dC; ++k)
        bhat.img.push_back(Multiplier{sh.YL[k], sh.YR[k]});
    chat.alg = d.B.alg;
    for (std::size_t k = 0; k < dB; ++k)
        chat.img.push_back(Multiplier{sh.XL[k], sh.XR[k]});

    // The four evaluation pairings, each in two closed forms.
    Mat ara(n * n, n * n), ara2(n * n, n * n);
    Mat aba(n * n, n * n), aba2(n * n, n * n);
    Mat ala(n * n, n * n), ala2(n * n, n * n);
    Mat aca(n * n, n * n), aca2(n * n, n * n);
    for (std::size_t q = 0; q < n; ++q) {
        Mat bsup = (*al.tBinv) * (*ds.pm[q].rC);
        for (std::size_t b = 0; b < n; ++b) {
            Mat m1 = gt * d.B.rmul_on_A(bsup.col(b));
            Mat m2 = gt * d.B.rmul_on_A(ds.pm[q].lB->col(b));
            Mat m3 = gt * d.B.lmul_on_A(d.tC * ds.pm[q].lC->col(b));
            Mat m4 = gt * d.C.rmul_on_A(ds.pm[q].lC->col(b));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t x = 0; x < n; ++x) {
                    ara.at(tidx(p, q, n), tidx(x, b, n)) = m1.at(p, x);
                    aba.at(tidx(p, q, n), tidx(x, b, n)) = m2.at(p, x);
                    ala.at(tidx(p, q, n), tidx(x, b, n)) = m3.at(p, x);
                    aca.at(tidx(p, q, n), tidx(x, b, n)) = m4.at(p, x);
                }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        Mat tbrb = d.tB * (*ds.pm[p].rB);
        Mat csup = (*al.tCinv) * (*ds.pm[p].lB);
        for (std::size_t x = 0; x < n; ++x) {
            Mat m1 = gt * d.C.rmul_on_A(tbrb.col(x));
            Mat m2 = gt * d.B.lmul_on_A(ds.pm[p].rB->col(x));
            Mat m3 = gt * d.C.lmul_on_A(csup.col(x));
            Mat m4 = gt * d.C.lmul_on_A(ds.pm[p].rC->col(x));
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t b = 0; b < n; ++b) {
                    ara2.at(tidx(p, q, n), tidx(x, b, n)) = m1.at(q, b);
                    aba2.at(tidx(p, q, n), tidx(x, b, n)) = m2.at(q, b);
                    ala2.at(tidx(p, q, n), tidx(x, b, n)) = m3.at(q, b);
                    aca2.at(tidx(p, q, n), tidx(x, b, n)) = m4.at(q, b);
                }
        }
    }
    std::string fw;
    bool forms = true;
    if (ara != ara2) { forms = false; fw = "second-leg forward grid"; }
    else if (aba != aba2) { forms = false; fw = "second-leg backward grid"; }
    else if (ala != ala2) { forms = false; fw = "first-leg twisted grid"; }
    else if (aca != aca2) { forms = false; fw = "first-leg plain grid"; }
    rep.add("evaluation pairing forms agree", forms, fw);
    out->ara = ara;
    out->aba = aba;
    out->ala = ala;
    out->aca = aca;

    // Right hand sides of the adjointness systems, rows (a,b), cols (u,v).
    Mat rhscr(n * n, n * n), rhscl(n * n, n * n), rhsbl(n * n, n * n), rhsbr(n * n, n * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t b = 0; b < n; ++b) {
            Vec wf = ac.tri[v].col(b), wb = ac.itri[v].col(b);
            for (std::size_t x = 0; x < n; ++x) {
                Vec z1 = gt * (a.lmul_basis(x) * wf);
                Vec z2 = gt * (a.rmul_basis(x) * wf);
                Vec z3 = gt * (a.rmul_basis(x) * wb);
                Vec z4 = gt * (a.lmul_basis(x) * wb);
                for (std::size_t u = 0; u < n; ++u) {
                    rhscr.at(tidx(x, b, n), tidx(u, v, n)) = z1[u];
                    rhscl.at(tidx(b, x, n), tidx(u, v, n)) = z2[u];
                    rhsbl.at(tidx(b, x, n), tidx(u, v, n)) = z3[u];
                    rhsbr.at(tidx(x, b, n), tidx(u, v, n)) = z4[u];
                }
            }
        }

    auto xcr = solve(aca.transpose(), rhscr);
    auto xbl = solve(aba.transpose(), rhsbl);
    auto xbr = solve(aba.transpose(), rhsbr);
    std::string solvew;
    if (!xcr) solvew = "forward right table";
    else if (!xbl) solvew = "backward left table";
    else if (!xbr) solvew = "backward right table";
    rep.add("dual comultiplication tables solve against the pairings",
            xcr.has_value() && xbl.has_value() && xbr.has_value(), solvew);
    if (!xcr || !xbl || !xbr) return rep;

    // The left table is pinned further: its representatives must be
    // consistent with the right table under second-leg multiplication,
    // the one condition downstream that sees representatives.
    ModuleStructures modshat =
        build_module_structures(bhat, chat, *al.tBinv, *al.tCinv);
    TensorQuotient q1hat = balanced_tensor(modshat.Cs_r, modshat.C_l);
    const Mat& p1 = q1hat.q.proj;
    Mat sys = aca.transpose();
    for (std::size_t c = 0; c < n; ++c)
        sys = sys.vstack(p1 * on_second_leg(ahat.rmul_basis(c), n));
    std::size_t q1d = q1hat.q.dim();
    Mat rhs(n * n + n * q1d, n * n);
    for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t cidx = 0; cidx < n * n; ++cidx)
            rhs.at(r, cidx) = rhscl.at(r, cidx);
    for (std::size_t v = 0; v < n; ++v) {
        Mat pr = p1 * on_first_leg(ahat.rmul_basis(v), n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t c = 0; c < n; ++c) {
                Vec seg = pr * xcr->col(tidx(u, c, n));
                for (std::size_t r = 0; r < q1d; ++r)
                    rhs.at(n * n + c * q1d + r, tidx(u, v, n)) = seg[r];
            }
    }
    auto xcl = solve(sys, rhs);
    rep.add("dual left comultiplication admits consistent representatives",
            xcl.has_value());
    if (!xcl) return rep;

    // Cross-check: pairing the sources against the primal canonical maps
    // reproduces every right hand side.
    {
        bool src = true;
        std::string sw;
        for (std::size_t u = 0; u < n && src; ++u)
            for (std::size_t v = 0; v < n && src; ++v)
                for (std::size_t x = 0; x < n && src; ++x)
                    for (std::size_t b = 0; b < n; ++b) {
                        if (rhscr.at(tidx(x, b, n), tidx(u, v, n)) !=
                            dot(ara.row(tidx(u, v, n)), d.dbl_at(b, x))) {
                            src = false;
                            sw = "forward right table at " + pairw(u, v);
                            break;
                        }
                        if (rhscl.at(tidx(x, b, n), tidx(u, v, n)) !=
                            dot(ala.row(tidx(u, v, n)), d.dcl_at(x, b))) {
                            src = false;
                            sw = "forward left table at " + pairw(u, v);
                            break;
                        }
                        if (rhsbl.at(tidx(x, b, n), tidx(u, v, n)) !=
                            dot(ala.row(tidx(v, u, n)), d.dcr_at(x, b))) {
                            src = false;
                            sw = "backward left table at " + pairw(u, v);
                            break;
                        }
                        if (rhsbr.at(tidx(x, b, n), tidx(u, v, n)) !=
                            dot(ara.row(tidx(v, u, n)), d.dbr_at(b, x))) {
                            src = false;
                            sw = "backward right table at " + pairw(u, v);
                            break;
                        }
                    }
        rep.add("source pairings against the primal maps reproduce the tables",
                src, sw);
    }

    AlgebroidData dd;
    dd.A = ahat;
    dd.B = bhat;
    dd.C = chat;
    dd.tB = *al.tBinv;
    dd.tC = *al.tCinv;
    dd.muB = m.muC;
    dd.muC = m.muB;
    dd.dcr.assign(n * n, Vec(n * n));
    dd.dcl.assign(n * n, Vec(n * n));
    dd.dbl.assign(n * n, Vec(n * n));
    dd.dbr.assign(n * n, Vec(n * n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            dd.dcr[tidx(u, v, n)] = xcr->col(tidx(u, v, n));
            dd.dcl[tidx(u, v, n)] = xcl->col(tidx(u, v, n));
            dd.dbl[tidx(u, v, n)] = xbl->col(tidx(u, v, n));
            dd.dbr[tidx(u, v, n)] = xbr->col(tidx(u, v, n));
        }

    Algebroid dal = build_algebroid(dd);
    rep.merge(validate_bialgebroid(dal));
    CheckReport crep;
    bool cu = compute_counits(dal, &crep);
    rep.add("dual counits solved", cu);
    bool an = cu && compute_antipode(dal, &crep);
    rep.add("dual antipode solved", an);
    if (!cu || !an) return rep;
    rep.merge(check_H1_H2(dal));
    rep.merge(check_regular_identities(dal));
    if (ahat.star()) rep.merge(check_star(dal));
    rep.merge(check_local_projectivity(dal));

    auto mpsiInv = inverse(ds.viaPsiLeft);
    rep.add("left psi shift invertible", mpsiInv.has_value());
    if (!mpsiInv) return rep;
    Mat phichat = (*al.epsB) * (*mpsiInv);
    Mat psibhat = *al.epsC;
    out->dual = make_measured(std::move(dal), m.muC, m.muB, phichat, psibhat);
    rep.merge(validate_measured(out->dual));
    rep.merge(modular_automorphisms(out->dual));
    rep.merge(modular_element(out->dual));
    if (ahat.star()) rep.merge(check_positivity(out->dual));

    // Each pairing must vanish on the relations of one dual and one primal
    // tensor square, and be nonsingular across that pair of quotients.
    {
        const Algebroid& da = out->dual.al;
        struct PairSpec {
            const char* name;
            const Mat* p;
            const TensorQuotient* dq;
            const TensorQuotient* pq;
        } specs[] = {
            {"first-leg twisted grid", &ala, &da.Q5, &al.Q1},
            {"first-leg plain grid", &aca, &da.Q1, &al.Q5},
            {"second-leg forward grid", &ara, &da.Q4, &al.Q2},
            {"second-leg backward grid", &aba, &da.Q2, &al.Q4},
        };
        bool desc = true, nondeg = true;
        std::string dw, nw;
        for (const auto& spec : specs) {
            bool okd = true;
            Mat pt = spec.p->transpose();
            for (std::size_t r = 0; r < spec.dq->q.relations.dim() && okd; ++r)
                if (!vec_is_zero(pt * spec.dq->q.relations.basis_vec(r))) okd = false;
            for (std::size_t r = 0; r < spec.pq->q.relations.dim() && okd; ++r)
                if (!vec_is_zero(*spec.p * spec.pq->q.relations.basis_vec(r))) okd = false;
            if (desc && !okd) {
                desc = false;
                dw = spec.name;
            }
            std::size_t dim = spec.dq->q.dim();
            if (nondeg && (dim != spec.pq->q.dim() || rank(*spec.p) != dim)) {
                nondeg = false;
                nw = spec.name;
            }
        }
        rep.add("pairings descend to the matched tensor squares", desc, dw);
        rep.add("pairings nonsingular across the matched tensor squares", nondeg, nw);
    }
    return rep;
}

CheckReport dual_structure_identities(const MeasuredAlgebroid& m,
                                      const DualResult& dr) {
    CheckReport rep;
    const Algebroid& al = m.al;
    const AlgebroidData& d = al.d;
    const FiniteAlgebra& a = d.A;
    const MeasuredAlgebroid& du = dr.dual;
    const Algebroid& dal = du.al;
    const FiniteAlgebra& ahat = dal.d.A;
    const DualSpace& ds = dr.space;
    std::size_t n = al.n();
    const Mat& g = ds.G;
    const Mat& gi = ds.Ginv;

    bool have = m.sigmaPhi && m.sigmaPsi && m.sigmaB && m.sigmaC && du.sigmaPhi &&
                du.sigmaPsi && du.cpsi && du.psic && al.S && al.Sinv && dal.S;
    rep.add("modular data available on both sides", have);
    if (!have) return rep;
    const Mat& s = *al.S;
    const Mat& si = *al.Sinv;

    auto mpsiInv = inverse(ds.viaPsiLeft);
    rep.add("dual left counit is the twisted partial left integral",
            *dal.epsC == d.tC * m.phiC);
    rep.add("dual right counit is the twisted partial right integral",
            mpsiInv && *dal.epsB == d.tB * m.psiB * *mpsiInv);
    rep.add("dual counits evaluate at the identity",
            precompose(m.muB, *dal.epsC) == m.phi &&
                precompose(m.muC, *dal.epsB) == m.phi);
    rep.add("dual antipode is precomposition with the antipode",
            *dal.S == gi * s.transpose() * g);

    {
        bool ok = true;
        std::string w;
        Mat shifted = ds.viaPsiLeft * s;  // coordinates of psi . S(e_x)
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t v = 0; v < n; ++v)
                if (dot(du.phi, ahat.mul(shifted.col(x), basis_vec(n, v))) !=
                    g.at(x, v)) {
                    ok = false;
                    w = pairw(x, v);
                    break;
                }
        rep.add("dual left integral inverts the psi shift", ok, w);
    }
    {
        Mat si2 = si * si;
        Functional psis = precompose(m.psi, s);
        bool ok = true;
        std::string w;
        for (std::size_t x = 0; x < n && ok; ++x) {
            Vec lhs = *du.sigmaPhi * (ds.viaPsiLeft.col(x));
            Vec rhs = gi * precompose(psis, a.lmul(si2.col(x)));
            if (lhs != rhs) {
                ok = false;
                w = "witness basis element " + itos(x);
            }
        }
        rep.add("modular automorphism of the dual left integral in closed form", ok, w);
    }
    {
        auto spi = inverse(*m.sigmaPsi);
        auto dpi = inverse(*du.sigmaPhi);
        bool ok = spi && dpi;
        std::string w;
        if (ok) {
            auto r = restrict_to_base(*spi, *m.sigmaPsi, d.C);
            ok = r.has_value();
            const BaseEmbedding& e = dal.d.B;
            for (std::size_t k = 0; ok && k < e.dim(); ++k) {
                if (*du.sigmaPhi * e.img[k].lam * *dpi != e.lmul_on_A(r->col(k)) ||
                    *du.sigmaPhi * e.img[k].rho * *dpi != e.rmul_on_A(r->col(k))) {
                    ok = false;
                    w = "witness base element " + itos(k);
                }
            }
        }
        rep.add("dual left modular automorphism restricts to the inverse base automorphism",
                ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t v = 0; v < n && ok; ++v)
            for (std::size_t b = 0; b < n; ++b)
                if (dot(du.psi, ahat.mul(basis_vec(n, v), basis_vec(n, b))) !=
                    dot(g.col(v), si.col(b))) {
                    ok = false;
                    w = pairw(v, b);
                    break;
                }
        rep.add("dual right integral inverts the phi shift", ok, w);
    }
    {
        auto dspi = inverse(*du.sigmaPsi);
        Mat si2 = si * si;
        Functional phis = precompose(m.phi, s);
        bool ok = dspi.has_value();
        std::string w;
        for (std::size_t x = 0; x < n && ok; ++x) {
            Vec lhs = dspi->col(x);
            Vec rhs = gi * precompose(phis, a.rmul(si2.col(x)));
            if (lhs != rhs) {
                ok = false;
                w = "witness basis element " + itos(x);
            }
        }
        rep.add("inverse modular automorphism of the dual right integral in closed form",
                ok, w);
    }
    {
        auto spi = inverse(*m.sigmaPhi);
        auto dpi = inverse(*du.sigmaPsi);
        bool ok = spi && dpi;
        std::string w;
        std::optional<Mat> r2;
        if (ok) {
            r2 = restrict_to_base(*spi, *m.sigmaPhi, d.B);
            ok = r2.has_value();
            const BaseEmbedding& e = dal.d.C;
            for (std::size_t k = 0; ok && k < e.dim(); ++k) {
                if (*du.sigmaPsi * e.img[k].lam * *dpi != e.lmul_on_A(r2->col(k)) ||
                    *du.sigmaPsi * e.img[k].rho * *dpi != e.rmul_on_A(r2->col(k))) {
                    ok = false;
                    w = "witness base element " + itos(k);
                }
            }
        }
        rep.add("dual right modular automorphism restricts to the inverse base automorphism",
                ok, w);
        bool ps = ok && *du.cpsi == d.tC * (*al.epsC) && *du.psic == *r2 * (*al.epsB);
        rep.add("one-sided partials of the dual right integral in closed form", ps);
    }

    if (a.star() && ahat.star()) {
        const Mat& sthat = *ahat.star();
        bool ok = true;
        std::string w;
        for (std::size_t x = 0; x < n && ok; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Vec lv = ahat.mul(sthat.col(x), basis_vec(n, y));
                if (dot(du.psi, lv) !=
                    dot(m.phi, a.mul(a.apply_star(basis_vec(n, x)), basis_vec(n, y)))) {
                    ok = false;
                    w = pairw(x, y);
                    break;
                }
                Vec pa = ds.viaPsiLeft.col(x);
                Vec pb = ahat.apply_star(ds.viaPsiLeft.col(y));
                if (dot(du.phi, ahat.mul(pa, pb)) !=
                    dot(m.psi, a.mul(basis_vec(n, x), a.apply_star(basis_vec(n, y))))) {
                    ok = false;
                    w = pairw(x, y);
                    break;
                }
            }
        rep.add("dual integrals return the primal grids on shifted functionals", ok, w);
    }

    {
        auto sbi = inverse(*m.sigmaB);
        bool ok = sbi.has_value();
        std::string w;
        for (std::size_t x = 0; x < n && ok; ++x) {
            PartialMaps pd = factorize(dal.mods, dal.d.B, dal.d.C, m.muC, m.muB,
                                       g.row(x));
            if (!pd.lB || !pd.rB || !pd.lC || !pd.rC) {
                ok = false;
                w = "evaluation functional " + itos(x) + " not factorizable";
                break;
            }
            if (*pd.lC != d.tC * m.phiC * a.lmul_basis(x) ||
                *pd.rC * ds.viaPsiRight != *sbi * m.psiB * a.lmul_basis(x) ||
                *pd.lB * ds.viaPhiRight != *m.sigmaC * m.phiC * a.rmul_basis(x) ||
                *pd.rB * ds.viaPsiLeft != d.tB * m.psiB * a.rmul_basis(x)) {
                ok = false;
                w = "witness basis element " + itos(x);
            }
        }
        rep.add("partial maps of evaluation functionals in closed form", ok, w);
    }
    {
        auto sbi = inverse(*m.sigmaB);
        bool ok = sbi.has_value();
        std::string w;
        for (std::size_t p = 0; p < n && ok; ++p) {
            Mat v1 = *sbi * (*ds.pm[p].lB);
            for (std::size_t x = 0; x < n && ok; ++x)
                for (std::size_t q = 0; q < n && ok; ++q) {
                    Mat v2 = d.tC * (*ds.pm[q].lC);
                    for (std::size_t b = 0; b < n; ++b)
                        if (dr.ala.at(tidx(p, q, n), tidx(x, b, n)) !=
                            dot(m.muB, d.B.alg.mul(v1.col(x), v2.col(b)))) {
                            ok = false;
                            w = pairw(p, q);
                            break;
                        }
                }
        }
        rep.add("first pairing reads as a tensor of evaluation functionals", ok, w);
    }
    return rep;
}

CheckReport dual_multiplier_space(const MeasuredAlgebroid& m, const DualResult& dr,
                                  Subspace* out) {
    CheckReport rep;
    const Algebroid& al = m.al;
    const AlgebroidData& d = al.d;
    const FiniteAlgebra& a = d.A;
    const FiniteAlgebra& ahat = dr.dual.al.d.A;
    const DualSpace& ds = dr.space;
    std::size_t n = al.n();
    const Mat& g = ds.G;
    const Mat& gi = ds.Ginv;

    auto regs = [](const FiniteAlgebra& alg, bool left) {
        std::vector<Mat> r;
        for (std::size_t k = 0; k < alg.dim(); ++k)
            r.push_back(left ? alg.lmul_basis(k) : alg.rmul_basis(k));
        return r;
    };
    Subspace sq =
        factorizable_space(al.mods.B_l, regs(d.B.alg, true), m.muB, al.mods.B_r,
                           regs(d.B.alg, false), m.muB)
            .intersect(factorizable_space(al.mods.C_l, regs(d.C.alg, true), m.muC,
                                          al.mods.C_r, regs(d.C.alg, false), m.muC))
            .intersect(factorizable_space(al.mods.Bs_l, regs(d.B.alg, true), m.muB,
                                          al.mods.Bs_r, regs(d.B.alg, false), m.muB))
            .intersect(factorizable_space(al.mods.Cs_l, regs(d.C.alg, true), m.muC,
                                          al.mods.Cs_r, regs(d.C.alg, false), m.muC));

    // Membership: both action multipliers of every element must be honest
    // multiplications, a linear condition through the left annihilator of
    // the multiplication stack.
    Mat lst = lmul_stack(a), rst = rmul_stack(a);
    std::vector<Vec> ann = nullspace(lst.transpose());
    std::vector<std::vector<Vec>> vf(sq.dim()), vb(sq.dim());
    for (std::size_t k = 0; k < sq.dim(); ++k) {
        PartialMaps pm = factorize(al.mods, d.B, d.C, m.muB, m.muC, sq.basis_vec(k));
        for (std::size_t x = 0; x < n; ++x) {
            auto ap = act(al, pm, basis_vec(n, x));
            vf[k].push_back(vec_of(ap->fwd.lam));
            vb[k].push_back(vec_of(ap->bwd.lam));
        }
    }
    std::vector<Vec> rows;
    for (const Vec& z : ann)
        for (std::size_t x = 0; x < n; ++x) {
            Vec r1(sq.dim()), r2(sq.dim());
            for (std::size_t k = 0; k < sq.dim(); ++k) {
                r1[k] = dot(z, vf[k][x]);
                r2[k] = dot(z, vb[k][x]);
            }
            rows.push_back(std::move(r1));
            rows.push_back(std::move(r2));
        }
    std::vector<Vec> coeffs = rows.empty()
                                  ? std::vector<Vec>{}
                                  : nullspace(Mat::from_rows(rows));
    if (rows.empty())
        for (std::size_t k = 0; k < sq.dim(); ++k) coeffs.push_back(basis_vec(sq.dim(), k));
    std::vector<Vec> gens;
    for (const Vec& c : coeffs) {
        Vec row(n);
        for (std::size_t k = 0; k < sq.dim(); ++k)
            row = vec_add(row, vec_scaled(sq.basis_vec(k), c[k]));
        gens.push_back(std::move(row));
    }
    Subspace a0 = Subspace::span(n, gens);
    if (out) *out = a0;

    Functional epsrow = precompose(m.muC, *al.epsC);
    rep.add("counit acts inside the algebra", a0.contains(epsrow));
    if (a.unit())
        rep.add("unital case: all fully factorizable functionals act inside",
                a0.dim() == sq.dim());

    // Element matrices of both actions for the chosen basis of the space.
    std::size_t dim = a0.dim();
    std::vector<Mat> ef(dim), eb(dim);
    bool extract = true;
    for (std::size_t k = 0; k < dim && extract; ++k) {
        PartialMaps pm = factorize(al.mods, d.B, d.C, m.muB, m.muC, a0.basis_vec(k));
        Mat mf(n * n, n), mb(n * n, n);
        for (std::size_t x = 0; x < n; ++x) {
            auto ap = act(al, pm, basis_vec(n, x));
            Vec w1 = vec_of(ap->fwd.lam), w2 = vec_of(ap->bwd.lam);
            for (std::size_t r = 0; r < n * n; ++r) {
                mf.at(r, x) = w1[r];
                mb.at(r, x) = w2[r];
            }
        }
        auto s1 = solve_unique(lst, mf);
        auto s2 = solve_unique(lst, mb);
        extract = s1.has_value() && s2.has_value();
        if (extract) {
            ef[k] = *s1;
            eb[k] = *s2;
        }
    }
    rep.add("double-action elements extractable", extract);
    if (!extract) return rep;

    MultiplierAlgebra ma = multiplier_algebra(ahat);
    bool ismul = true, routes = true;
    std::string mw, rw;
    std::vector<Multiplier> img;
    Mat coordgrid(2 * n * n, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Vec frow = a0.basis_vec(k);
        Mat rhohat = gi * ef[k].transpose() * g;
        Mat lamhat = gi * eb[k].transpose() * g;
        Mat lamalt(n, n), rhoalt(n, n);
        for (std::size_t v = 0; v < n; ++v) {
            Vec cl = gi * (dr.actions.tri[v].transpose() * frow);
            Vec cr = gi * (dr.actions.itri[v].transpose() * frow);
            for (std::size_t r = 0; r < n; ++r) {
                lamalt.at(r, v) = cl[r];
                rhoalt.at(r, v) = cr[r];
            }
        }
        if (routes && (lamhat != lamalt || rhohat != rhoalt)) {
            routes = false;
            rw = "witness basis functional " + itos(k);
        }
        Multiplier mm{lamhat, rhohat};
        if (ismul && !is_multiplier(ahat, mm)) {
            ismul = false;
            mw = "witness basis functional " + itos(k);
        }
        Vec v1 = vec_of(lamhat), v2 = vec_of(rhohat);
        for (std::size_t r = 0; r < n * n; ++r) {
            coordgrid.at(r, k) = v1[r];
            coordgrid.at(n * n + r, k) = v2[r];
        }
        img.push_back(std::move(mm));
    }
    rep.add("multiplier images agree across the two action routes", routes, rw);
    rep.add("double-action images are multipliers of the dual", ismul, mw);
    rep.add("double-action space is the multiplier algebra of the dual",
            dim == ma.algebra.dim() && rank(coordgrid) == dim);

    bool conv = true, unit = true;
    std::string cw;
    for (std::size_t k = 0; k < dim && conv; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
            Vec prow = ef[l].transpose() * a0.basis_vec(k);
            auto gamma = a0.coordinates(prow);
            if (!gamma) {
                conv = false;
                cw = pairw(k, l);
                break;
            }
            Multiplier expect = img[k] * img[l];
            Multiplier got{Mat(n, n), Mat(n, n)};
            for (std::size_t j = 0; j < dim; ++j)
                if (!(*gamma)[j].is_zero()) got = got + img[j].scaled((*gamma)[j]);
            if (got != expect) {
                conv = false;
                cw = pairw(k, l);
                break;
            }
        }
    rep.add("convolution matches multiplier composition", conv, cw);

    auto geps = a0.coordinates(epsrow);
    if (geps) {
        Multiplier id{Mat(n, n), Mat(n, n)};
        for (std::size_t j = 0; j < dim; ++j)
            if (!(*geps)[j].is_zero()) id = id + img[j].scaled((*geps)[j]);
        unit = id == Multiplier::identity(n);
    } else {
        unit = false;
    }
    rep.add("counit is the convolution unit", unit);
    return rep;
}

CheckReport biduality(const MeasuredAlgebroid& m, const DualResult& dr) {
    CheckReport rep;
    const Algebroid& al = m.al;
    const FiniteAlgebra& a = al.d.A;
    std::size_t n = al.n();
    const Mat& g = dr.space.G;

    DualResult ddr;
    CheckReport inner = build_dual(dr.dual, &ddr);
    std::string iw;
    if (!inner.ok())
        for (const Check& c : inner.checks)
            if (!c.pass) { iw = c.name; break; }
    rep.add("double dual passes its own battery", inner.ok(), iw);
    if (!inner.ok()) return rep;

    const Algebroid& dal2 = ddr.dual.al;
    const FiniteAlgebra& ahh = dal2.d.A;
    Mat j = ddr.space.Ginv * g.transpose();
    auto ji = inverse(j);
    rep.add("evaluation map bijective", ji.has_value());
    if (!ji) return rep;

    bool hom = true;
    std::string hw;
    for (std::size_t x = 0; x < n && hom; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (ahh.mul(j.col(x), j.col(y)) != j * a.lmul_basis(x).col(y)) {
                hom = false;
                hw = pairw(x, y);
                break;
            }
    rep.add("evaluation map multiplicative", hom, hw);

    if (a.star() && ahh.star()) {
        bool st = true;
        std::string sw;
        for (std::size_t x = 0; x < n && st; ++x)
            if (ahh.apply_star(j.col(x)) != j * a.apply_star(basis_vec(n, x))) {
                st = false;
                sw = "witness basis element " + itos(x);
            }
        rep.add("evaluation map preserves the involution", st, sw);
    }

    {
        bool emb = true;
        std::string ew;
        for (std::size_t k = 0; k < al.d.B.dim() && emb; ++k)
            if (dal2.d.B.img[k].lam != j * al.d.B.img[k].lam * *ji ||
                dal2.d.B.img[k].rho != j * al.d.B.img[k].rho * *ji) {
                emb = false;
                ew = "B-side element " + itos(k);
            }
        for (std::size_t k = 0; k < al.d.C.dim() && emb; ++k)
            if (dal2.d.C.img[k].lam != j * al.d.C.img[k].lam * *ji ||
                dal2.d.C.img[k].rho != j * al.d.C.img[k].rho * *ji) {
                emb = false;
                ew = "C-side element " + itos(k);
            }
        rep.add("evaluation map intertwines the base embeddings", emb, ew);
    }
    {
        Mat jj = j.kron(j);
        auto j1 = descend(al.Q1.q, dal2.Q1.q, jj);
        auto j2 = descend(al.Q2.q, dal2.Q2.q, jj);
        auto j3 = descend(al.Q3.q, dal2.Q3.q, jj);
        auto j4 = descend(al.Q4.q, dal2.Q4.q, jj);
        auto j5 = descend(al.Q5.q, dal2.Q5.q, jj);
        auto j6 = descend(al.Q6.q, dal2.Q6.q, jj);
        bool can = j1 && j2 && j3 && j4 && j5 && j6 &&
                   *dal2.Tr * *j4 == *j1 * *al.Tr && *dal2.Tl * *j3 == *j1 * *al.Tl &&
                   *dal2.lT * *j5 == *j2 * *al.lT && *dal2.rT * *j6 == *j2 * *al.rT;
        rep.add("evaluation map intertwines the canonical maps", can);
    }
    rep.add("evaluation map intertwines counits and antipode",
            *dal2.epsC * j == *al.epsC && *dal2.epsB * j == *al.epsB &&
                *dal2.S * j == j * *al.S);
    {
        bool ints = ddr.dual.phiC * j == m.phiC && ddr.dual.psiB * j == m.psiB;
        for (std::size_t x = 0; x < n && ints; ++x)
            ints = dot(ddr.dual.phi, j.col(x)) == m.phi[x] &&
                   dot(ddr.dual.psi, j.col(x)) == m.psi[x];
        rep.add("evaluation map carries the integrals back", ints);
    }
    {
        const FiniteAlgebra& ahat = dr.dual.al.d.A;
        bool fa = true, ba = true;
        std::string fw2, bw2;
        for (std::size_t u = 0; u < n && (fa || ba); ++u)
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t v = 0; v < n; ++v) {
                    if (fa && (g * ahat.mul(basis_vec(n, v), basis_vec(n, u)))[x] !=
                                  dot(g.col(v), dr.actions.tri[u].col(x))) {
                        fa = false;
                        fw2 = pairw(u, x);
                    }
                    if (ba && (g * ahat.mul(basis_vec(n, u), basis_vec(n, v)))[x] !=
                                  dot(g.col(v), dr.actions.itri[u].col(x))) {
                        ba = false;
                        bw2 = pairw(u, x);
                    }
                }
            }
        rep.add("products against evaluation functionals realize the forward action",
                fa, fw2);
        rep.add("products against evaluation functionals realize the backward action",
                ba, bw2);
    }
    {
        bool sh = true;
        std::string sw;
        for (std::size_t x = 0; x < n && sh; ++x)
            if (ddr.actions.of_itri(j.col(x)) !=
                dr.space.Ginv * a.lmul_basis(x).transpose() * g) {
                sh = false;
                sw = "witness basis element " + itos(x);
            }
        rep.add("backward action of evaluation functionals is the shift", sh, sw);
    }
    return rep;
}

CheckReport cointegrals(const MeasuredAlgebroid& m, const DualResult* dr,
                        CointegralResult* out) {
    CheckReport rep;
    const Algebroid& al = m.al;
    const AlgebroidData& d = al.d;
    const FiniteAlgebra& a = d.A;
    std::size_t n = al.n(), dB = d.B.dim(), dC = d.C.dim();
    CointegralResult local;
    CointegralResult& cr = out ? *out : local;

    // a l = (left counit value of a) l, and the mirror image.
    {
        Mat sysl(0, n), sysr(0, n);
        for (std::size_t x = 0; x < n; ++x) {
            sysl = sysl.rows() == 0
                       ? a.lmul_basis(x) - d.C.lmul_on_A(al.epsC->col(x))
                       : sysl.vstack(a.lmul_basis(x) - d.C.lmul_on_A(al.epsC->col(x)));
            sysr = sysr.rows() == 0
                       ? a.rmul_basis(x) - d.B.rmul_on_A(al.epsB->col(x))
                       : sysr.vstack(a.rmul_basis(x) - d.B.rmul_on_A(al.epsB->col(x)));
        }
        cr.left = Subspace::span(n, nullspace(sysl));
        cr.right = Subspace::span(n, nullspace(sysr));
    }
    rep.add("cointegral spaces solved", true,
            "left dimension " + itos(cr.left.dim()) + ", right dimension " +
                itos(cr.right.dim()));

    auto unitB = d.B.alg.unit() ? d.B.alg.unit() : d.B.alg.find_unit();
    auto unitC = d.C.alg.unit() ? d.C.alg.unit() : d.C.alg.find_unit();
    rep.add("base algebras unital", unitB.has_value() && unitC.has_value());
    if (!unitB || !unitC) return rep;
    {
        Mat lmat(n, cr.left.dim()), rmat(n, cr.right.dim());
        for (std::size_t k = 0; k < cr.left.dim(); ++k) {
            Vec v = cr.left.basis_vec(k);
            for (std::size_t r = 0; r < n; ++r) lmat.at(r, k) = v[r];
        }
        for (std::size_t k = 0; k < cr.right.dim(); ++k) {
            Vec v = cr.right.basis_vec(k);
            for (std::size_t r = 0; r < n; ++r) rmat.at(r, k) = v[r];
        }
        if (auto c = solve(m.phiC * lmat, *unitC)) cr.normalizedLeft = lmat * *c;
        if (auto c = solve(m.psiB * rmat, *unitB)) cr.normalizedRight = rmat * *c;
    }

    if (cr.normalizedLeft && cr.normalizedRight) {
        Functional epsrow = precompose(m.muC, *al.epsC);
        rep.add("normalized cointegrals shift the integrals to the counit",
                precompose(m.phi, a.rmul(*cr.normalizedLeft)) == epsrow &&
                    precompose(m.psi, a.lmul(*cr.normalizedRight)) == epsrow);
    }

    if (!dr) return rep;
    const MeasuredAlgebroid& du = dr->dual;
    const Algebroid& dal = du.al;
    const FiniteAlgebra& ahat = dal.d.A;
    const Mat& g = dr->space.G;

    auto dunit = ahat.unit() ? ahat.unit() : ahat.find_unit();
    rep.add("left cointegral normalization matches dual unitality",
            cr.normalizedLeft.has_value() == dunit.has_value());
    rep.add("right cointegral normalization matches dual unitality",
            cr.normalizedRight.has_value() == dunit.has_value());
    if (dunit) {
        Functional epsrow = precompose(m.muC, *al.epsC);
        rep.add("counit coordinates give the dual unit",
                *dunit == dr->space.coords(epsrow));
    }
    if (cr.normalizedLeft && cr.normalizedRight) {
        Mat orbl(n, n), orbr(n, n);
        for (std::size_t u = 0; u < n; ++u) {
            Vec c1 = dr->actions.tri[u] * *cr.normalizedLeft;
            Vec c2 = dr->actions.itri[u] * *cr.normalizedRight;
            for (std::size_t r = 0; r < n; ++r) {
                orbl.at(r, u) = c1[r];
                orbr.at(r, u) = c2[r];
            }
        }
        rep.add("dual orbits of the normalized cointegrals span the algebra",
                rank(orbl) == n && rank(orbr) == n);
    }

    // Cointegrals of the dual vs partial-integral functionals on A.
    {
        Mat sysl(0, n), sysr(0, n);
        for (std::size_t u = 0; u < n; ++u) {
            Mat bl = ahat.lmul_basis(u) - dal.d.C.lmul_on_A(dal.epsC->col(u));
            Mat br = ahat.rmul_basis(u) - dal.d.B.rmul_on_A(dal.epsB->col(u));
            sysl = sysl.rows() == 0 ? bl : sysl.vstack(bl);
            sysr = sysr.rows() == 0 ? br : sysr.vstack(br);
        }
        std::vector<Vec> dlc = nullspace(sysl), drc = nullspace(sysr);
        bool facl = true, facr = true;
        std::string flw, frw;
        std::vector<Vec> lrows, rrows;
        for (std::size_t k = 0; k < dlc.size(); ++k) {
            Vec row = g * dlc[k];
            lrows.push_back(row);
            PartialMaps pm = factorize(al.mods, d.B, d.C, m.muB, m.muC, row);
            if (facl && (!pm.lC || !pm.rC || *pm.lC != *pm.rC ||
                         !validate_left_integral(*pm.lC, al).ok())) {
                facl = false;
                flw = "witness cointegral " + itos(k);
            }
        }
        for (std::size_t k = 0; k < drc.size(); ++k) {
            Vec row = g * drc[k];
            rrows.push_back(row);
            PartialMaps pm = factorize(al.mods, d.B, d.C, m.muB, m.muC, row);
            if (facr && (!pm.lB || !pm.rB || *pm.lB != *pm.rB ||
                         !validate_right_integral(*pm.lB, al).ok())) {
                facr = false;
                frw = "witness cointegral " + itos(k);
            }
        }
        rep.add("dual left cointegrals factor to partial left integrals", facl, flw);
        rep.add("dual right cointegrals factor to partial right integrals", facr, frw);

        // The space of all partial left integrals, solved directly from the
        // bimodule, slice and invariance conditions, must recompose to the
        // same functionals.
        auto linearize = [](std::size_t rows_dim, std::size_t cols_dim,
                            auto resid) -> std::vector<Mat> {
            std::vector<Vec> cols;
            std::size_t len = 0;
            for (std::size_t k = 0; k < rows_dim; ++k)
                for (std::size_t j = 0; j < cols_dim; ++j) {
                    Mat e(rows_dim, cols_dim);
                    e.at(k, j) = GRat(1);
                    cols.push_back(resid(e));
                    len = cols.back().size();
                }
            Mat sys(len, rows_dim * cols_dim);
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t r = 0; r < len; ++r) sys.at(r, c) = cols[c][r];
            std::vector<Vec> null = nullspace(sys);
            std::vector<Mat> sols;
            for (const Vec& v : null) {
                Mat x(rows_dim, cols_dim);
                for (std::size_t k = 0; k < rows_dim; ++k)
                    for (std::size_t j = 0; j < cols_dim; ++j)
                        x.at(k, j) = v[k * cols_dim + j];
                sols.push_back(std::move(x));
            }
            return sols;
        };
        auto append = [](Vec& acc, const Mat& mm) {
            Vec v = vec_of(mm);
            acc.insert(acc.end(), v.begin(), v.end());
        };
        auto appendv = [](Vec& acc, const Vec& v) {
            acc.insert(acc.end(), v.begin(), v.end());
        };
        std::vector<Mat> lsols = linearize(dC, n, [&](const Mat& x) {
            Vec acc;
            for (std::size_t k = 0; k < dC; ++k) {
                append(acc, x * d.C.img[k].lam - d.C.alg.lmul_basis(k) * x);
                append(acc, x * d.C.img[k].rho - d.C.alg.rmul_basis(k) * x);
            }
            Mat f1 = slice_second_ambient(al.mods.Cs_r, x, n);
            Mat f2 = slice_second_ambient(al.mods.B_r, (*al.tBinv) * x, n);
            for (std::size_t r = 0; r < al.Q1.q.relations.dim(); ++r)
                appendv(acc, f1 * al.Q1.q.relations.basis_vec(r));
            for (std::size_t r = 0; r < al.Q2.q.relations.dim(); ++r)
                appendv(acc, f2 * al.Q2.q.relations.basis_vec(r));
            Mat sf1 = (*al.S) * f1;
            for (std::size_t x1 = 0; x1 < n; ++x1)
                for (std::size_t b = 0; b < n; ++b) {
                    appendv(acc, vec_sub(f1 * d.dcl_at(b, x1),
                                         d.C.lmul_on_A(x.col(b)).col(x1)));
                    appendv(acc, vec_sub(f2 * d.dbl_at(b, x1),
                                         d.C.rmul_on_A(x.col(b)).col(x1)));
                    appendv(acc, vec_sub(sf1 * d.dcr_at(x1, b), f2 * d.dbr_at(b, x1)));
                }
            return acc;
        });
        std::vector<Mat> rsols = linearize(dB, n, [&](const Mat& x) {
            Vec acc;
            for (std::size_t k = 0; k < dB; ++k) {
                append(acc, x * d.B.img[k].lam - d.B.alg.lmul_basis(k) * x);
                append(acc, x * d.B.img[k].rho - d.B.alg.rmul_basis(k) * x);
            }
            Mat g1 = slice_first_ambient(al.mods.C_l, (*al.tCinv) * x, n);
            Mat g2 = slice_first_ambient(al.mods.Bs_l, x, n);
            for (std::size_t r = 0; r < al.Q1.q.relations.dim(); ++r)
                appendv(acc, g1 * al.Q1.q.relations.basis_vec(r));
            for (std::size_t r = 0; r < al.Q2.q.relations.dim(); ++r)
                appendv(acc, g2 * al.Q2.q.relations.basis_vec(r));
            Mat sg2 = (*al.S) * g2;
            for (std::size_t x1 = 0; x1 < n; ++x1)
                for (std::size_t b = 0; b < n; ++b) {
                    appendv(acc, vec_sub(g1 * d.dcr_at(x1, b),
                                         d.B.lmul_on_A(x.col(x1)).col(b)));
                    appendv(acc, vec_sub(g2 * d.dbr_at(x1, b),
                                         d.B.rmul_on_A(x.col(x1)).col(b)));
                    appendv(acc, vec_sub(sg2 * d.dbl_at(b, x1), g1 * d.dcl_at(x1, b)));
                }
            return acc;
        });
        std::vector<Vec> lifr, rifr;
        for (const Mat& x : lsols) lifr.push_back(precompose(m.muC, x));
        for (const Mat& x : rsols) rifr.push_back(precompose(m.muB, x));
        rep.add("partial left integral functionals match the dual left cointegrals",
                Subspace::span(n, lifr) == Subspace::span(n, lrows));
        rep.add("partial right integral functionals match the dual right cointegrals",
                Subspace::span(n, rifr) == Subspace::span(n, rrows));
    }
    return rep;
}

}  // namespace mhad

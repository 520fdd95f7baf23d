#include "mhad/morphism.hpp"

namespace mhad {

namespace {

std::string itos(std::size_t v) { return std::to_string(v); }

Vec vec_of(const Mat& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

// (op (x) I) w and (I (x) op) w, exploiting sparsity of w.
Vec fill_first(const Mat& op, const Vec& w, std::size_t n) {
    Vec r(w.size());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const GRat& c = w[tidx(p, q, n)];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (!op.at(i, p).is_zero()) r[tidx(i, q, n)] += op.at(i, p) * c;
        }
    return r;
}

Vec fill_second(const Mat& op, const Vec& w, std::size_t n) {
    Vec r(w.size());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const GRat& c = w[tidx(p, q, n)];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!op.at(j, q).is_zero()) r[tidx(p, j, n)] += op.at(j, q) * c;
        }
    return r;
}

// proj . (P1 (x) P2) without materializing the Kronecker product: row r of
// proj, reshaped to an n x n matrix R, contributes (P1^T R P2) as row r.
Mat proj_kron(const Mat& proj, const Mat& p1, const Mat& p2, std::size_t n) {
    Mat out(proj.rows(), n * n);
    for (std::size_t r = 0; r < proj.rows(); ++r) {
        Mat rr(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rr.at(i, j) = proj.at(r, tidx(i, j, n));
        Mat row = p1.transpose() * rr * p2;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) out.at(r, tidx(a, b, n)) = row.at(a, b);
    }
    return out;
}

// Coordinates of a multiplier inside the span of an embedded base, as the
// joint (lam, rho) linear system.
std::optional<Vec> base_coords(const BaseEmbedding& base, const Multiplier& t) {
    std::size_t nn = t.lam.rows() * t.lam.cols();
    Mat sys(2 * nn, base.dim());
    for (std::size_t k = 0; k < base.dim(); ++k) {
        Vec l = vec_of(base.img[k].lam), r = vec_of(base.img[k].rho);
        for (std::size_t i = 0; i < nn; ++i) {
            sys.at(i, k) = l[i];
            sys.at(nn + i, k) = r[i];
        }
    }
    Vec rhs(2 * nn);
    Vec tl = vec_of(t.lam), tr = vec_of(t.rho);
    for (std::size_t i = 0; i < nn; ++i) {
        rhs[i] = tl[i];
        rhs[nn + i] = tr[i];
    }
    return solve(sys, rhs);
}

Multiplier embed(const BaseEmbedding& base, const Vec& coords) {
    std::size_t n = base.img.empty() ? 0 : base.img[0].lam.rows();
    Multiplier m{Mat(n, n), Mat(n, n)};
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) m = m + base.img[k].scaled(coords[k]);
    return m;
}

Multiplier combine(const std::vector<Multiplier>& imgs, const Vec& coords,
                   std::size_t n) {
    Multiplier m{Mat(n, n), Mat(n, n)};
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) m = m + imgs[k].scaled(coords[k]);
    return m;
}

}  // namespace

std::optional<Multiplier> extend_through(const MorphismSpec& sp, const Multiplier& T) {
    std::size_t nd = sp.src->n(), na = sp.dst->n();
    // Generators pi(d) e_j and their prescribed images pi(Td) e_j; the
    // left and right halves are independent systems.
    Mat genl(na, nd * na), imgl(na, nd * na), genr(na, nd * na), imgr(na, nd * na);
    for (std::size_t d = 0; d < nd; ++d) {
        Vec td = T.lam.col(d), dt = T.rho.col(d);
        Mat tl(na, na), tr(na, na);
        for (std::size_t p = 0; p < nd; ++p) {
            if (!td[p].is_zero()) tl = tl + sp.pi[p].lam.scaled(td[p]);
            if (!dt[p].is_zero()) tr = tr + sp.pi[p].rho.scaled(dt[p]);
        }
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t i = 0; i < na; ++i) {
                genl.at(i, d * na + j) = sp.pi[d].lam.at(i, j);
                imgl.at(i, d * na + j) = tl.at(i, j);
                genr.at(i, d * na + j) = sp.pi[d].rho.at(i, j);
                imgr.at(i, d * na + j) = tr.at(i, j);
            }
    }
    auto ml = solve(genl.transpose(), imgl.transpose());
    auto mr = solve(genr.transpose(), imgr.transpose());
    if (!ml || !mr) return std::nullopt;
    return Multiplier{ml->transpose(), mr->transpose()};
}

std::optional<ExtendedComult> extend_comultiplications(const Algebroid& al,
                                                       const Multiplier& T,
                                                       CheckReport* rep) {
    std::size_t n = al.n();
    if (!al.Tr || !al.Tr_inv || !al.lT || !al.lT_inv) {
        if (rep) rep->add("canonical maps bijective", false);
        return std::nullopt;
    }
    auto d4 = descend(al.Q4.q, al.Q4.q, on_first_leg(T.lam, n));
    auto d5 = descend(al.Q5.q, al.Q5.q, on_second_leg(T.rho, n));
    if (rep) {
        rep->add("first-leg multiplication descends", d4.has_value());
        rep->add("second-leg multiplication descends", d5.has_value());
    }
    if (!d4 || !d5) return std::nullopt;
    ExtendedComult e{*al.Tr * *d4 * *al.Tr_inv, *al.lT * *d5 * *al.lT_inv};

    if (rep) {
        // Restriction: when T is an element of A, the extension must be
        // the elementwise comultiplication.
        auto t = al.d.A.unit() ? std::optional<Vec>(T.lam * *al.d.A.unit())
                               : std::nullopt;
        if (!t) {
            // Without a unit, try to recognize T as an element by its left
            // multiplication matrix.
            Mat sys(n * n, n);
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = vec_of(al.d.A.lmul_basis(k));
                for (std::size_t i = 0; i < n * n; ++i) sys.at(i, k) = v[i];
            }
            t = solve(sys, vec_of(T.lam));
        }
        if (t && al.d.A.lmul(*t) == T.lam && al.d.A.rmul(*t) == T.rho) {
            auto ec = al.comultC_endo(*t);
            auto eb = al.comultB_endo(*t);
            rep->add("extension restricts to the comultiplication tables",
                     ec && eb && e.onQ1 == *ec && e.onQ2 == *eb);
        }
        // Homomorphism property against elementwise comultiplications.
        bool hom = true;
        std::string hw;
        for (std::size_t a = 0; a < n && hom; ++a) {
            auto ca = al.comultC_endo(basis_vec(n, a));
            auto ba = al.comultB_endo(basis_vec(n, a));
            auto cta = al.comultC_endo(T.lam.col(a));
            auto bat = al.comultB_endo(T.rho.col(a));
            if (!ca || !ba || !cta || !bat || e.onQ1 * *ca != *cta ||
                e.onQ2 * *ba != *bat) {
                hom = false;
                hw = "witness basis element " + itos(a);
            }
        }
        rep->add("extension multiplies against elements", hom, hw);
    }
    return e;
}

CheckReport validate_morphism(const MorphismSpec& sp) {
    CheckReport rep;
    const Algebroid& src = *sp.src;
    const Algebroid& dst = *sp.dst;
    std::size_t nd = src.n(), na = dst.n();
    rep.add("image count matches the source dimension", sp.pi.size() == nd);
    if (sp.pi.size() != nd) return rep;

    bool ism = true;
    std::string iw;
    for (std::size_t d = 0; d < nd && ism; ++d)
        if (!is_multiplier(dst.d.A, sp.pi[d])) {
            ism = false;
            iw = "witness basis element " + itos(d);
        }
    rep.add("images are multipliers of the target", ism, iw);

    bool hom = true;
    std::string hw;
    for (std::size_t d = 0; d < nd && hom; ++d)
        for (std::size_t e = 0; e < nd; ++e) {
            Vec prod = src.d.A.mul(basis_vec(nd, d), basis_vec(nd, e));
            if (sp.pi[d] * sp.pi[e] != combine(sp.pi, prod, na)) {
                hom = false;
                hw = "witness pair (" + itos(d) + "," + itos(e) + ")";
                break;
            }
        }
    rep.add("the map is a homomorphism", hom, hw);

    // Non-degeneracy: the one-sided products span the target.
    {
        std::vector<Vec> lgen, rgen;
        for (std::size_t d = 0; d < nd; ++d)
            for (std::size_t j = 0; j < na; ++j) {
                lgen.push_back(sp.pi[d].lam.col(j));
                rgen.push_back(sp.pi[d].rho.col(j));
            }
        rep.add("the map is non-degenerate",
                Subspace::span(na, lgen).dim() == na &&
                    Subspace::span(na, rgen).dim() == na);
    }
    if (!rep.ok()) return rep;

    // Extensions of the embedded source bases, their coordinates in the
    // target bases, and the span conditions.
    std::size_t ne = src.d.B.dim(), nf = src.d.C.dim();
    std::vector<Multiplier> eB, eC;
    std::vector<Vec> beta, gamma;
    bool ext = true, mem = true;
    std::string ew, mw;
    for (std::size_t k = 0; k < ne && ext; ++k) {
        auto t = extend_through(sp, src.d.B.img[k]);
        if (!t) {
            ext = false;
            ew = "witness first-base element " + itos(k);
            break;
        }
        eB.push_back(*t);
        auto c = base_coords(dst.d.B, *t);
        if (!c) {
            mem = false;
            mw = "witness first-base element " + itos(k);
            break;
        }
        beta.push_back(*c);
    }
    for (std::size_t k = 0; k < nf && ext && mem; ++k) {
        auto t = extend_through(sp, src.d.C.img[k]);
        if (!t) {
            ext = false;
            ew = "witness second-base element " + itos(k);
            break;
        }
        eC.push_back(*t);
        auto c = base_coords(dst.d.C, *t);
        if (!c) {
            mem = false;
            mw = "witness second-base element " + itos(k);
            break;
        }
        gamma.push_back(*c);
    }
    rep.add("source bases extend through the map", ext, ew);
    rep.add("base images land in the target bases", mem, mw);
    if (!ext || !mem) return rep;

    {
        std::vector<Vec> bl, br, cl, cr;
        for (std::size_t k = 0; k < ne; ++k)
            for (std::size_t j = 0; j < dst.d.B.dim(); ++j) {
                bl.push_back(dst.d.B.alg.mul(beta[k], basis_vec(dst.d.B.dim(), j)));
                br.push_back(dst.d.B.alg.mul(basis_vec(dst.d.B.dim(), j), beta[k]));
            }
        for (std::size_t k = 0; k < nf; ++k)
            for (std::size_t j = 0; j < dst.d.C.dim(); ++j) {
                cl.push_back(dst.d.C.alg.mul(gamma[k], basis_vec(dst.d.C.dim(), j)));
                cr.push_back(dst.d.C.alg.mul(basis_vec(dst.d.C.dim(), j), gamma[k]));
            }
        rep.add("base images act non-degenerately",
                Subspace::span(dst.d.B.dim(), bl).dim() == dst.d.B.dim() &&
                    Subspace::span(dst.d.B.dim(), br).dim() == dst.d.B.dim() &&
                    Subspace::span(dst.d.C.dim(), cl).dim() == dst.d.C.dim() &&
                    Subspace::span(dst.d.C.dim(), cr).dim() == dst.d.C.dim());
    }

    {
        bool tw = true;
        std::string tww;
        for (std::size_t k = 0; k < ne && tw; ++k) {
            // Image of the twisted base element versus the twist of the
            // image, on both twists.
            Multiplier lhs{Mat(na, na), Mat(na, na)};
            Vec te = src.d.tB.col(k);
            for (std::size_t j = 0; j < nf; ++j)
                if (!te[j].is_zero()) lhs = lhs + eC[j].scaled(te[j]);
            if (lhs != embed(dst.d.C, dst.d.tB * beta[k])) {
                tw = false;
                tww = "first twist, witness " + itos(k);
            }
        }
        for (std::size_t k = 0; k < nf && tw; ++k) {
            Multiplier lhs{Mat(na, na), Mat(na, na)};
            Vec tf = src.d.tC.col(k);
            for (std::size_t j = 0; j < ne; ++j)
                if (!tf[j].is_zero()) lhs = lhs + eB[j].scaled(tf[j]);
            if (lhs != embed(dst.d.B, dst.d.tC * gamma[k])) {
                tw = false;
                tww = "second twist, witness " + itos(k);
            }
        }
        rep.add("twists intertwine with the map", tw, tww);
    }

    // Comultiplication compatibility, elementwise on basis tuples. The
    // classes of pi(d') a' (x) pi(d'') a'' in the two target squares are
    // cached per source pair.
    const Mat& p1 = dst.Q1.q.proj;
    const Mat& p2 = dst.Q2.q.proj;
    std::vector<Mat> mc(nd * nd), nc(nd * nd);
    for (std::size_t p = 0; p < nd; ++p)
        for (std::size_t q = 0; q < nd; ++q) {
            mc[p * nd + q] = proj_kron(p1, sp.pi[p].lam, sp.pi[q].lam, na);
            nc[p * nd + q] = proj_kron(p2, sp.pi[p].rho, sp.pi[q].rho, na);
        }
    bool dc = true, db = true;
    std::string dcw, dbw;
    for (std::size_t d = 0; d < nd && (dc || db); ++d) {
        auto ext2 = extend_comultiplications(dst, sp.pi[d]);
        if (!ext2) {
            dc = db = false;
            dcw = dbw = "comultiplication of image " + itos(d) + " undefined";
            break;
        }
        for (std::size_t dp = 0; dp < nd && (dc || db); ++dp)
            for (std::size_t dq = 0; dq < nd && (dc || db); ++dq) {
                if (dc) {
                    Vec w = fill_second(src.d.A.rmul_basis(dq),
                                        src.d.dcl_at(d, dp), nd);
                    Mat rhs(p1.rows(), na * na);
                    for (std::size_t p = 0; p < nd; ++p)
                        for (std::size_t q = 0; q < nd; ++q)
                            if (!w[tidx(p, q, nd)].is_zero())
                                rhs = rhs + mc[p * nd + q].scaled(w[tidx(p, q, nd)]);
                    if (ext2->onQ1 * mc[dp * nd + dq] != rhs) {
                        dc = false;
                        dcw = "witness triple (" + itos(d) + "," + itos(dp) + "," +
                              itos(dq) + ")";
                    }
                }
                if (db) {
                    Vec w = fill_first(src.d.A.lmul_basis(dp),
                                       src.d.dbr_at(d, dq), nd);
                    Mat rhs(p2.rows(), na * na);
                    for (std::size_t p = 0; p < nd; ++p)
                        for (std::size_t q = 0; q < nd; ++q)
                            if (!w[tidx(p, q, nd)].is_zero())
                                rhs = rhs + nc[p * nd + q].scaled(w[tidx(p, q, nd)]);
                    if (ext2->onQ2 * nc[dp * nd + dq] != rhs) {
                        db = false;
                        dbw = "witness triple (" + itos(d) + "," + itos(dp) + "," +
                              itos(dq) + ")";
                    }
                }
            }
    }
    rep.add("left comultiplications are compatible", dc, dcw);
    rep.add("right comultiplications are compatible", db, dbw);
    return rep;
}

CheckReport check_antipode_preserved(const MorphismSpec& sp) {
    CheckReport rep;
    const Algebroid& src = *sp.src;
    const Algebroid& dst = *sp.dst;
    std::size_t nd = src.n(), na = dst.n();
    bool have = src.S && dst.S && dst.Sinv && src.epsB && src.epsC && dst.epsB &&
                dst.epsC;
    rep.add("antipodes and counits available on both sides", have);
    if (!have) return rep;

    {
        bool ok = true;
        std::string w;
        for (std::size_t d = 0; d < nd && ok; ++d) {
            Multiplier lhs = combine(sp.pi, src.S->col(d), na);
            Multiplier rhs{*dst.S * sp.pi[d].rho * *dst.Sinv,
                           *dst.S * sp.pi[d].lam * *dst.Sinv};
            if (lhs != rhs) {
                ok = false;
                w = "witness basis element " + itos(d);
            }
        }
        rep.add("antipodes commute with the map", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::size_t d = 0; d < nd && ok; ++d) {
            auto eb = extend_through(sp, embed(src.d.B, src.epsB->col(d)));
            auto ec = extend_through(sp, embed(src.d.C, src.epsC->col(d)));
            if (!eb || !ec || *dst.epsB * sp.pi[d].lam != *dst.epsB * eb->lam ||
                *dst.epsC * sp.pi[d].rho != *dst.epsC * ec->rho) {
                ok = false;
                w = "witness basis element " + itos(d);
            }
        }
        rep.add("counits factor through the source counits", ok, w);
    }
    return rep;
}

CheckReport check_morphism_into_dual(const MeasuredAlgebroid& m, const DualResult& dr,
                                     const Algebroid& src,
                                     const std::vector<Multiplier>& pi) {
    CheckReport rep;
    std::size_t nd = src.n(), n = m.al.n();
    const Mat& g = dr.space.G;
    const Mat& gi = dr.space.Ginv;
    const FiniteAlgebra& a = m.al.d.A;

    bool ism = pi.size() == nd;
    std::string iw;
    for (std::size_t d = 0; d < nd && ism; ++d)
        if (!is_multiplier(dr.dual.al.d.A, pi[d])) {
            ism = false;
            iw = "witness basis element " + itos(d);
        }
    rep.add("images are multipliers of the dual algebra", ism, iw);
    if (!ism) return rep;

    // Forward and backward action matrices of each image, and its values
    // on A through the counit; the two action routes must give the same
    // evaluation.
    Functional epsrow = precompose(m.muC, *m.al.epsC);
    std::vector<Mat> fw(nd), bw(nd);
    std::vector<Vec> frow(nd);
    bool routes = true;
    std::string rw;
    for (std::size_t d = 0; d < nd; ++d) {
        fw[d] = (g * pi[d].rho * gi).transpose();
        bw[d] = (g * pi[d].lam * gi).transpose();
        frow[d] = precompose(epsrow, fw[d]);
        if (routes && frow[d] != precompose(epsrow, bw[d])) {
            routes = false;
            rw = "witness basis element " + itos(d);
        }
    }
    rep.add("both action routes evaluate identically", routes, rw);

    // Coordinates of the images inside the dual, to push the source
    // tensors into the dual and pair them with the evaluation grids. The
    // pairing of a balanced dual tensor with a plain pair of elements of
    // A is not the product of the individual evaluations; it inserts the
    // base-valued partial maps, which is exactly what the grids encode.
    std::vector<Vec> coords(nd);
    for (std::size_t d = 0; d < nd; ++d) coords[d] = gi * frow[d];

    bool id1 = true, id2 = true;
    std::string w1, w2;
    for (std::size_t d = 0; d < nd && (id1 || id2); ++d)
        for (std::size_t dp = 0; dp < nd && (id1 || id2); ++dp)
            for (std::size_t dq = 0; dq < nd && (id1 || id2); ++dq) {
                Vec wb = fill_first(src.d.A.lmul_basis(dp), src.d.dbr_at(d, dq), nd);
                Vec wc = fill_second(src.d.A.rmul_basis(dq), src.d.dcl_at(d, dp), nd);
                Vec xb(n * n), xc(n * n);
                for (std::size_t p = 0; p < nd; ++p)
                    for (std::size_t q = 0; q < nd; ++q) {
                        const GRat& cb = wb[tidx(p, q, nd)];
                        const GRat& cc = wc[tidx(p, q, nd)];
                        if (cb.is_zero() && cc.is_zero()) continue;
                        for (std::size_t u = 0; u < n; ++u) {
                            if (coords[p][u].is_zero()) continue;
                            for (std::size_t v = 0; v < n; ++v) {
                                GRat f = coords[p][u] * coords[q][v];
                                if (!cb.is_zero()) xb[tidx(u, v, n)] += cb * f;
                                if (!cc.is_zero()) xc[tidx(u, v, n)] += cc * f;
                            }
                        }
                    }
                Vec lb = dr.aba.transpose() * xb;
                Vec lc = dr.aca.transpose() * xc;
                for (std::size_t ap = 0; ap < n && (id1 || id2); ++ap)
                    for (std::size_t aq = 0; aq < n; ++aq) {
                        if (id1) {
                            Vec prod = a.mul(bw[dp].col(ap), bw[dq].col(aq));
                            if (lb[tidx(ap, aq, n)] != dot(frow[d], prod)) {
                                id1 = false;
                                w1 = "witness (" + itos(d) + "," + itos(dp) + "," +
                                     itos(dq) + ";" + itos(ap) + "," + itos(aq) + ")";
                            }
                        }
                        if (id2) {
                            Vec prod = a.mul(fw[dp].col(ap), fw[dq].col(aq));
                            if (lc[tidx(ap, aq, n)] != dot(frow[d], prod)) {
                                id2 = false;
                                w2 = "witness (" + itos(d) + "," + itos(dp) + "," +
                                     itos(dq) + ";" + itos(ap) + "," + itos(aq) + ")";
                            }
                        }
                    }
            }
    rep.add("evaluation identity for the backward actions", id1, w1);
    rep.add("evaluation identity for the forward actions", id2, w2);

    // The criterion must agree with the direct validation on the dual.
    MorphismSpec sp{&src, &dr.dual.al, pi};
    CheckReport vm = validate_morphism(sp);
    rep.add("pairing criterion matches the direct validation",
            vm.ok() == (routes && id1 && id2));
    return rep;
}

std::optional<MorphismSpec> compose_morphisms(const MorphismSpec& outer,
                                              const MorphismSpec& inner) {
    MorphismSpec sp;
    sp.src = inner.src;
    sp.dst = outer.dst;
    for (std::size_t d = 0; d < inner.pi.size(); ++d) {
        auto t = extend_through(outer, inner.pi[d]);
        if (!t) return std::nullopt;
        sp.pi.push_back(*t);
    }
    return sp;
}

}  // namespace mhad

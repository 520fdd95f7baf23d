#include "mhad/wmha.hpp"

#include "mhad/functional.hpp"

namespace mhad {

namespace {

std::string itos(std::size_t k) { return std::to_string(k); }

// Product of two elements of A (x) A.
Vec mul_aa(const FiniteAlgebra& a, const Vec& x, const Vec& y) {
    std::size_t n = a.dim();
    Vec out(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (x[tidx(p, q, n)] == GRat(0)) continue;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    GRat c = x[tidx(p, q, n)] * y[tidx(r, s, n)];
                    if (c == GRat(0)) continue;
                    Vec pr = a.mul(basis_vec(n, p), basis_vec(n, r));
                    Vec qs = a.mul(basis_vec(n, q), basis_vec(n, s));
                    for (std::size_t u = 0; u < n; ++u) {
                        if (pr[u] == GRat(0)) continue;
                        for (std::size_t v = 0; v < n; ++v)
                            out[tidx(u, v, n)] += c * pr[u] * qs[v];
                    }
                }
        }
    return out;
}

// Left / right multiplication by a fixed element of A (x) A.
Mat lmul_aa(const FiniteAlgebra& a, const Vec& x) {
    std::size_t n = a.dim();
    Mat out(n * n, n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (x[tidx(p, q, n)] == GRat(0)) continue;
            Mat k = a.lmul_basis(p).kron(a.lmul_basis(q)).scaled(x[tidx(p, q, n)]);
            out = out + k;
        }
    return out;
}

Mat rmul_aa(const FiniteAlgebra& a, const Vec& x) {
    std::size_t n = a.dim();
    Mat out(n * n, n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (x[tidx(p, q, n)] == GRat(0)) continue;
            Mat k = a.rmul_basis(p).kron(a.rmul_basis(q)).scaled(x[tidx(p, q, n)]);
            out = out + k;
        }
    return out;
}

// Contract one leg of an element of A (x) A with a functional.
Vec slice_first(const Functional& f, const Vec& x, std::size_t n) {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[j] += f[i] * x[tidx(i, j, n)];
    return out;
}

Vec slice_second(const Functional& f, const Vec& x, std::size_t n) {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += f[j] * x[tidx(i, j, n)];
    return out;
}

Multiplier emb(const BaseEmbedding& e, const Vec& coords) {
    std::size_t n = e.img[0].lam.rows();
    Multiplier m{Mat(n, n), Mat(n, n)};
    for (std::size_t k = 0; k < e.dim(); ++k)
        if (coords[k] != GRat(0)) m = m + e.img[k].scaled(coords[k]);
    return m;
}

bool grid_invertible(const FiniteAlgebra& a, const Functional& f) {
    std::size_t n = a.dim();
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.at(i, j) = dot(f, a.mul(basis_vec(n, i), basis_vec(n, j)));
    return inverse(g).has_value();
}

}  // namespace

CheckReport validate_wmha(const WMHASpec& w) {
    CheckReport rep;
    std::size_t n = w.A.dim();
    AlgebraReport ar = validate_algebra(w.A);
    rep.add("underlying algebra is unital and associative",
            ar.ok() && w.A.unit().has_value(), ar.witness);
    if (!w.A.unit()) return rep;
    const Vec& one = *w.A.unit();

    // The element behind the multiplier Delta(a), recovered by plugging
    // the unit into the right slot of the first table.
    std::vector<Vec> dfull(n, Vec(n * n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (one[b] != GRat(0))
                dfull[a] = vec_add(dfull[a], vec_scaled(w.dr_at(a, b), one[b]));

    bool cohere = true;
    std::string cw;
    for (std::size_t a = 0; a < n && cohere; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool ok = w.dr_at(a, b) == on_second_leg(w.A.rmul_basis(b), n) * dfull[a] &&
                      w.dl_at(a, b) == on_first_leg(w.A.rmul_basis(b), n) * dfull[a] &&
                      w.ld_at(a, b) == on_first_leg(w.A.lmul_basis(b), n) * dfull[a] &&
                      w.rd_at(a, b) == on_second_leg(w.A.lmul_basis(b), n) * dfull[a];
            if (!ok) {
                cohere = false;
                cw = "pair (" + itos(a) + "," + itos(b) + ")";
                break;
            }
        }
    rep.add("tables cohere with one comultiplication", cohere, cw);

    bool hom = true;
    for (std::size_t i = 0; i < n && hom; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = w.A.mul(basis_vec(n, i), basis_vec(n, j));
            Vec lhs(n * n);
            for (std::size_t c = 0; c < n; ++c)
                if (prod[c] != GRat(0)) lhs = vec_add(lhs, vec_scaled(dfull[c], prod[c]));
            if (lhs != mul_aa(w.A, dfull[i], dfull[j])) {
                hom = false;
                break;
            }
        }
    rep.add("comultiplication is a homomorphism", hom);

    bool coassoc = true;
    for (std::size_t a = 0; a < n && coassoc; ++a) {
        Vec lhs(n * n * n), rhs(n * n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                GRat c = dfull[a][tidx(p, q, n)];
                if (c == GRat(0)) continue;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        lhs[tidx(u, v, n) * n + q] += c * dfull[p][tidx(u, v, n)];
                        rhs[(p * n + u) * n + v] += c * dfull[q][tidx(u, v, n)];
                    }
            }
        coassoc = lhs == rhs;
    }
    rep.add("comultiplication is coassociative", coassoc);

    bool full1 = false, full2 = false;
    {
        std::vector<Vec> legs1, legs2;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t j = 0; j < n; ++j) {
                    Vec v1(n), v2(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        v1[i] = w.dr_at(a, b)[tidx(i, j, n)];
                        v2[i] = w.ld_at(a, b)[tidx(j, i, n)];
                    }
                    legs1.push_back(std::move(v1));
                    legs2.push_back(std::move(v2));
                }
        full1 = Subspace::span(n, legs1).dim() == n;
        full2 = Subspace::span(n, legs2).dim() == n;
    }
    rep.add("comultiplication is full on the first leg", full1);
    rep.add("comultiplication is full on the second leg", full2);

    rep.add("canonical idempotent squares to itself", mul_aa(w.A, w.E, w.E) == w.E);

    {
        Mat le = lmul_aa(w.A, w.E), re = rmul_aa(w.A, w.E);
        std::vector<Vec> lcols, rcols, drcols, dlcols, ldcols, rdcols;
        for (std::size_t t = 0; t < n * n; ++t) {
            lcols.push_back(le.col(t));
            rcols.push_back(re.col(t));
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                drcols.push_back(w.dr_at(a, b));
                dlcols.push_back(w.dl_at(a, b));
                ldcols.push_back(w.ld_at(a, b));
                rdcols.push_back(w.rd_at(a, b));
            }
        Subspace sl = Subspace::span(n * n, lcols);
        Subspace sr = Subspace::span(n * n, rcols);
        rep.add("idempotent carries the right range",
                Subspace::span(n * n, drcols) == sl && Subspace::span(n * n, dlcols) == sl);
        rep.add("idempotent carries the left range",
                Subspace::span(n * n, ldcols) == sr && Subspace::span(n * n, rdcols) == sr);
    }

    {
        std::size_t n3 = n * n * n;
        Vec de1(n3), de2(n3), x(n3), y(n3);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                GRat c = w.E[tidx(p, q, n)];
                if (c == GRat(0)) continue;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        de1[tidx(u, v, n) * n + q] += c * dfull[p][tidx(u, v, n)];
                        de2[(p * n + u) * n + v] += c * dfull[q][tidx(u, v, n)];
                    }
            }
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                GRat c = w.E[tidx(p, q, n)];
                if (c == GRat(0)) continue;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t s = 0; s < n; ++s) {
                        GRat d = c * w.E[tidx(r, s, n)];
                        if (d == GRat(0)) continue;
                        Vec qr = w.A.mul(basis_vec(n, q), basis_vec(n, r));
                        Vec ps = w.A.mul(basis_vec(n, p), basis_vec(n, s));
                        for (std::size_t m = 0; m < n; ++m) {
                            if (qr[m] != GRat(0)) x[(p * n + m) * n + s] += d * qr[m];
                            if (ps[m] != GRat(0)) y[(r * n + m) * n + q] += d * ps[m];
                        }
                    }
            }
        rep.add("idempotent is compatible with the comultiplication",
                de1 == x && x == y && y == de2);
    }

    bool counit = true;
    for (std::size_t a = 0; a < n && counit; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec prod = w.A.mul(basis_vec(n, a), basis_vec(n, b));
            if (slice_first(w.eps, w.dr_at(a, b), n) != prod ||
                slice_second(w.eps, w.ld_at(b, a), n) != prod) {
                counit = false;
                break;
            }
        }
    rep.add("counit laws", counit);

    rep.add("left integral is faithful", grid_invertible(w.A, w.phi));
    rep.add("right integral is faithful", grid_invertible(w.A, w.psi));
    return rep;
}

CheckReport frobenius_validate(const BaseEmbedding& B, const BaseEmbedding& C,
                               const Mat& tB, const Mat& tC,
                               const Functional& muB, const Functional& muC,
                               const Mat& E, std::size_t n) {
    CheckReport rep;
    std::size_t nb = B.dim(), nc = C.dim();

    Mat e2(nb, nc);
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nc; ++l) {
            if (E.at(k, l) == GRat(0)) continue;
            for (std::size_t p = 0; p < nb; ++p)
                for (std::size_t q = 0; q < nc; ++q) {
                    GRat c = E.at(k, l) * E.at(p, q);
                    if (c == GRat(0)) continue;
                    Vec bp = B.alg.mul(basis_vec(nb, k), basis_vec(nb, p));
                    Vec cq = C.alg.mul(basis_vec(nc, l), basis_vec(nc, q));
                    for (std::size_t u = 0; u < nb; ++u)
                        for (std::size_t v = 0; v < nc; ++v)
                            e2.at(u, v) += c * bp[u] * cq[v];
                }
        }
    rep.add("idempotent squares to itself", e2 == E);

    bool leg_c = true, leg_b = true;
    std::string wc, wb;
    for (std::size_t y = 0; y < nc; ++y)
        if (E * C.alg.rmul(basis_vec(nc, y)).transpose() !=
            B.alg.rmul(tC.col(y)) * E) {
            leg_c = false;
            wc = "target basis element " + itos(y);
            break;
        }
    for (std::size_t x = 0; x < nb; ++x)
        if (B.alg.lmul(basis_vec(nb, x)) * E !=
            E * C.alg.lmul(tB.col(x)).transpose()) {
            leg_b = false;
            wb = "source basis element " + itos(x);
            break;
        }
    rep.add("right leg transports through the target twist", leg_c, wc);
    rep.add("left leg transports through the source twist", leg_b, wb);

    auto tBinv = inverse(tB);
    auto tCinv = inverse(tC);
    if (!rep.add("twists are invertible", tBinv.has_value() && tCinv.has_value()))
        return rep;

    Multiplier m1{Mat(n, n), Mat(n, n)}, m2{Mat(n, n), Mat(n, n)};
    Multiplier w1{Mat(n, n), Mat(n, n)}, w2{Mat(n, n), Mat(n, n)};
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nc; ++l) {
            GRat c = E.at(k, l);
            if (c == GRat(0)) continue;
            m1 = m1 + (B.img[k] * emb(B, tBinv->col(l))).scaled(c);
            m2 = m2 + (emb(C, tCinv->col(k)) * C.img[l]).scaled(c);
            w1 = w1 + C.img[l].scaled(c * muB[k]);
            w2 = w2 + B.img[k].scaled(c * muC[l]);
        }
    Multiplier id = Multiplier::identity(n);
    rep.add("multiplying through the inverse source twist gives one", m1 == id);
    rep.add("multiplying through the inverse target twist gives one", m2 == id);
    rep.add("source weight contracts the idempotent to one", w1 == id);
    rep.add("target weight contracts the idempotent to one", w2 == id);
    return rep;
}

std::optional<WMHAModel> wmha_to_algebroid(const WMHASpec& w, CheckReport* rep) {
    CheckReport local;
    CheckReport& r = rep ? *rep : local;
    std::size_t n = w.A.dim();
    if (!r.add("algebra has a unit", w.A.unit().has_value())) return std::nullopt;
    const Vec& one = *w.A.unit();

    // Source and target counital maps through the idempotent and counit.
    std::vector<Vec> es(n), et(n);
    for (std::size_t a = 0; a < n; ++a) {
        es[a] = slice_second(w.eps, on_second_leg(w.A.lmul_basis(a), n) * w.E, n);
        et[a] = slice_first(w.eps, on_first_leg(w.A.rmul_basis(a), n) * w.E, n);
    }

    auto build_base = [&](const std::vector<Vec>& img, BaseEmbedding* out,
                          std::vector<Vec>* basis) -> bool {
        Subspace sp = Subspace::span(n, img);
        std::size_t d = sp.dim();
        basis->clear();
        for (std::size_t k = 0; k < d; ++k) basis->push_back(sp.basis_vec(k));
        std::vector<Mat> lm(d, Mat(d, d));
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) {
                auto c = sp.coordinates(w.A.mul((*basis)[k], (*basis)[j]));
                if (!c) return false;
                for (std::size_t i = 0; i < d; ++i) lm[k].at(i, j) = (*c)[i];
            }
        out->alg = FiniteAlgebra(lm);
        if (auto u = out->alg.find_unit()) out->alg.set_unit(*u);
        out->img.clear();
        for (std::size_t k = 0; k < d; ++k)
            out->img.push_back(Multiplier{w.A.lmul((*basis)[k]), w.A.rmul((*basis)[k])});
        return true;
    };

    WMHAModel model;
    model.w = w;
    std::vector<Vec> bbasis, cbasis;
    bool okb = build_base(es, &model.data.B, &bbasis);
    bool okc = build_base(et, &model.data.C, &cbasis);
    if (!r.add("source base closes under multiplication", okb)) return std::nullopt;
    if (!r.add("target base closes under multiplication", okc)) return std::nullopt;
    std::size_t nb = bbasis.size(), nc = cbasis.size();
    model.data.A = w.A;

    // Twists from the leg conditions on E.
    Mat sysB(n * n, nc), sysC(n * n, nb);
    for (std::size_t l = 0; l < nc; ++l) {
        Vec v = on_second_leg(w.A.lmul(cbasis[l]), n) * w.E;
        for (std::size_t t = 0; t < n * n; ++t) sysB.at(t, l) = v[t];
    }
    for (std::size_t k = 0; k < nb; ++k) {
        Vec v = on_first_leg(w.A.rmul(bbasis[k]), n) * w.E;
        for (std::size_t t = 0; t < n * n; ++t) sysC.at(t, k) = v[t];
    }
    model.data.tB = Mat(nc, nb);
    model.data.tC = Mat(nb, nc);
    bool tw = true;
    for (std::size_t k = 0; k < nb && tw; ++k) {
        auto sol = solve_unique(sysB, on_first_leg(w.A.lmul(bbasis[k]), n) * w.E);
        if (!sol) { tw = false; break; }
        for (std::size_t l = 0; l < nc; ++l) model.data.tB.at(l, k) = (*sol)[l];
    }
    for (std::size_t l = 0; l < nc && tw; ++l) {
        auto sol = solve_unique(sysC, on_second_leg(w.A.rmul(cbasis[l]), n) * w.E);
        if (!sol) { tw = false; break; }
        for (std::size_t k = 0; k < nb; ++k) model.data.tC.at(k, l) = (*sol)[k];
    }
    if (!r.add("twists solve from the idempotent", tw)) return std::nullopt;

    model.data.dcr = w.dr;
    model.data.dcl = w.dl;
    model.data.dbl = w.ld;
    model.data.dbr = w.rd;

    // Base weights from mu(counital image) = counit.
    Subspace sb = Subspace::span(n, es), sc = Subspace::span(n, et);
    Mat cb(n, nb), cc(n, nc);
    for (std::size_t a = 0; a < n; ++a) {
        auto xb = sb.coordinates(es[a]);
        auto xc = sc.coordinates(et[a]);
        for (std::size_t k = 0; k < nb; ++k) cb.at(a, k) = (*xb)[k];
        for (std::size_t l = 0; l < nc; ++l) cc.at(a, l) = (*xc)[l];
    }
    Vec epsvals(w.eps);
    auto mb = solve_unique(cb, epsvals);
    auto mc = solve_unique(cc, epsvals);
    if (!r.add("base weights solve from the counit", mb.has_value() && mc.has_value()))
        return std::nullopt;
    model.data.muB = *mb;
    model.data.muC = *mc;

    // E in base coordinates, for the Frobenius battery.
    {
        Mat cols(n * n, nb * nc);
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t l = 0; l < nc; ++l) {
                Vec v = vec_kron(bbasis[k], cbasis[l]);
                for (std::size_t t = 0; t < n * n; ++t) cols.at(t, k * nc + l) = v[t];
            }
        auto sol = solve_unique(cols, w.E);
        if (!r.add("idempotent lies in the base tensor square", sol.has_value()))
            return std::nullopt;
        model.Ebase = Mat(nb, nc);
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t l = 0; l < nc; ++l) model.Ebase.at(k, l) = (*sol)[k * nc + l];
    }

    // Partial integrals as factorizations through the bases.
    Algebroid al = build_algebroid(model.data);
    PartialMaps pphi = factorize(al.mods, model.data.B, model.data.C,
                                 *model.data.muB, *model.data.muC, w.phi);
    PartialMaps ppsi = factorize(al.mods, model.data.B, model.data.C,
                                 *model.data.muB, *model.data.muC, w.psi);
    bool okphi = pphi.lC && pphi.rC && *pphi.lC == *pphi.rC;
    bool okpsi = ppsi.lB && ppsi.rB && *ppsi.lB == *ppsi.rB;
    if (!r.add("left integral factorizes through the target base", okphi))
        return std::nullopt;
    if (!r.add("right integral factorizes through the source base", okpsi))
        return std::nullopt;
    model.phiC = *pphi.lC;
    model.psiB = *ppsi.lB;
    (void)one;
    return model;
}

std::optional<WMHASpec> algebroid_to_wmha(const MeasuredAlgebroid& m, Mat* Ebase,
                                          CheckReport* rep) {
    CheckReport local;
    CheckReport& r = rep ? *rep : local;
    const Algebroid& al = m.al;
    const FiniteAlgebra& A = al.d.A;
    std::size_t n = al.n(), nb = al.d.B.dim(), nc = al.d.C.dim();
    if (!r.add("algebra has a unit", A.unit().has_value())) return std::nullopt;
    const Vec& one = *A.unit();
    auto unitB = al.d.B.alg.find_unit();
    auto unitC = al.d.C.alg.find_unit();
    if (!r.add("bases are unital", unitB.has_value() && unitC.has_value()))
        return std::nullopt;
    if (!r.add("counits are available", al.epsB.has_value() && al.epsC.has_value()))
        return std::nullopt;

    // Solve the separability idempotent from its linear conditions: leg
    // transport through the twists plus the two weight normalizations.
    std::size_t ne = nb * nc;
    std::vector<Vec> rows;
    Vec rhs;
    auto push = [&](const Vec& row, const GRat& v) {
        rows.push_back(row);
        rhs.push_back(v);
    };
    for (std::size_t y = 0; y < nc; ++y) {
        Mat rm = al.d.C.alg.rmul(basis_vec(nc, y));
        Mat bm = al.d.B.alg.rmul(al.d.tC.col(y));
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t lp = 0; lp < nc; ++lp) {
                Vec row(ne);
                for (std::size_t l = 0; l < nc; ++l) row[k * nc + l] += rm.at(lp, l);
                for (std::size_t kk = 0; kk < nb; ++kk) row[kk * nc + lp] -= bm.at(k, kk);
                push(row, GRat(0));
            }
    }
    for (std::size_t x = 0; x < nb; ++x) {
        Mat lb = al.d.B.alg.lmul(basis_vec(nb, x));
        Mat lc = al.d.C.alg.lmul(al.d.tB.col(x));
        for (std::size_t kp = 0; kp < nb; ++kp)
            for (std::size_t lp = 0; lp < nc; ++lp) {
                Vec row(ne);
                for (std::size_t k = 0; k < nb; ++k) row[k * nc + lp] += lb.at(kp, k);
                for (std::size_t l = 0; l < nc; ++l) row[kp * nc + l] -= lc.at(lp, l);
                push(row, GRat(0));
            }
    }
    const Functional& muB = m.muB;
    const Functional& muC = m.muC;
    for (std::size_t v = 0; v < nc; ++v) {
        Vec row(ne);
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t l = 0; l < nc; ++l) row[k * nc + l] = muB[k] * GRat(l == v);
        push(row, (*unitC)[v]);
    }
    for (std::size_t u = 0; u < nb; ++u) {
        Vec row(ne);
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t l = 0; l < nc; ++l) row[k * nc + l] = muC[l] * GRat(k == u);
        push(row, (*unitB)[u]);
    }
    auto esol = solve_unique(Mat::from_rows(rows), rhs);
    if (!r.add("separability idempotent solves uniquely", esol.has_value()))
        return std::nullopt;
    Mat E(nb, nc);
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nc; ++l) E.at(k, l) = (*esol)[k * nc + l];
    if (Ebase) *Ebase = E;
    CheckReport frep = frobenius_validate(al.d.B, al.d.C, al.d.tB, al.d.tC,
                                          muB, muC, E, n);
    r.merge(frep);
    if (!frep.ok()) return std::nullopt;

    // The idempotent as an element and its two multiplications on the
    // tensor square.
    std::vector<Vec> bA(nb), cA(nc);
    for (std::size_t k = 0; k < nb; ++k) bA[k] = al.d.B.img[k].lam * one;
    for (std::size_t l = 0; l < nc; ++l) cA[l] = al.d.C.img[l].lam * one;
    Vec eA(n * n);
    Mat le(n * n, n * n), re(n * n, n * n);
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nc; ++l) {
            GRat c = E.at(k, l);
            if (c == GRat(0)) continue;
            eA = vec_add(eA, vec_scaled(vec_kron(bA[k], cA[l]), c));
            le = le + A.lmul(bA[k]).kron(A.lmul(cA[l])).scaled(c);
            re = re + A.rmul(bA[k]).kron(A.rmul(cA[l])).scaled(c);
        }

    r.add("section followed by projection is the identity on the left square",
          al.Q1.q.proj * le * al.Q1.q.sect == Mat::identity(al.Q1.q.dim()));
    r.add("section followed by projection is the identity on the right square",
          al.Q2.q.proj * re * al.Q2.q.sect == Mat::identity(al.Q2.q.dim()));

    WMHASpec w;
    w.A = A;
    w.E = eA;
    w.dr.resize(n * n);
    w.dl.resize(n * n);
    w.ld.resize(n * n);
    w.rd.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            w.dr[a * n + b] = le * al.d.dcr_at(a, b);
            w.dl[a * n + b] = le * al.d.dcl_at(a, b);
            w.ld[a * n + b] = re * al.d.dbl_at(a, b);
            w.rd[a * n + b] = re * al.d.dbr_at(a, b);
        }

    w.eps = Functional(n);
    Functional epsb(n);
    for (std::size_t a = 0; a < n; ++a) {
        w.eps[a] = dot(muC, al.epsC->col(a));
        epsb[a] = dot(muB, al.epsB->col(a));
    }
    r.add("the two weighted counits agree", w.eps == epsb);
    w.phi = m.phi;
    w.psi = m.psi;
    return w;
}

}  // namespace mhad

#include "mhad/algebroid.hpp"

#include <cassert>
#include <sstream>

namespace mhad {

namespace {

std::string itos(std::size_t k) { return std::to_string(k); }

Mat conj_mat(const Mat& m) {
    Mat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).conj();
    return r;
}

Vec conj_vec(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].conj();
    return r;
}

// Flip u (x) v -> v (x) u on A (x) A.
Mat flip_mat(std::size_t n) {
    Mat f(n * n, n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) f.at(tidx(v, u, n), tidx(u, v, n)) = GRat(1);
    return f;
}

// (op (x) I) w and (I (x) op) w for a vector w in A (x) A coordinates,
// exploiting sparsity of w.
Vec apply_first(const Mat& op, const Vec& w, std::size_t n) {
    Vec r(w.size());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const GRat& c = w[tidx(p, q, n)];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) {
                const GRat& o = op.at(i, p);
                if (!o.is_zero()) r[tidx(i, q, n)] += o * c;
            }
        }
    return r;
}

Vec apply_second(const Mat& op, const Vec& w, std::size_t n) {
    Vec r(w.size());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const GRat& c = w[tidx(p, q, n)];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const GRat& o = op.at(j, q);
                if (!o.is_zero()) r[tidx(p, j, n)] += o * c;
            }
        }
    return r;
}

// Left module faithfulness: x.a = 0 for all x forces a = 0.
bool action_faithful(const ModuleAction& m) {
    if (m.act.empty()) return false;
    Mat v = m.act[0];
    for (std::size_t k = 1; k < m.act.size(); ++k) v = v.vstack(m.act[k]);
    return nullspace(v).empty();
}

bool anti_homomorphism(const FiniteAlgebra& src, const FiniteAlgebra& dst, const Mat& t) {
    std::size_t m = src.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec lhs = t * src.mul(basis_vec(m, i), basis_vec(m, j));
            Vec rhs = dst.mul(t.col(j), t.col(i));
            if (lhs != rhs) return false;
        }
    return true;
}

// Rank certificate that a family of induced operators on a quotient has
// trivial joint kernel.
bool joint_kernel_trivial(const std::vector<Mat>& ops, std::size_t dim) {
    if (dim == 0) return true;
    if (ops.empty()) return false;
    Mat v = ops[0];
    for (std::size_t k = 1; k < ops.size(); ++k) v = v.vstack(ops[k]);
    return rank(v) == dim;
}

struct CoassocTables {
    // lhs = sum over (p,q) of outerL[b][c] of expandL[p][a] (x) e_q,
    // rhs = sum over (p,q) of outerR[b][a] of e_p (x) expandR[q][c].
    const std::vector<Vec>* outerL;
    const std::vector<Vec>* expandL;
    const std::vector<Vec>* outerR;
    const std::vector<Vec>* expandR;
};

std::size_t t3(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
    return (i * n + j) * n + k;
}

bool coassoc_identity(std::size_t n, const CoassocTables& t, const QuotientSpace& T,
                      std::string* witness) {
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) {
                Vec diff(n * n * n);
                const Vec& wl = (*t.outerL)[b * n + c];
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const GRat& w = wl[tidx(p, q, n)];
                        if (w.is_zero()) continue;
                        const Vec& x = (*t.expandL)[p * n + a];
                        for (std::size_t i = 0; i < n; ++i)
                            for (std::size_t j = 0; j < n; ++j)
                                if (!x[tidx(i, j, n)].is_zero())
                                    diff[t3(i, j, q, n)] += w * x[tidx(i, j, n)];
                    }
                const Vec& wr = (*t.outerR)[b * n + a];
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const GRat& w = wr[tidx(p, q, n)];
                        if (w.is_zero()) continue;
                        const Vec& y = (*t.expandR)[q * n + c];
                        for (std::size_t j = 0; j < n; ++j)
                            for (std::size_t k = 0; k < n; ++k)
                                if (!y[tidx(j, k, n)].is_zero())
                                    diff[t3(p, j, k, n)] -= w * y[tidx(j, k, n)];
                    }
                if (!vec_is_zero(T.project(diff))) {
                    if (witness)
                        *witness = "witness triple (a,b,c) = (" + itos(a) + "," +
                                   itos(b) + "," + itos(c) + ")";
                    return false;
                }
            }
    return true;
}

}  // namespace

std::vector<Mat> module_hom_space(const ModuleAction& action, const std::vector<Mat>& reg) {
    std::size_t n = action.mod_dim();
    std::size_t m = reg.empty() ? 0 : reg[0].rows();
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < action.base_dim(); ++k) {
        const Mat& A = action.act[k];
        const Mat& R = reg[k];
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t j = 0; j < n; ++j) {
                Vec row(m * n);
                for (std::size_t q = 0; q < n; ++q) row[p * n + q] += A.at(q, j);
                for (std::size_t q = 0; q < m; ++q) row[q * n + j] -= R.at(p, q);
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
    }
    std::vector<Vec> basis;
    if (rows.empty()) {
        for (std::size_t u = 0; u < m * n; ++u) basis.push_back(basis_vec(m * n, u));
    } else {
        basis = nullspace(Mat::from_rows(rows));
    }
    std::vector<Mat> homs;
    for (const auto& x : basis) {
        Mat h(m, n);
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t j = 0; j < n; ++j) h.at(p, j) = x[p * n + j];
        homs.push_back(std::move(h));
    }
    return homs;
}

Mat on_legs3(const Mat& op, std::size_t leg_a, std::size_t leg_b, std::size_t n) {
    assert(leg_a < leg_b && leg_b < 3);
    std::size_t free_leg = 3 - leg_a - leg_b;
    Mat m(n * n * n, n * n * n);
    for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c) {
            const GRat& v = op.at(r, c);
            if (v.is_zero()) continue;
            std::size_t ca = c / n, cb = c % n, ra = r / n, rb = r % n;
            for (std::size_t f = 0; f < n; ++f) {
                std::size_t in[3], out[3];
                in[leg_a] = ca; in[leg_b] = cb; in[free_leg] = f;
                out[leg_a] = ra; out[leg_b] = rb; out[free_leg] = f;
                m.at(t3(out[0], out[1], out[2], n), t3(in[0], in[1], in[2], n)) = v;
            }
        }
    return m;
}

std::optional<Mat> Algebroid::comultC_endo(const Vec& a) const {
    std::size_t nn = n();
    std::vector<Vec> rep(nn, Vec(nn * nn));
    for (std::size_t ap = 0; ap < nn; ++ap) {
        if (a[ap].is_zero()) continue;
        for (std::size_t v = 0; v < nn; ++v)
            rep[v] = vec_add(rep[v], vec_scaled(d.dcr_at(ap, v), a[ap]));
    }
    Mat e(nn * nn, nn * nn);
    for (std::size_t v = 0; v < nn; ++v)
        for (std::size_t pp = 0; pp < nn; ++pp)
            for (std::size_t q = 0; q < nn; ++q) {
                const GRat& c = rep[v][tidx(pp, q, nn)];
                if (c.is_zero()) continue;
                for (std::size_t u = 0; u < nn; ++u) {
                    const Mat& ru = d.A.rmul_basis(u);
                    for (std::size_t p = 0; p < nn; ++p)
                        if (!ru.at(p, pp).is_zero())
                            e.at(tidx(p, q, nn), tidx(u, v, nn)) += ru.at(p, pp) * c;
                }
            }
    return descend(Q1.q, Q1.q, e);
}

std::optional<Mat> Algebroid::comultB_endo(const Vec& a) const {
    std::size_t nn = n();
    std::vector<Vec> rep(nn, Vec(nn * nn));
    for (std::size_t ap = 0; ap < nn; ++ap) {
        if (a[ap].is_zero()) continue;
        for (std::size_t u = 0; u < nn; ++u)
            rep[u] = vec_add(rep[u], vec_scaled(d.dbl_at(ap, u), a[ap]));
    }
    Mat e(nn * nn, nn * nn);
    for (std::size_t u = 0; u < nn; ++u)
        for (std::size_t p = 0; p < nn; ++p)
            for (std::size_t qq = 0; qq < nn; ++qq) {
                const GRat& c = rep[u][tidx(p, qq, nn)];
                if (c.is_zero()) continue;
                for (std::size_t v = 0; v < nn; ++v) {
                    const Mat& lv = d.A.lmul_basis(v);
                    for (std::size_t q = 0; q < nn; ++q)
                        if (!lv.at(q, qq).is_zero())
                            e.at(tidx(p, q, nn), tidx(u, v, nn)) += lv.at(q, qq) * c;
                }
            }
    return descend(Q2.q, Q2.q, e);
}

Algebroid build_algebroid(const AlgebroidData& d) {
    Algebroid al;
    al.d = d;
    std::size_t nn = d.A.dim();
    al.mods = build_module_structures(d.B, d.C, d.tB, d.tC);
    al.tBinv = inverse(d.tB);
    al.tCinv = inverse(d.tC);

    al.Q1 = balanced_tensor(al.mods.Cs_r, al.mods.C_l);
    al.Q2 = balanced_tensor(al.mods.B_r, al.mods.Bs_l);
    al.Q3 = balanced_tensor(al.mods.Bs_r, al.mods.Bs_l);
    al.Q4 = balanced_tensor(al.mods.B_r, al.mods.B_l);
    al.Q5 = balanced_tensor(al.mods.C_r, al.mods.C_l);
    al.Q6 = balanced_tensor(al.mods.Cs_r, al.mods.Cs_l);

    auto pack = [nn](const std::vector<Vec>& tab) {
        Mat m(nn * nn, nn * nn);
        for (std::size_t a = 0; a < nn; ++a)
            for (std::size_t b = 0; b < nn; ++b) {
                const Vec& w = tab[a * nn + b];
                for (std::size_t k = 0; k < w.size(); ++k)
                    if (!w[k].is_zero()) m.at(k, tidx(a, b, nn)) = w[k];
            }
        return m;
    };
    al.Mdcr = pack(d.dcr);
    al.Mdcl = pack(d.dcl);
    al.Mdbl = pack(d.dbl);
    al.Mdbr = pack(d.dbr);

    Mat flip = flip_mat(nn);
    // Column (a, b) of the ambient canonical maps:
    //   Tl: dcl[b][a], Tr: dcr[a][b], lT: dbl[b][a], rT: dbr[a][b].
    al.Tl = descend(al.Q3.q, al.Q1.q, al.Mdcl * flip);
    al.Tr = descend(al.Q4.q, al.Q1.q, al.Mdcr);
    al.lT = descend(al.Q5.q, al.Q2.q, al.Mdbl * flip);
    al.rT = descend(al.Q6.q, al.Q2.q, al.Mdbr);

    auto try_invert = [](const std::optional<Mat>& m) -> std::optional<Mat> {
        if (!m || m->rows() != m->cols()) return std::nullopt;
        return inverse(*m);
    };
    al.Tl_inv = try_invert(al.Tl);
    al.Tr_inv = try_invert(al.Tr);
    al.lT_inv = try_invert(al.lT);
    al.rT_inv = try_invert(al.rT);
    return al;
}

CheckReport validate_bialgebroid(const Algebroid& al) {
    CheckReport rep;
    const AlgebroidData& d = al.d;
    std::size_t nn = al.n();

    std::string w;
    rep.add("algebra associative", d.A.is_associative(&w), w);
    rep.add("algebra nondegenerate", d.A.is_nondegenerate());
    rep.add("algebra idempotent", d.A.is_idempotent());
    {
        AlgebraReport br = validate_algebra(d.B.alg);
        rep.add("base B algebra", br.associative && br.nondegenerate && br.idempotent,
                br.witness);
        AlgebraReport cr = validate_algebra(d.C.alg);
        rep.add("base C algebra", cr.associative && cr.nondegenerate && cr.idempotent,
                cr.witness);
    }
    {
        bool multB = true, multC = true;
        for (const auto& m : d.B.img) multB = multB && is_multiplier(d.A, m);
        for (const auto& m : d.C.img) multC = multC && is_multiplier(d.A, m);
        rep.add("base B lands in multipliers", multB);
        rep.add("base C lands in multipliers", multC);
    }
    rep.add("base B embedding homomorphism", d.B.is_homomorphism());
    rep.add("base C embedding homomorphism", d.C.is_homomorphism());
    {
        bool comm = true;
        for (const auto& x : d.B.img)
            for (const auto& y : d.C.img)
                if (x * y != y * x) comm = false;
        rep.add("bases commute", comm);
    }
    rep.add("twist B to C anti-isomorphism",
            al.tBinv.has_value() && anti_homomorphism(d.B.alg, d.C.alg, d.tB));
    rep.add("twist C to B anti-isomorphism",
            al.tCinv.has_value() && anti_homomorphism(d.C.alg, d.B.alg, d.tC));

    // Condition (1): the four plain module structures are associative,
    // idempotent and faithful.
    struct { const char* name; const ModuleAction* m; const FiniteAlgebra* base; } plains[] = {
        {"left B module on A", &al.mods.B_l, &d.B.alg},
        {"right B module on A", &al.mods.B_r, &d.B.alg},
        {"left C module on A", &al.mods.C_l, &d.C.alg},
        {"right C module on A", &al.mods.C_r, &d.C.alg},
    };
    for (const auto& p : plains) {
        rep.add(std::string(p.name) + " idempotent", module_action_ok(*p.base, *p.m));
        rep.add(std::string(p.name) + " nondegenerate", action_faithful(*p.m));
    }

    // Condition (2): the two target tensor squares are nondegenerate over
    // the one-sided multiplications by A.
    {
        auto induced = [&](const QuotientSpace& q, bool first_leg, bool left_mult) {
            std::vector<Mat> ops;
            for (std::size_t j = 0; j < nn; ++j) {
                const Mat& op = left_mult ? d.A.lmul_basis(j) : d.A.rmul_basis(j);
                Mat amb = first_leg ? on_first_leg(op, nn) : on_second_leg(op, nn);
                ops.push_back(q.proj * amb * q.sect);
            }
            return ops;
        };
        rep.add("left square nondegenerate over second-leg A",
                joint_kernel_trivial(induced(al.Q1.q, false, false), al.Q1.q.dim()));
        rep.add("left square nondegenerate over first-leg A",
                joint_kernel_trivial(induced(al.Q1.q, true, false), al.Q1.q.dim()));
        rep.add("right square nondegenerate over second-leg A",
                joint_kernel_trivial(induced(al.Q2.q, false, true), al.Q2.q.dim()));
        rep.add("right square nondegenerate over first-leg A",
                joint_kernel_trivial(induced(al.Q2.q, true, true), al.Q2.q.dim()));
    }

    // Consistency of the two representatives of each comultiplication:
    // filling the free leg must give the same class.
    {
        bool okC = true, okB = true;
        std::string wc, wb;
        for (std::size_t a = 0; a < nn && (okC || okB); ++a)
            for (std::size_t b = 0; b < nn && (okC || okB); ++b)
                for (std::size_t c = 0; c < nn && (okC || okB); ++c) {
                    if (okC) {
                        Vec lhs = apply_first(d.A.rmul_basis(b), d.dcr_at(a, c), nn);
                        Vec rhs = apply_second(d.A.rmul_basis(c), d.dcl_at(a, b), nn);
                        if (!vec_is_zero(al.Q1.q.project(vec_sub(lhs, rhs)))) {
                            okC = false;
                            wc = "witness (a,b,c) = (" + itos(a) + "," + itos(b) + "," + itos(c) + ")";
                        }
                    }
                    if (okB) {
                        Vec lhs = apply_second(d.A.lmul_basis(c), d.dbl_at(a, b), nn);
                        Vec rhs = apply_first(d.A.lmul_basis(b), d.dbr_at(a, c), nn);
                        if (!vec_is_zero(al.Q2.q.project(vec_sub(lhs, rhs)))) {
                            okB = false;
                            wb = "witness (a,b,c) = (" + itos(a) + "," + itos(b) + "," + itos(c) + ")";
                        }
                    }
                }
        rep.add("left comult representatives consistent", okC, wc);
        rep.add("right comult representatives consistent", okB, wb);
    }

    // Condition (3): bilinearity over both bases, checked on all four
    // representative tables modulo the target square.
    {
        const Mat& P1 = al.Q1.q.proj;
        const Mat& P2 = al.Q2.q.proj;
        auto on1 = [nn](const Mat& op) { return on_first_leg(op, nn); };
        auto on2 = [nn](const Mat& op) { return on_second_leg(op, nn); };
        auto eq = [](const Mat& P, const Mat& x, const Mat& y) { return P * x == P * y; };
        bool okC = true, okB = true;
        std::string wc, wb;
        auto failC = [&](const std::string& s) { if (okC) { okC = false; wc = s; } };
        auto failB = [&](const std::string& s) { if (okB) { okB = false; wb = s; } };
        for (std::size_t k = 0; k < d.B.dim(); ++k) {
            Mat lx = d.B.img[k].lam, rx = d.B.img[k].rho;
            if (!eq(P1, al.Mdcr * on1(lx), on2(lx) * al.Mdcr)) failC("B left, basis " + itos(k));
            if (!eq(P1, al.Mdcr * on1(rx), al.Mdcr * on2(lx))) failC("B right, basis " + itos(k));
            if (!eq(P1, al.Mdcl * on1(lx), on2(lx) * al.Mdcl)) failC("B left alt, basis " + itos(k));
            if (!eq(P1, al.Mdcl * on1(rx), on2(rx) * al.Mdcl)) failC("B right alt, basis " + itos(k));
            if (!eq(P2, al.Mdbl * on1(lx), on2(lx) * al.Mdbl)) failB("B left, basis " + itos(k));
            if (!eq(P2, al.Mdbl * on1(rx), on2(rx) * al.Mdbl)) failB("B right, basis " + itos(k));
            if (!eq(P2, al.Mdbr * on1(lx), al.Mdbr * on2(rx))) failB("B left alt, basis " + itos(k));
            if (!eq(P2, al.Mdbr * on1(rx), on2(rx) * al.Mdbr)) failB("B right alt, basis " + itos(k));
        }
        for (std::size_t k = 0; k < d.C.dim(); ++k) {
            Mat ly = d.C.img[k].lam, ry = d.C.img[k].rho;
            if (!eq(P1, al.Mdcr * on1(ly), on1(ly) * al.Mdcr)) failC("C left, basis " + itos(k));
            if (!eq(P1, al.Mdcr * on1(ry), on1(ry) * al.Mdcr)) failC("C right, basis " + itos(k));
            if (!eq(P1, al.Mdcl * on1(ly), on1(ly) * al.Mdcl)) failC("C left alt, basis " + itos(k));
            if (!eq(P1, al.Mdcl * on1(ry), al.Mdcl * on2(ly))) failC("C right alt, basis " + itos(k));
            if (!eq(P2, al.Mdbl * on1(ly), al.Mdbl * on2(ry))) failB("C left, basis " + itos(k));
            if (!eq(P2, al.Mdbl * on1(ry), on1(ry) * al.Mdbl)) failB("C right, basis " + itos(k));
            if (!eq(P2, al.Mdbr * on1(ly), on1(ly) * al.Mdbr)) failB("C left alt, basis " + itos(k));
            if (!eq(P2, al.Mdbr * on1(ry), on1(ry) * al.Mdbr)) failB("C right alt, basis " + itos(k));
        }
        rep.add("left comult bilinear", okC, wc);
        rep.add("right comult bilinear", okB, wb);
    }

    rep.add("left canonical map descends", al.Tl.has_value());
    rep.add("right canonical map descends", al.Tr.has_value());
    rep.add("left mixed canonical map descends", al.lT.has_value());
    rep.add("right mixed canonical map descends", al.rT.has_value());

    // Multiplicativity of both comultiplications, through their actions on
    // the target squares.
    {
        std::vector<Mat> ec(nn), eb(nn);
        bool desc = true;
        for (std::size_t i = 0; i < nn && desc; ++i) {
            auto c = al.comultC_endo(basis_vec(nn, i));
            auto b = al.comultB_endo(basis_vec(nn, i));
            if (!c || !b) { desc = false; break; }
            ec[i] = *c;
            eb[i] = *b;
        }
        rep.add("comult endomorphisms descend", desc);
        bool mc = desc, mb = desc;
        std::string wc, wb;
        for (std::size_t i = 0; i < nn && desc; ++i)
            for (std::size_t j = 0; j < nn; ++j) {
                Vec prod = d.A.mul(basis_vec(nn, i), basis_vec(nn, j));
                Mat sc(al.Q1.q.dim(), al.Q1.q.dim());
                Mat sb(al.Q2.q.dim(), al.Q2.q.dim());
                for (std::size_t k = 0; k < nn; ++k)
                    if (!prod[k].is_zero()) {
                        sc = sc + ec[k].scaled(prod[k]);
                        sb = sb + eb[k].scaled(prod[k]);
                    }
                if (mc && sc != ec[i] * ec[j]) {
                    mc = false;
                    wc = "witness pair (" + itos(i) + "," + itos(j) + ")";
                }
                // The right comultiplication acts from the right, so the
                // composite of a product applies the first factor first.
                if (mb && sb != eb[j] * eb[i]) {
                    mb = false;
                    wb = "witness pair (" + itos(i) + "," + itos(j) + ")";
                }
            }
        rep.add("left comult multiplicative", mc, wc);
        rep.add("right comult multiplicative", mb, wb);
    }

    // Condition (4): the four coassociativity identities on triple tensors.
    {
        QuotientSpace T1 = triple_quotient(al.Q1, al.Q1);
        QuotientSpace T2 = triple_quotient(al.Q2, al.Q2);
        QuotientSpace TM1 = triple_quotient(al.Q1, al.Q2);
        QuotientSpace TM2 = triple_quotient(al.Q2, al.Q1);
        std::string w1, w2, w3, w4;
        rep.add("coassociativity left",
                coassoc_identity(nn, {&d.dcr, &d.dcl, &d.dcl, &d.dcr}, T1, &w1), w1);
        rep.add("coassociativity right",
                coassoc_identity(nn, {&d.dbr, &d.dbl, &d.dbl, &d.dbr}, T2, &w2), w2);
        rep.add("coassociativity mixed one",
                coassoc_identity(nn, {&d.dbr, &d.dcl, &d.dcl, &d.dbr}, TM1, &w3), w3);
        rep.add("coassociativity mixed two",
                coassoc_identity(nn, {&d.dcr, &d.dbl, &d.dbl, &d.dcr}, TM2, &w4), w4);
    }
    return rep;
}

namespace {

// Assemble and solve the linear system for a counit E : A -> base given
// its two module-typing conditions and two slice identities.
struct CounitSpec {
    std::size_t base_dim;
    // Typing: E . a_op[k] = b_op[k] . E for the listed pairs.
    std::vector<std::pair<Mat, Mat>> typing;
    // Slices: for table[a][b] with sum over (u, v), the base value is taken
    // at leg u (slice_on_first = true) or leg v, acted through act[k] on
    // the other leg, and equals product_target(a, b).
    const std::vector<Vec>* table1;
    const std::vector<Mat>* act1;
    bool first1;  // base value from the first leg
    const std::vector<Vec>* table2;
    const std::vector<Mat>* act2;
    bool first2;
    bool swap_product;  // rhs = e_b e_a instead of e_a e_b
};

std::optional<Mat> solve_counit(const FiniteAlgebra& A, const CounitSpec& spec,
                                bool* unique) {
    std::size_t n = A.dim(), m = spec.base_dim;
    std::vector<Vec> rows;
    Vec rhs;
    for (const auto& [aop, bop] : spec.typing)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec row(m * n);
                for (std::size_t u = 0; u < n; ++u) row[i * n + u] += aop.at(u, j);
                for (std::size_t p = 0; p < m; ++p) row[p * n + j] -= bop.at(i, p);
                if (!vec_is_zero(row)) {
                    rows.push_back(std::move(row));
                    rhs.push_back(GRat());
                }
            }
    auto add_slice = [&](const std::vector<Vec>& table, const std::vector<Mat>& act,
                         bool first) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Vec& w = table[a * n + b];
                Vec prod = spec.swap_product ? A.mul(basis_vec(n, b), basis_vec(n, a))
                                             : A.mul(basis_vec(n, a), basis_vec(n, b));
                for (std::size_t i = 0; i < n; ++i) {
                    Vec row(m * n);
                    for (std::size_t u = 0; u < n; ++u)
                        for (std::size_t v = 0; v < n; ++v) {
                            const GRat& c = w[tidx(u, v, n)];
                            if (c.is_zero()) continue;
                            std::size_t sliced = first ? u : v;
                            std::size_t other = first ? v : u;
                            for (std::size_t k = 0; k < m; ++k) {
                                const GRat& s = act[k].at(i, other);
                                if (!s.is_zero()) row[k * n + sliced] += c * s;
                            }
                        }
                    rows.push_back(std::move(row));
                    rhs.push_back(prod[i]);
                }
            }
    };
    add_slice(*spec.table1, *spec.act1, spec.first1);
    add_slice(*spec.table2, *spec.act2, spec.first2);
    Mat sys = Mat::from_rows(rows);
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    if (unique) *unique = nullspace(sys).empty();
    Mat e(m, n);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t j = 0; j < n; ++j) e.at(p, j) = (*sol)[p * n + j];
    return e;
}

}  // namespace

bool compute_counits(Algebroid& al, CheckReport* rep) {
    const AlgebroidData& d = al.d;
    // Left counit: typed C-linear for y a and a tC(y), with
    //   slice-first of DeltaC(a)(1 (x) b), C acting on the second leg by
    //   left multiplication, equal to ab;
    //   slice-second of DeltaC(a)(b (x) 1), C acting on the first leg
    //   through tC by left multiplication, equal to ab.
    CounitSpec lc;
    lc.base_dim = d.C.dim();
    for (std::size_t k = 0; k < d.C.dim(); ++k) {
        lc.typing.push_back({d.C.img[k].lam, d.C.alg.lmul_basis(k)});
        lc.typing.push_back({al.mods.Cs_r.act[k], d.C.alg.rmul_basis(k)});
    }
    lc.table1 = &d.dcr; lc.act1 = &al.mods.C_l.act; lc.first1 = true;
    lc.table2 = &d.dcl; lc.act2 = &al.mods.Cs_r.act; lc.first2 = false;
    lc.swap_product = false;
    bool uc = false;
    al.epsC = solve_counit(d.A, lc, &uc);

    // Right counit: typed B-linear for a x and a tB(x), with the analogous
    // slices of the right comultiplication, equal to ba.
    CounitSpec rc;
    rc.base_dim = d.B.dim();
    for (std::size_t k = 0; k < d.B.dim(); ++k) {
        rc.typing.push_back({d.B.img[k].rho, d.B.alg.rmul_basis(k)});
        rc.typing.push_back({al.mods.Bs_l.act[k], d.B.alg.lmul_basis(k)});
    }
    rc.table1 = &d.dbr; rc.act1 = &al.mods.Bs_l.act; rc.first1 = true;
    rc.table2 = &d.dbl; rc.act2 = &al.mods.B_r.act; rc.first2 = false;
    rc.swap_product = true;
    bool ub = false;
    al.epsB = solve_counit(d.A, rc, &ub);

    if (rep) {
        rep->add("left counit exists", al.epsC.has_value());
        rep->add("left counit unique", al.epsC.has_value() && uc);
        rep->add("right counit exists", al.epsB.has_value());
        rep->add("right counit unique", al.epsB.has_value() && ub);
    }
    return al.epsC.has_value() && al.epsB.has_value();
}

bool compute_antipode(Algebroid& al, CheckReport* rep) {
    const AlgebroidData& d = al.d;
    std::size_t n = al.n();
    if (!al.epsB || !al.epsC) {
        if (!compute_counits(al)) {
            if (rep) rep->add("antipode exists", false, "counits missing");
            return false;
        }
    }
    // Solve sum S(u) v = epsB(a) . b over the representative of
    // DeltaC(a)(1 (x) b), for all a, b.
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Vec& w = d.dcr_at(a, b);
            Vec target(n);
            for (std::size_t k = 0; k < d.B.dim(); ++k)
                if (!al.epsB->at(k, a).is_zero())
                    target = vec_add(target,
                                     vec_scaled(Vec(d.B.img[k].lam.col(b)), al.epsB->at(k, a)));
            for (std::size_t i = 0; i < n; ++i) {
                Vec row(n * n);
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        const GRat& c = w[tidx(u, v, n)];
                        if (c.is_zero()) continue;
                        const Mat& rv = d.A.rmul_basis(v);
                        for (std::size_t p = 0; p < n; ++p)
                            if (!rv.at(i, p).is_zero()) row[p * n + u] += c * rv.at(i, p);
                    }
                rows.push_back(std::move(row));
                rhs.push_back(target[i]);
            }
        }
    // The slice u (x) v -> S(u) v must be balanced over the relations of
    // the target square; these rows make the solution unique.
    for (std::size_t r = 0; r < al.Q1.q.relations.dim(); ++r) {
        Vec rel = al.Q1.q.relations.basis_vec(r);
        for (std::size_t i = 0; i < n; ++i) {
            Vec row(n * n);
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    const GRat& c = rel[tidx(u, v, n)];
                    if (c.is_zero()) continue;
                    const Mat& rv = d.A.rmul_basis(v);
                    for (std::size_t p = 0; p < n; ++p)
                        if (!rv.at(i, p).is_zero()) row[p * n + u] += c * rv.at(i, p);
                }
            if (!vec_is_zero(row)) {
                rows.push_back(std::move(row));
                rhs.push_back(GRat());
            }
        }
    }
    Mat sys = Mat::from_rows(rows);
    auto sol = solve(sys, rhs);
    bool unique = sol && nullspace(sys).empty();
    if (rep) {
        rep->add("antipode exists", sol.has_value(), "defining system unsolvable");
        rep->add("antipode unique", sol.has_value() && unique);
    }
    if (!sol) return false;
    Mat s(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t u = 0; u < n; ++u) s.at(p, u) = (*sol)[p * n + u];
    al.S = s;
    al.Sinv = inverse(s);

    if (rep) {
        // Companion identity: sum u S(v) over (a (x) 1) DeltaB(b) equals
        // a . epsC(b) by right multiplication.
        bool comp = true;
        std::string wit;
        for (std::size_t a = 0; a < n && comp; ++a)
            for (std::size_t b = 0; b < n && comp; ++b) {
                const Vec& w = al.d.dbl_at(b, a);
                Vec lhs(n);
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        const GRat& c = w[tidx(u, v, n)];
                        if (c.is_zero()) continue;
                        lhs = vec_add(lhs, vec_scaled(d.A.mul(basis_vec(n, u), s.col(v)), c));
                    }
                Vec rv(n);
                for (std::size_t k = 0; k < d.C.dim(); ++k)
                    if (!al.epsC->at(k, b).is_zero())
                        rv = vec_add(rv, vec_scaled(Vec(d.C.img[k].rho.col(a)), al.epsC->at(k, b)));
                if (lhs != rv) {
                    comp = false;
                    wit = "witness pair (" + itos(a) + "," + itos(b) + ")";
                }
            }
        rep->add("antipode companion identity", comp, wit);

        bool anti = true;
        std::string aw;
        for (std::size_t i = 0; i < n && anti; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec lhs = s * d.A.mul(basis_vec(n, i), basis_vec(n, j));
                Vec rhs2 = d.A.mul(s.col(j), s.col(i));
                if (lhs != rhs2) {
                    anti = false;
                    aw = "witness pair (" + itos(i) + "," + itos(j) + ")";
                    break;
                }
            }
        rep->add("antipode antimultiplicative", anti, aw);
        rep->add("antipode bijective", al.Sinv.has_value());

        bool restC = al.Sinv.has_value() && al.tBinv.has_value();
        bool restB = al.Sinv.has_value() && al.tCinv.has_value();
        if (restC)
            for (std::size_t k = 0; k < d.C.dim(); ++k) {
                Vec img = al.tBinv->col(k);  // in B coordinates
                if (s * d.C.img[k].rho * *al.Sinv != d.B.lmul_on_A(img) ||
                    s * d.C.img[k].lam * *al.Sinv != d.B.rmul_on_A(img))
                    restC = false;
            }
        if (restB)
            for (std::size_t k = 0; k < d.B.dim(); ++k) {
                Vec img = al.tCinv->col(k);  // in C coordinates
                if (s * d.B.img[k].rho * *al.Sinv != d.C.lmul_on_A(img) ||
                    s * d.B.img[k].lam * *al.Sinv != d.C.rmul_on_A(img))
                    restB = false;
            }
        rep->add("antipode restricts to inverse twist on C", restC);
        rep->add("antipode restricts to inverse twist on B", restB);
    }
    return true;
}

CheckReport check_H1_H2(Algebroid& al) {
    CheckReport rep;
    const AlgebroidData& d = al.d;
    std::size_t nn = al.n();

    bool bij = al.Tl_inv && al.Tr_inv && al.lT_inv && al.rT_inv;
    std::string which;
    if (!al.Tl_inv) which = "left canonical map";
    else if (!al.Tr_inv) which = "right canonical map";
    else if (!al.lT_inv) which = "left mixed canonical map";
    else if (!al.rT_inv) which = "right mixed canonical map";
    rep.add("canonical maps bijective", bij, which + " not bijective");

    // Span conditions on functional values of the four one-sided module
    // structures.
    auto value_span = [&](const ModuleAction& act, const std::vector<Mat>& reg) {
        auto homs = module_hom_space(act, reg);
        std::size_t m = reg.empty() ? 0 : reg[0].rows();
        std::vector<Vec> vals;
        for (const auto& h : homs)
            for (std::size_t a = 0; a < nn; ++a) vals.push_back(h.col(a));
        return Subspace::span(m, vals);
    };
    auto full_product = [&](const BaseEmbedding& base, const Subspace& sub,
                            const std::optional<Mat>& t, bool left,
                            const BaseEmbedding& timg) {
        std::vector<Vec> gens;
        for (std::size_t g = 0; g < sub.dim(); ++g) {
            Vec x = sub.basis_vec(g);
            Vec y = t ? Vec(*t * x) : x;
            const BaseEmbedding& e = t ? timg : base;
            Mat op = left ? e.lmul_on_A(y) : e.rmul_on_A(y);
            for (std::size_t a = 0; a < nn; ++a) gens.push_back(op.col(a));
        }
        return Subspace::span(nn, gens).dim() == nn;
    };
    {
        std::vector<Mat> lB(d.B.dim()), rB(d.B.dim()), lC(d.C.dim()), rC(d.C.dim());
        for (std::size_t k = 0; k < d.B.dim(); ++k) {
            lB[k] = d.B.alg.lmul_basis(k);
            rB[k] = d.B.alg.rmul_basis(k);
        }
        for (std::size_t k = 0; k < d.C.dim(); ++k) {
            lC[k] = d.C.alg.lmul_basis(k);
            rC[k] = d.C.alg.rmul_basis(k);
        }
        Subspace iB = value_span(al.mods.B_l, lB);    // values of left B-linear maps
        Subspace iBs = value_span(al.mods.Bs_r, rB);  // twisted right B-linear maps
        Subspace iC = value_span(al.mods.C_r, rC);    // right C-linear maps
        Subspace iCs = value_span(al.mods.Cs_l, lC);  // twisted left C-linear maps
        rep.add("span condition for left B structure",
                full_product(d.B, iB, Mat(d.tB), true, d.C));
        rep.add("span condition for twisted B structure",
                full_product(d.B, iBs, std::nullopt, true, d.B));
        rep.add("span condition for right C structure",
                full_product(d.C, iC, Mat(d.tC), false, d.B));
        rep.add("span condition for twisted C structure",
                full_product(d.C, iCs, std::nullopt, false, d.C));
    }
    bool h1 = rep.ok();

    CheckReport h2rep;
    bool counits = compute_counits(al, &h2rep);
    bool antipode = counits && compute_antipode(al, &h2rep);
    rep.merge(h2rep);
    bool h2 = counits && antipode && h2rep.ok();
    rep.add("existence route agrees with bijectivity route", h1 == h2,
            h1 ? "bijectivity certificates hold but counits or antipode failed"
               : "counits and antipode exist but a bijectivity certificate failed");
    return rep;
}

CheckReport check_regular_identities(Algebroid& al) {
    CheckReport rep;
    std::size_t nn = al.n();
    if (!al.S) compute_antipode(al);
    if (!al.S || !al.epsB || !al.epsC) {
        rep.add("antipode available", false, "no antipode or counits to test");
        return rep;
    }
    const Mat& s = *al.S;
    Mat flip = flip_mat(nn);
    Mat is = on_second_leg(s, nn);
    Mat si = on_first_leg(s, nn);
    Mat ss = flip * s.kron(s);

    bool have = al.Tl && al.Tr && al.lT && al.rT;
    rep.add("canonical maps present", have);
    if (!have) return rep;

    {
        // Around the first inverse diagram: rT, then second-leg antipode,
        // then Tr, against the direct second-leg antipode.
        auto step = descend(al.Q2.q, al.Q4.q, is);
        auto direct = descend(al.Q6.q, al.Q1.q, is);
        bool ok = step && direct && *al.Tr * *step * *al.rT == *direct;
        rep.add("inverse diagram for right maps", ok);
    }
    {
        auto step = descend(al.Q1.q, al.Q5.q, si);
        auto direct = descend(al.Q3.q, al.Q2.q, si);
        bool ok = step && direct && *al.lT * *step * *al.Tl == *direct;
        rep.add("inverse diagram for left maps", ok);
    }
    {
        // Flip-antipode squares.
        auto top = descend(al.Q3.q, al.Q6.q, ss);
        auto bot = descend(al.Q1.q, al.Q2.q, ss);
        bool ok = top && bot && *al.rT * *top == *bot * *al.Tl;
        rep.add("flip antipode square, left to right", ok);
    }
    {
        auto top = descend(al.Q5.q, al.Q4.q, ss);
        auto bot = descend(al.Q2.q, al.Q1.q, ss);
        bool ok = top && bot && *al.Tr * *top == *bot * *al.lT;
        rep.add("flip antipode square, right to left", ok);
    }
    // Counit/antipode exchange.
    rep.add("left counit from right counit and antipode",
            al.d.tB * *al.epsB * s == *al.epsC);
    rep.add("right counit from left counit and antipode",
            al.d.tC * *al.epsC * s == *al.epsB);

    // Counit multiplicativity in both absorbing forms.
    {
        bool okC = true, okB = true;
        std::string wc, wb;
        for (std::size_t a = 0; a < nn && (okC || okB); ++a)
            for (std::size_t b = 0; b < nn; ++b) {
                Vec ea = basis_vec(nn, a), eb = basis_vec(nn, b);
                Vec cb = *al.epsC * eb;                  // epsC(b) in C coords
                Vec ba = *al.epsB * ea;                  // epsB(a) in B coords
                Vec lhsC = *al.epsC * al.d.A.mul(ea, eb);
                Vec f1 = *al.epsC * (al.d.C.rmul_on_A(cb) * ea);
                Vec f2 = *al.epsC * (al.d.B.rmul_on_A(al.d.tC * cb) * ea);
                if (okC && (lhsC != f1 || lhsC != f2)) {
                    okC = false;
                    wc = "witness pair (" + itos(a) + "," + itos(b) + ")";
                }
                Vec lhsB = *al.epsB * al.d.A.mul(ea, eb);
                Vec g1 = *al.epsB * (al.d.B.lmul_on_A(ba) * eb);
                Vec g2 = *al.epsB * (al.d.C.lmul_on_A(al.d.tB * ba) * eb);
                if (okB && (lhsB != g1 || lhsB != g2)) {
                    okB = false;
                    wb = "witness pair (" + itos(a) + "," + itos(b) + ")";
                }
            }
        rep.add("left counit multiplicative", okC, wc);
        rep.add("right counit multiplicative", okB, wb);
    }

    // Pentagon for the left mixed canonical map on the triple tensor.
    {
        Mat lt_amb = al.Mdbl * flip;
        Mat l12 = on_legs3(lt_amb, 0, 1, nn);
        Mat l23 = on_legs3(lt_amb, 1, 2, nn);
        Mat l13 = on_legs3(lt_amb, 0, 2, nn);
        Mat diff = l12 * l23 - l23 * l13 * l12;
        QuotientSpace t2 = triple_quotient(al.Q2, al.Q2);
        Mat proj = t2.proj * diff;
        bool ok = proj.is_zero();
        std::string detail;
        if (!ok) {
            // The representative-level maps may differ by source relations;
            // retest on the source triple quotient.
            QuotientSpace ts = triple_quotient(al.Q5, al.Q5);
            ok = (proj * ts.sect).is_zero();
            bool on_rel = true;
            for (std::size_t r = 0; r < ts.relations.dim() && ok; ++r)
                if (!vec_is_zero(proj * ts.relations.basis_vec(r))) on_rel = false;
            ok = ok && on_rel;
            detail = "fails on the ambient triple tensor";
        }
        rep.add("pentagon for left mixed canonical map", ok, detail);
    }
    return rep;
}

CheckReport check_star(Algebroid& al) {
    CheckReport rep;
    const AlgebroidData& d = al.d;
    std::size_t nn = al.n();
    if (!d.A.star() || !d.B.alg.star() || !d.C.alg.star()) {
        rep.add("involutions present", false, "missing star on A, B or C");
        return rep;
    }
    rep.add("involutions present", true);
    std::string w;
    rep.add("involution on A valid", d.A.star_ok(&w), w);
    const Mat& sa = *d.A.star();
    const Mat& sb = *d.B.alg.star();
    const Mat& sc = *d.C.alg.star();

    // (1) The bases are star-subalgebras: the multiplier adjoint of each
    // embedded basis element is the embedding of its base star.
    {
        bool okB = true, okC = true;
        for (std::size_t k = 0; k < d.B.dim(); ++k) {
            Mat adj_lam = sa * conj_mat(d.B.img[k].rho) * conj_mat(sa);
            Mat adj_rho = sa * conj_mat(d.B.img[k].lam) * conj_mat(sa);
            Vec xs = sb.col(k);  // star of a basis vector has real coordinates input
            if (adj_lam != d.B.lmul_on_A(xs) || adj_rho != d.B.rmul_on_A(xs)) okB = false;
        }
        for (std::size_t k = 0; k < d.C.dim(); ++k) {
            Mat adj_lam = sa * conj_mat(d.C.img[k].rho) * conj_mat(sa);
            Mat adj_rho = sa * conj_mat(d.C.img[k].lam) * conj_mat(sa);
            Vec ys = sc.col(k);
            if (adj_lam != d.C.lmul_on_A(ys) || adj_rho != d.C.rmul_on_A(ys)) okC = false;
        }
        rep.add("base B star subalgebra", okB);
        rep.add("base C star subalgebra", okC);
    }

    // (2) Twist and star interleave to the identity.
    rep.add("twist star exchange on C",
            d.tB * sb * conj_mat(d.tC) * conj_mat(sc) == Mat::identity(d.C.dim()));
    rep.add("twist star exchange on B",
            d.tC * sc * conj_mat(d.tB) * conj_mat(sb) == Mat::identity(d.B.dim()));

    // Star (x) star exchanges the two target squares.
    Mat ssq = sa.kron(sa);
    {
        bool wd = true;
        for (std::size_t r = 0; r < al.Q2.q.relations.dim() && wd; ++r)
            if (!al.Q1.q.relations.contains(ssq * conj_vec(al.Q2.q.relations.basis_vec(r))))
                wd = false;
        for (std::size_t r = 0; r < al.Q1.q.relations.dim() && wd; ++r)
            if (!al.Q2.q.relations.contains(ssq * conj_vec(al.Q1.q.relations.basis_vec(r))))
                wd = false;
        rep.add("star square map well-defined", wd);
    }

    // (3) Star exchanges the comultiplications.
    {
        bool ok = true;
        std::string wit;
        for (std::size_t a = 0; a < nn && ok; ++a)
            for (std::size_t b = 0; b < nn && ok; ++b)
                for (std::size_t c = 0; c < nn; ++c) {
                    Vec as = sa.col(a), bs = sa.col(b), cs = sa.col(c);
                    Vec w1(nn * nn);
                    for (std::size_t ap = 0; ap < nn; ++ap) {
                        if (as[ap].is_zero()) continue;
                        for (std::size_t cp = 0; cp < nn; ++cp)
                            if (!cs[cp].is_zero())
                                w1 = vec_add(w1, vec_scaled(d.dcr_at(ap, cp), as[ap] * cs[cp]));
                    }
                    Vec lhs = apply_first(d.A.rmul(bs), w1, nn);
                    Vec w2 = apply_second(d.A.lmul_basis(c), d.dbl_at(a, b), nn);
                    Vec rhs = ssq * conj_vec(w2);
                    if (!vec_is_zero(al.Q1.q.project(vec_sub(lhs, rhs)))) {
                        ok = false;
                        wit = "witness (a,b,c) = (" + itos(a) + "," + itos(b) + "," + itos(c) + ")";
                        break;
                    }
                }
        rep.add("star exchanges comultiplications", ok, wit);
    }

    // Counit and antipode interplay with the involution.
    if (!al.S) compute_antipode(al);
    if (al.S && al.epsB && al.epsC && al.tBinv && al.tCinv) {
        rep.add("right counit of star",
                *al.epsB * sa == sb * conj_mat(*al.tBinv) * conj_mat(*al.epsC));
        rep.add("left counit of star",
                *al.epsC * sa == sc * conj_mat(*al.tCinv) * conj_mat(*al.epsB));
        rep.add("antipode star period two",
                *al.S * sa * conj_mat(*al.S * sa) == Mat::identity(nn));
    } else {
        rep.add("antipode star period two", false, "no antipode to test");
    }
    return rep;
}

CheckReport check_local_projectivity(const Algebroid& al) {
    CheckReport rep;
    const AlgebroidData& d = al.d;

    auto firm = [&](const FiniteAlgebra& base, const char* name) {
        std::size_t m = base.dim();
        ModuleAction r1, l2;
        r1.left = false;
        l2.left = true;
        for (std::size_t k = 0; k < m; ++k) {
            r1.act.push_back(base.rmul_basis(k));
            l2.act.push_back(base.lmul_basis(k));
        }
        TensorQuotient q = balanced_tensor(r1, l2);
        Mat mult(m, m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Vec p = base.mul(basis_vec(m, i), basis_vec(m, j));
                for (std::size_t k = 0; k < m; ++k)
                    if (!p[k].is_zero()) mult.at(k, tidx(i, j, m)) = p[k];
            }
        auto desc = descend_to_plain(q.q, mult);
        bool ok = desc && desc->rows() == desc->cols() && inverse(*desc).has_value();
        rep.add(std::string("base ") + name + " firm", ok);
    };
    firm(d.B.alg, "B");
    firm(d.C.alg, "C");

    auto locally_projective = [&](const ModuleAction& act, const FiniteAlgebra& base,
                                  bool left, const char* name) {
        std::size_t m = base.dim(), n = act.mod_dim();
        std::vector<Mat> reg(m), regT(m);
        for (std::size_t k = 0; k < m; ++k)
            reg[k] = left ? base.lmul_basis(k) : base.rmul_basis(k);
        // Maps from the module to the base and back.
        auto down = module_hom_space(act, reg);
        ModuleAction breg;
        breg.left = left;
        breg.act = reg;
        auto up = module_hom_space(breg, act.act);
        std::vector<Vec> composites;
        for (const auto& u : up)
            for (const auto& v : down) {
                Mat comp = u * v;  // n x n
                Vec flat(n * n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = comp.at(i, j);
                composites.push_back(std::move(flat));
            }
        Vec idv(n * n);
        for (std::size_t i = 0; i < n; ++i) idv[i * n + i] = GRat(1);
        bool ok = Subspace::span(n * n, composites).contains(idv);
        rep.add(std::string(name) + " locally projective", ok);
    };
    locally_projective(al.mods.B_l, d.B.alg, true, "left B module on A");
    locally_projective(al.mods.B_r, d.B.alg, false, "right B module on A");
    locally_projective(al.mods.C_l, d.C.alg, true, "left C module on A");
    locally_projective(al.mods.C_r, d.C.alg, false, "right C module on A");
    return rep;
}

}  // namespace mhad

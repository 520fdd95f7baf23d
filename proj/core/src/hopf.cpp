#include "mhad/hopf.hpp"

#include <cassert>

namespace mhad {

namespace {

std::string itos(std::size_t k) { return std::to_string(k); }

// Product of two elements of H (x) H, expanded through the structure
// constants of H on both legs.
Vec mul2(const FiniteAlgebra& h, const Vec& x, const Vec& y) {
    std::size_t n = h.dim();
    Vec out(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (x[tidx(p, q, n)] == GRat(0)) continue;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    GRat c = x[tidx(p, q, n)] * y[tidx(r, s, n)];
                    if (c == GRat(0)) continue;
                    Vec pr = h.mul(basis_vec(n, p), basis_vec(n, r));
                    Vec qs = h.mul(basis_vec(n, q), basis_vec(n, s));
                    for (std::size_t u = 0; u < n; ++u)
                        for (std::size_t v = 0; v < n; ++v)
                            out[tidx(u, v, n)] += c * pr[u] * qs[v];
                }
        }
    return out;
}

}  // namespace

HopfData group_algebra_hopf(const std::vector<std::vector<std::size_t>>& table) {
    std::size_t n = table.size();
    HopfData h;
    std::vector<Mat> lm(n, Mat(n, n));
    std::vector<std::size_t> inv(n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 0; k < n; ++k) {
            lm[g].at(table[g][k], k) = GRat(1);
            if (table[g][k] == 0) inv[g] = k;
        }
    h.H = FiniteAlgebra(lm);
    h.H.set_unit(basis_vec(n, 0));
    Mat star(n, n);
    for (std::size_t g = 0; g < n; ++g) star.at(inv[g], g) = GRat(1);
    h.H.set_star(star);

    h.Delta = Mat(n * n, n);
    h.eps = Functional(n);
    h.S = Mat(n, n);
    h.phi = Functional(n);
    h.psi = Functional(n);
    for (std::size_t g = 0; g < n; ++g) {
        h.Delta.at(tidx(g, g, n), g) = GRat(1);
        h.eps[g] = GRat(1);
        h.S.at(inv[g], g) = GRat(1);
    }
    h.phi[0] = GRat(1);
    h.psi[0] = GRat(1);
    return h;
}

HopfData function_algebra_hopf(const std::vector<std::vector<std::size_t>>& table) {
    std::size_t n = table.size();
    HopfData h;
    std::vector<Mat> lm(n, Mat(n, n));
    std::vector<std::size_t> inv(n);
    for (std::size_t g = 0; g < n; ++g) {
        lm[g].at(g, g) = GRat(1);
        for (std::size_t k = 0; k < n; ++k)
            if (table[g][k] == 0) inv[g] = k;
    }
    h.H = FiniteAlgebra(lm);
    Vec one(n, GRat(1));
    h.H.set_unit(one);
    h.H.set_star(Mat::identity(n));

    h.Delta = Mat(n * n, n);
    h.eps = Functional(n);
    h.S = Mat(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            h.Delta.at(tidx(p, q, n), table[p][q]) = GRat(1);
    h.eps[0] = GRat(1);
    for (std::size_t g = 0; g < n; ++g) h.S.at(inv[g], g) = GRat(1);
    h.phi = Functional(n, GRat(1));
    h.psi = Functional(n, GRat(1));
    return h;
}

CheckReport validate_hopf(const HopfData& h) {
    CheckReport rep;
    std::size_t n = h.H.dim();
    AlgebraReport ar = validate_algebra(h.H);
    rep.add("underlying algebra is unital and associative",
            ar.ok() && h.H.unit().has_value(), ar.witness);
    if (!h.H.unit()) return rep;
    const Vec& one = *h.H.unit();

    bool hom = true;
    std::string w;
    for (std::size_t i = 0; i < n && hom; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = h.Delta * h.H.mul(basis_vec(n, i), basis_vec(n, j));
            Vec rhs = mul2(h.H, h.Delta.col(i), h.Delta.col(j));
            if (lhs != rhs) {
                hom = false;
                w = "pair (" + itos(i) + "," + itos(j) + ")";
                break;
            }
        }
    rep.add("comultiplication is a homomorphism", hom, w);

    bool coassoc = true;
    for (std::size_t a = 0; a < n && coassoc; ++a) {
        Vec lhs(n * n * n), rhs(n * n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                GRat c = h.Delta.at(tidx(p, q, n), a);
                if (c == GRat(0)) continue;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        lhs[(tidx(u, v, n)) * n + q] += c * h.Delta.at(tidx(u, v, n), p);
                        rhs[(p * n + u) * n + v] += c * h.Delta.at(tidx(u, v, n), q);
                    }
            }
        coassoc = lhs == rhs;
        if (!coassoc) w = "element " + itos(a);
    }
    rep.add("comultiplication is coassociative", coassoc, coassoc ? "" : w);

    bool counit = true, antipode = true;
    for (std::size_t a = 0; a < n; ++a) {
        Vec l(n), r(n), sl(n), sr(n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                GRat c = h.Delta.at(tidx(p, q, n), a);
                if (c == GRat(0)) continue;
                l = vec_add(l, vec_scaled(basis_vec(n, q), c * h.eps[p]));
                r = vec_add(r, vec_scaled(basis_vec(n, p), c * h.eps[q]));
                sl = vec_add(sl, vec_scaled(h.H.mul(h.S.col(p), basis_vec(n, q)), c));
                sr = vec_add(sr, vec_scaled(h.H.mul(basis_vec(n, p), h.S.col(q)), c));
            }
        if (l != basis_vec(n, a) || r != basis_vec(n, a)) counit = false;
        Vec scaled_one = vec_scaled(one, h.eps[a]);
        if (sl != scaled_one || sr != scaled_one) antipode = false;
    }
    rep.add("counit laws", counit);
    rep.add("antipode laws", antipode);

    bool antihom = inverse(h.S).has_value();
    for (std::size_t i = 0; i < n && antihom; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.S * h.H.mul(basis_vec(n, i), basis_vec(n, j)) !=
                h.H.mul(h.S.col(j), h.S.col(i))) {
                antihom = false;
                break;
            }
    rep.add("antipode is a bijective anti-homomorphism", antihom);

    bool inv_l = true, inv_r = true;
    for (std::size_t a = 0; a < n; ++a) {
        Vec l(n), r(n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                GRat c = h.Delta.at(tidx(p, q, n), a);
                if (c == GRat(0)) continue;
                l = vec_add(l, vec_scaled(basis_vec(n, p), c * h.phi[q]));
                r = vec_add(r, vec_scaled(basis_vec(n, q), c * h.psi[p]));
            }
        if (l != vec_scaled(one, h.phi[a])) inv_l = false;
        if (r != vec_scaled(one, h.psi[a])) inv_r = false;
    }
    rep.add("left integral invariance", inv_l);
    rep.add("right integral invariance", inv_r);
    return rep;
}

Mat hopf_shift_grid(const HopfData& h) {
    std::size_t n = h.H.dim();
    Mat g(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            g.at(j, i) = dot(h.phi, h.H.mul(basis_vec(n, j), basis_vec(n, i)));
    return g;
}

std::optional<HopfData> dual_hopf(const HopfData& h) {
    std::size_t n = h.H.dim();
    Mat g = hopf_shift_grid(h);
    auto gi = inverse(g);
    if (!gi) return std::nullopt;

    HopfData d;
    std::vector<Mat> lm(n, Mat(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // (ups_i ups_j)(e_a) = (ups_i (x) ups_j)(Delta e_a).
            Vec vals(n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        vals[a] += h.Delta.at(tidx(p, q, n), a) * g.at(p, i) * g.at(q, j);
            Vec coords = *gi * vals;
            for (std::size_t k = 0; k < n; ++k) lm[i].at(k, j) = coords[k];
        }
    d.H = FiniteAlgebra(lm);
    if (auto u = d.H.find_unit()) d.H.set_unit(*u);

    // (Delta-hat ups_i)(e_a (x) e_b) = ups_i(e_a e_b), in coordinates of
    // the tensor shift basis.
    d.Delta = Mat(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec vals(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                vals[tidx(a, b, n)] = dot(g.col(i), h.H.mul(basis_vec(n, a), basis_vec(n, b)));
        Vec coords = gi->kron(*gi) * vals;
        for (std::size_t t = 0; t < n * n; ++t) d.Delta.at(t, i) = coords[t];
    }

    d.eps = Functional(n);
    d.S = Mat(n, n);
    const Vec& one = h.H.unit() ? *h.H.unit() : Vec(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.eps[i] = dot(g.col(i), one);
        Vec vals = h.S.transpose() * g.col(i);
        Vec coords = *gi * vals;
        for (std::size_t k = 0; k < n; ++k) d.S.at(k, i) = coords[k];
    }

    // The dual right integral reads off the counit of the shift; the dual
    // left integral routes through the dual antipode.
    d.psi = Functional(n);
    for (std::size_t i = 0; i < n; ++i) d.psi[i] = h.eps[i];
    d.phi = d.S.transpose() * d.psi;
    return d;
}

HopfModel hopf_algebroid(const HopfData& h) {
    std::size_t n = h.H.dim();
    HopfModel m;
    m.h = h;

    std::vector<Mat> bm(1, Mat(1, 1));
    bm[0].at(0, 0) = GRat(1);
    FiniteAlgebra base(bm);
    base.set_unit(Vec{GRat(1)});
    base.set_star(Mat::identity(1));

    AlgebroidData d;
    d.A = h.H;
    d.B.alg = base;
    d.B.img = {Multiplier::identity(n)};
    d.C = d.B;
    d.tB = Mat::identity(1);
    d.tC = Mat::identity(1);
    d.muB = Vec{GRat(1)};
    d.muC = Vec{GRat(1)};

    d.dcr.assign(n * n, Vec());
    d.dcl.assign(n * n, Vec());
    d.dbl.assign(n * n, Vec());
    d.dbr.assign(n * n, Vec());
    for (std::size_t a = 0; a < n; ++a) {
        Vec x = h.Delta.col(a);
        for (std::size_t b = 0; b < n; ++b) {
            d.dcr[a * n + b] = on_second_leg(h.H.rmul_basis(b), n) * x;
            d.dcl[a * n + b] = on_first_leg(h.H.rmul_basis(b), n) * x;
            d.dbl[a * n + b] = on_first_leg(h.H.lmul_basis(b), n) * x;
            d.dbr[a * n + b] = on_second_leg(h.H.lmul_basis(b), n) * x;
        }
    }
    m.data = std::move(d);

    m.phiC = Mat(1, n);
    m.psiB = Mat(1, n);
    for (std::size_t a = 0; a < n; ++a) {
        m.phiC.at(0, a) = h.phi[a];
        m.psiB.at(0, a) = h.psi[a];
    }
    return m;
}

}  // namespace mhad

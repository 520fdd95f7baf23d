#include "mhad/groupoid.hpp"

#include <algorithm>
#include <cassert>

namespace mhad {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string itos(std::size_t k) { return std::to_string(k); }

// Is r a square of a rational? Exact test on numerator and denominator.
bool rat_square_root(const Rat& r, Rat* root) {
    if (r < 0) return false;
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int sn = boost::multiprecision::sqrt(num);
    Int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    if (root) *root = Rat(sn, sd);
    return true;
}

}  // namespace

std::size_t GroupoidSpec::unit_index(std::size_t arrow) const {
    auto it = std::lower_bound(units.begin(), units.end(), arrow);
    if (it == units.end() || *it != arrow) return npos;
    return static_cast<std::size_t>(it - units.begin());
}

std::vector<Rat> GroupoidSpec::cocycle() const {
    std::vector<Rat> d(num_arrows);
    for (std::size_t a = 0; a < num_arrows; ++a)
        d[a] = weight_at(tgt[a]) / weight_at(src[a]);
    return d;
}

bool GroupoidSpec::cocycle_square(std::vector<Rat>* roots) const {
    auto d = cocycle();
    std::vector<Rat> r(d.size());
    for (std::size_t a = 0; a < d.size(); ++a)
        if (!rat_square_root(d[a], &r[a])) return false;
    if (roots) *roots = std::move(r);
    return true;
}

GroupoidSpec group_groupoid(const std::vector<std::vector<std::size_t>>& table) {
    GroupoidSpec g;
    g.num_arrows = table.size();
    g.src.assign(g.num_arrows, 0);
    g.tgt.assign(g.num_arrows, 0);
    g.units = {0};
    g.weights = {Rat(1)};
    g.compose.assign(g.num_arrows, std::vector<std::optional<std::size_t>>(g.num_arrows));
    g.inv.assign(g.num_arrows, npos);
    for (std::size_t i = 0; i < g.num_arrows; ++i)
        for (std::size_t j = 0; j < g.num_arrows; ++j) {
            g.compose[i][j] = table[i][j];
            if (table[i][j] == 0) g.inv[i] = j;
        }
    return g;
}

GroupoidSpec pair_groupoid(std::size_t k, std::vector<Rat> weights) {
    assert(weights.size() == k);
    GroupoidSpec g;
    g.num_arrows = k * k;  // arrow i*k+j goes from j to i
    auto arrow = [k](std::size_t i, std::size_t j) { return i * k + j; };
    g.src.resize(g.num_arrows);
    g.tgt.resize(g.num_arrows);
    g.inv.resize(g.num_arrows);
    g.compose.assign(g.num_arrows, std::vector<std::optional<std::size_t>>(g.num_arrows));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            g.src[arrow(i, j)] = arrow(j, j);
            g.tgt[arrow(i, j)] = arrow(i, i);
            g.inv[arrow(i, j)] = arrow(j, i);
            g.units.push_back(arrow(i, i));
        }
    std::sort(g.units.begin(), g.units.end());
    g.units.erase(std::unique(g.units.begin(), g.units.end()), g.units.end());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l)
                g.compose[arrow(i, j)][arrow(j, l)] = arrow(i, l);
    g.weights = std::move(weights);
    return g;
}

CheckReport validate_groupoid(const GroupoidSpec& g) {
    CheckReport rep;
    std::size_t n = g.num_arrows;
    bool shape = g.src.size() == n && g.tgt.size() == n && g.inv.size() == n &&
                 g.compose.size() == n && g.units.size() == g.weights.size();
    for (std::size_t i = 0; i < g.compose.size(); ++i)
        shape = shape && g.compose[i].size() == n;
    rep.add("tables well shaped", shape);
    if (!shape) return rep;

    bool unit_ok = true;
    std::string w;
    for (std::size_t u : g.units) {
        if (u >= n || g.src[u] != u || g.tgt[u] != u) { unit_ok = false; w = "unit " + itos(u); }
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (g.unit_index(g.src[a]) == static_cast<std::size_t>(-1) ||
            g.unit_index(g.tgt[a]) == static_cast<std::size_t>(-1)) {
            unit_ok = false;
            w = "arrow " + itos(a) + " has non-unit endpoint";
        }
        if (unit_ok) {
            auto left = g.compose[g.tgt[a]][a];
            auto right = g.compose[a][g.src[a]];
            if (!left || *left != a || !right || *right != a) {
                unit_ok = false;
                w = "unit law at arrow " + itos(a);
            }
        }
    }
    rep.add("unit laws", unit_ok, w);

    bool comp_ok = true;
    std::string cw;
    for (std::size_t i = 0; i < n && comp_ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool composable = g.src[i] == g.tgt[j];
            if (composable != g.compose[i][j].has_value()) {
                comp_ok = false;
                cw = "pair (" + itos(i) + "," + itos(j) + ")";
                break;
            }
            if (composable) {
                std::size_t c = *g.compose[i][j];
                if (c >= n || g.tgt[c] != g.tgt[i] || g.src[c] != g.src[j]) {
                    comp_ok = false;
                    cw = "pair (" + itos(i) + "," + itos(j) + ")";
                    break;
                }
            }
        }
    rep.add("composition bookkeeping", comp_ok, cw);

    bool assoc = comp_ok;
    std::string aw;
    for (std::size_t i = 0; i < n && assoc; ++i)
        for (std::size_t j = 0; j < n && assoc; ++j) {
            if (!g.compose[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (!g.compose[j][k]) continue;
                if (*g.compose[*g.compose[i][j]][k] != *g.compose[i][*g.compose[j][k]]) {
                    assoc = false;
                    aw = "triple (" + itos(i) + "," + itos(j) + "," + itos(k) + ")";
                    break;
                }
            }
        }
    rep.add("associativity", assoc, aw);

    bool inv_ok = comp_ok;
    std::string iw;
    for (std::size_t a = 0; a < n && inv_ok; ++a) {
        std::size_t b = g.inv[a];
        if (b >= n || g.inv[b] != a || g.src[b] != g.tgt[a] || g.tgt[b] != g.src[a] ||
            !g.compose[a][b] || *g.compose[a][b] != g.tgt[a] ||
            !g.compose[b][a] || *g.compose[b][a] != g.src[a]) {
            inv_ok = false;
            iw = "arrow " + itos(a);
        }
    }
    rep.add("inverse laws", inv_ok, iw);

    bool wpos = true;
    for (const Rat& x : g.weights)
        if (!(x > 0)) wpos = false;
    rep.add("weights positive", wpos);
    return rep;
}

GroupoidModel groupoid_algebroid(const GroupoidSpec& g) {
    GroupoidModel m;
    m.spec = g;
    std::size_t n = g.num_arrows, nu = g.units.size();

    // A: pointwise multiplication on functions of arrows.
    std::vector<Mat> lm(n, Mat(n, n));
    for (std::size_t i = 0; i < n; ++i) lm[i].at(i, i) = GRat(1);
    FiniteAlgebra A(lm);
    Vec one(n);
    for (std::size_t i = 0; i < n; ++i) one[i] = GRat(1);
    A.set_unit(one);
    A.set_star(Mat::identity(n));  // pointwise complex conjugation

    // Base algebra: functions on units.
    std::vector<Mat> bm(nu, Mat(nu, nu));
    for (std::size_t u = 0; u < nu; ++u) bm[u].at(u, u) = GRat(1);
    FiniteAlgebra base(bm);
    Vec bone(nu);
    for (std::size_t u = 0; u < nu; ++u) bone[u] = GRat(1);
    base.set_unit(bone);
    base.set_star(Mat::identity(nu));

    auto pullback = [&](const std::vector<std::size_t>& ends) {
        BaseEmbedding e;
        e.alg = base;
        for (std::size_t u = 0; u < nu; ++u) {
            Mat d(n, n);
            for (std::size_t a = 0; a < n; ++a)
                if (g.unit_index(ends[a]) == u) d.at(a, a) = GRat(1);
            e.img.push_back(Multiplier{d, d});
        }
        return e;
    };
    AlgebroidData d;
    d.A = A;
    d.B = pullback(g.src);
    d.C = pullback(g.tgt);
    d.tB = Mat::identity(nu);
    d.tC = Mat::identity(nu);

    d.dcr.assign(n * n, Vec(n * n));
    d.dcl.assign(n * n, Vec(n * n));
    d.dbl.assign(n * n, Vec(n * n));
    d.dbr.assign(n * n, Vec(n * n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // Composable pairs (x, b) with x b = a: x = a b^{-1}, and
            // pairs (b, y) with b y = a: y = b^{-1} a.
            if (g.src[a] == g.src[b]) {
                std::size_t x = *g.compose[a][g.inv[b]];
                d.dcr[a * n + b][tidx(x, b, n)] = GRat(1);
                d.dbr[a * n + b][tidx(x, b, n)] = GRat(1);
            }
            if (g.tgt[a] == g.tgt[b]) {
                std::size_t y = *g.compose[g.inv[b]][a];
                d.dcl[a * n + b][tidx(b, y, n)] = GRat(1);
                d.dbl[a * n + b][tidx(b, y, n)] = GRat(1);
            }
        }

    Functional mu(nu);
    for (std::size_t u = 0; u < nu; ++u) mu[u] = GRat(g.weights[u]);
    d.muB = mu;
    d.muC = mu;
    m.data = std::move(d);

    m.phiC = Mat(nu, n);
    m.psiB = Mat(nu, n);
    m.epsC_expected = Mat(nu, n);
    m.epsB_expected = Mat(nu, n);
    m.S_expected = Mat(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        m.phiC.at(g.unit_index(g.tgt[a]), a) = GRat(1);
        m.psiB.at(g.unit_index(g.src[a]), a) = GRat(1);
        std::size_t ua = g.unit_index(a);
        if (ua != static_cast<std::size_t>(-1)) {
            m.epsC_expected.at(ua, a) = GRat(1);
            m.epsB_expected.at(ua, a) = GRat(1);
        }
        m.S_expected.at(g.inv[a], a) = GRat(1);
    }
    // The weight cocycle only makes sense for nowhere-zero weights; leave
    // it empty otherwise so degenerate-weight fixtures stay constructible.
    bool weights_nonzero = true;
    for (const Rat& w : g.weights)
        if (w == 0) weights_nonzero = false;
    if (weights_nonzero) {
        auto coc = g.cocycle();
        m.D.resize(n);
        for (std::size_t a = 0; a < n; ++a) m.D[a] = GRat(coc[a]);
    }
    return m;
}

std::optional<GroupoidDualOracle> groupoid_dual_oracle(const GroupoidSpec& g) {
    std::vector<Rat> roots;
    if (!g.cocycle_square(&roots)) return std::nullopt;
    std::size_t n = g.num_arrows;
    auto coc = g.cocycle();

    GroupoidDualOracle o;
    o.droot = roots;
    o.G = Mat(n, n);
    for (std::size_t a = 0; a < n; ++a) o.G.at(a, a) = GRat(g.weight_at(g.tgt[a]));

    // omega_a omega_b = D^{1/2}(a) D^{1/2}(b) fhat_a fhat_b, and the
    // normalized functionals convolve: fhat_a fhat_b = [composable] fhat_{ab}.
    o.mul.assign(n * n, Vec(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.compose[a][b]) {
                std::size_t c = *g.compose[a][b];
                o.mul[a * n + b][c] = GRat(roots[a] * roots[b] / roots[c]);
            }

    // Forward: (omega_a |> f)(gamma) = f(gamma a) on composable arguments.
    // Backward: (f <| omega_a)(gamma) = D(a) f(a gamma); the twist survives
    // only on this side because the shift basis is built on phi, not psi.
    o.tri.assign(n, Mat(n, n));
    o.itri.assign(n, Mat(n, n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t ga = 0; ga < n; ++ga) {
            if (g.compose[ga][a]) o.tri[a].at(ga, *g.compose[ga][a]) = GRat(1);
            if (g.compose[a][ga]) o.itri[a].at(ga, *g.compose[a][ga]) = GRat(coc[a]);
        }

    // Both dual integrals restrict to the units and pick up the weight.
    o.phiHat = Functional(n);
    o.psiHat = Functional(n);
    o.S = Mat(n, n);
    o.star = Mat(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (g.unit_index(a) != static_cast<std::size_t>(-1)) {
            o.phiHat[a] = GRat(g.weight_at(a));
            o.psiHat[a] = GRat(g.weight_at(a));
        }
        o.S.at(g.inv[a], a) = GRat(coc[a]);
        o.star.at(g.inv[a], a) = GRat(coc[a]);
    }
    return o;
}

}  // namespace mhad

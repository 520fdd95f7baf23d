#include "mhad/functional.hpp"

#include <cassert>

namespace mhad {

Functional precompose(const Functional& f, const Mat& op) {
    assert(f.size() == op.rows());
    Functional r(op.cols());
    for (std::size_t j = 0; j < op.cols(); ++j) {
        GRat s;
        for (std::size_t i = 0; i < op.rows(); ++i)
            if (!f[i].is_zero() && !op.at(i, j).is_zero()) s += f[i] * op.at(i, j);
        r[j] = s;
    }
    return r;
}

namespace {

// Rows enforcing X act_k = reg_k X for all k (unknown X is m x n, flattened
// row-major).
std::vector<Vec> module_map_rows(const ModuleAction& action,
                                 const std::vector<Mat>& reg) {
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
    return rows;
}

}  // namespace

std::optional<Mat> solve_partial(const ModuleAction& action,
                                 const std::vector<Mat>& base_regular,
                                 const Functional& mu,
                                 const Functional& omega,
                                 bool* unique) {
    std::size_t n = action.mod_dim();
    std::size_t m = base_regular.empty() ? 0 : base_regular[0].rows();
    auto rows = module_map_rows(action, base_regular);
    Vec rhs(rows.size() + n);
    // mu . X = omega rows.
    for (std::size_t j = 0; j < n; ++j) {
        Vec row(m * n);
        for (std::size_t p = 0; p < m; ++p) row[p * n + j] = mu[p];
        rows.push_back(std::move(row));
        rhs[rows.size() - 1] = omega[j];
    }
    Mat sys = Mat::from_rows(rows);
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    if (unique) *unique = nullspace(sys).empty();
    Mat x(m, n);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t j = 0; j < n; ++j) x.at(p, j) = (*sol)[p * n + j];
    return x;
}

PartialMaps factorize(const ModuleStructures& s,
                      const BaseEmbedding& B, const BaseEmbedding& C,
                      const Functional& muB, const Functional& muC,
                      const Functional& omega) {
    std::vector<Mat> Bl(B.dim()), Br(B.dim()), Cl(C.dim()), Cr(C.dim());
    for (std::size_t k = 0; k < B.dim(); ++k) {
        Bl[k] = B.alg.lmul_basis(k);
        Br[k] = B.alg.rmul_basis(k);
    }
    for (std::size_t k = 0; k < C.dim(); ++k) {
        Cl[k] = C.alg.lmul_basis(k);
        Cr[k] = C.alg.rmul_basis(k);
    }
    PartialMaps p;
    p.lB = solve_partial(s.B_l, Bl, muB, omega);
    p.rB = solve_partial(s.B_r, Br, muB, omega);
    p.lC = solve_partial(s.C_l, Cl, muC, omega);
    p.rC = solve_partial(s.C_r, Cr, muC, omega);
    p.sBl = solve_partial(s.Bs_l, Bl, muB, omega);
    p.sBr = solve_partial(s.Bs_r, Br, muB, omega);
    p.sCl = solve_partial(s.Cs_l, Cl, muC, omega);
    p.sCr = solve_partial(s.Cs_r, Cr, muC, omega);
    return p;
}

Subspace factorizable_space(const ModuleAction& left_action,
                            const std::vector<Mat>& left_regular,
                            const Functional& mu_left,
                            const ModuleAction& right_action,
                            const std::vector<Mat>& right_regular,
                            const Functional& mu_right) {
    std::size_t n = left_action.mod_dim();
    auto space_of = [n](const ModuleAction& act, const std::vector<Mat>& reg,
                        const Functional& mu) {
        std::size_t m = reg.empty() ? 0 : reg[0].rows();
        auto rows = module_map_rows(act, reg);
        std::vector<Vec> gens;
        auto sols = rows.empty()
                        ? std::vector<Vec>{}
                        : nullspace(Mat::from_rows(rows));
        if (rows.empty()) {
            // No constraints: every X is a module map.
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t j = 0; j < n; ++j) {
                    Vec v(m * n);
                    v[p * n + j] = GRat(1);
                    sols.push_back(std::move(v));
                }
        }
        for (const auto& x : sols) {
            Functional f(n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t p = 0; p < m; ++p)
                    if (!mu[p].is_zero() && !x[p * n + j].is_zero())
                        f[j] += mu[p] * x[p * n + j];
            if (!vec_is_zero(f)) gens.push_back(std::move(f));
        }
        return Subspace::span(n, gens);
    };
    Subspace left = space_of(left_action, left_regular, mu_left);
    Subspace right = space_of(right_action, right_regular, mu_right);
    return left.intersect(right);
}

Functional tensor_functionals(const FiniteAlgebra& base,
                              const Functional& mu,
                              const Mat& ups_right_partial,
                              const Mat& omega_left_partial) {
    std::size_t n1 = ups_right_partial.cols(), n2 = omega_left_partial.cols();
    Functional f(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        Vec u = ups_right_partial.col(i);
        for (std::size_t j = 0; j < n2; ++j) {
            Vec w = omega_left_partial.col(j);
            f[tidx(i, j, n2)] = evalf(mu, base.mul(u, w));
        }
    }
    return f;
}

Functional sandwich(const Functional& omega, const Mat& lmul_x, const Mat& rmul_y) {
    return precompose(omega, lmul_x * rmul_y);
}

}  // namespace mhad

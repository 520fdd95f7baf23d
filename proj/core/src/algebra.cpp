#include "mhad/algebra.hpp"

#include <cassert>

namespace mhad {

namespace {

Vec flatten_multiplier(const Multiplier& m) {
    std::size_t n = m.lam.rows();
    Vec v;
    v.reserve(2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v.push_back(m.lam.at(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v.push_back(m.rho.at(i, j));
    return v;
}

Multiplier unflatten_multiplier(const Vec& v, std::size_t n) {
    Multiplier m{Mat(n, n), Mat(n, n)};
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.lam.at(i, j) = v[k++];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.rho.at(i, j) = v[k++];
    return m;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::vector<Mat> left_mult, std::vector<std::string> labels)
    : lm_(std::move(left_mult)), labels_(std::move(labels)) {
    std::size_t n = lm_.size();
    // Right multiplication by e_j has columns (e_i e_j) = lm_[i] e_j.
    rm_.assign(n, Mat(n, n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Vec prod = lm_[i].col(j);  // e_i e_j
            for (std::size_t k = 0; k < n; ++k) rm_[j].at(k, i) = prod[k];
        }
    if (labels_.empty()) {
        labels_.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels_[i] = "e" + std::to_string(i);
    }
}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
    Vec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        Vec t = lm_[i] * b;
        for (std::size_t k = 0; k < dim(); ++k) r[k] += a[i] * t[k];
    }
    return r;
}

Mat FiniteAlgebra::lmul(const Vec& a) const {
    Mat m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!a[i].is_zero()) m = m + lm_[i].scaled(a[i]);
    return m;
}

Mat FiniteAlgebra::rmul(const Vec& a) const {
    Mat m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!a[i].is_zero()) m = m + rm_[i].scaled(a[i]);
    return m;
}

Vec FiniteAlgebra::apply_star(const Vec& a) const {
    assert(star_);
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i].conj();
    return *star_ * c;
}

bool FiniteAlgebra::is_associative(std::string* witness) const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) {
                Vec lhs = mul(lm_[i].col(j), basis_vec(dim(), k));
                Vec rhs = lm_[i] * lm_[j].col(k);
                if (lhs != rhs) {
                    if (witness)
                        *witness = "(" + labels_[i] + " " + labels_[j] + ") " +
                                   labels_[k] + " != " + labels_[i] + " (" +
                                   labels_[j] + " " + labels_[k] + ")";
                    return false;
                }
            }
    return true;
}

bool FiniteAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (lm_[i] != rm_[i]) return false;
    return true;
}

bool FiniteAlgebra::is_nondegenerate() const {
    // a -> (row of all products a e_j) injective, and symmetrically.
    std::size_t n = dim();
    Mat left(n * n, n), right(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {  // a = e_i direction
        for (std::size_t j = 0; j < n; ++j) {
            Vec p = lm_[i].col(j);   // e_i e_j
            Vec q = rm_[i].col(j);   // e_j e_i
            for (std::size_t k = 0; k < n; ++k) {
                left.at(j * n + k, i) = p[k];
                right.at(j * n + k, i) = q[k];
            }
        }
    }
    return rank(left) == n && rank(right) == n;
}

bool FiniteAlgebra::is_idempotent() const {
    std::vector<Vec> prods;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) prods.push_back(lm_[i].col(j));
    return Subspace::span(dim(), prods).dim() == dim();
}

std::optional<Vec> FiniteAlgebra::find_unit() const {
    // One linear system over the whole basis: u e_j = e_j and e_j u = e_j.
    std::size_t n = dim();
    Mat sys(2 * n * n, n);
    Vec rhs(2 * n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys.at(j * n + k, i) = rm_[j].at(k, i);          // (u e_j)_k
                sys.at(n * n + j * n + k, i) = lm_[j].at(k, i);  // (e_j u)_k
            }
            rhs[j * n + k] = (k == j) ? GRat(1) : GRat();
            rhs[n * n + j * n + k] = (k == j) ? GRat(1) : GRat();
        }
    return solve(sys, rhs);
}

bool FiniteAlgebra::star_ok(std::string* witness) const {
    if (!star_) return true;
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec s = apply_star(basis_vec(n, i));
        if (apply_star(s) != basis_vec(n, i)) {
            if (witness) *witness = "star not involutive on " + labels_[i];
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = apply_star(lm_[i].col(j));  // (e_i e_j)*
            Vec rhs = mul(apply_star(basis_vec(n, j)), apply_star(basis_vec(n, i)));
            if (lhs != rhs) {
                if (witness)
                    *witness = "(ab)* != b* a* at a=" + labels_[i] + ", b=" + labels_[j];
                return false;
            }
        }
    return true;
}

FiniteAlgebra FiniteAlgebra::opposite() const {
    std::vector<Mat> lm(dim());
    for (std::size_t i = 0; i < dim(); ++i) lm[i] = rm_[i];
    FiniteAlgebra op(lm, labels_);
    if (unit_) op.set_unit(*unit_);
    if (star_) op.set_star(*star_);
    return op;
}

AlgebraReport validate_algebra(const FiniteAlgebra& a) {
    AlgebraReport r;
    r.associative = a.is_associative(&r.witness);
    r.nondegenerate = a.is_nondegenerate();
    r.idempotent = a.is_idempotent();
    r.unit = a.find_unit();
    r.has_unit = r.unit.has_value();
    r.commutative = a.is_commutative();
    r.star_ok = a.star_ok(r.witness.empty() ? &r.witness : nullptr);
    return r;
}

MultiplierAlgebra multiplier_algebra(const FiniteAlgebra& a) {
    std::size_t n = a.dim();
    // Unknown x = (lam | rho) flattened row-major, 2 n^2 entries.
    // Conditions:
    //   (1) lam R_j - R_j lam = 0 for all j      (lam(ab) = lam(a)b)
    //   (2) rho L_i - L_i rho = 0 for all i      (rho(ab) = a rho(b))
    //   (3) L_i lam e_j = R_j rho e_i            (a lam(b) = rho(a) b)
    std::vector<Vec> rows;
    auto lam_index = [n](std::size_t i, std::size_t j) { return i * n + j; };
    auto rho_index = [n](std::size_t i, std::size_t j) { return n * n + i * n + j; };
    for (std::size_t j = 0; j < n; ++j) {
        const Mat& R = a.rmul_basis(j);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                Vec row(2 * n * n);
                // (lam R)_{pq} = sum_k lam_{pk} R_{kq}; (R lam)_{pq} = sum_k R_{pk} lam_{kq}
                for (std::size_t k = 0; k < n; ++k) {
                    row[lam_index(p, k)] += R.at(k, q);
                    row[lam_index(k, q)] -= R.at(p, k);
                }
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Mat& L = a.lmul_basis(i);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                Vec row(2 * n * n);
                for (std::size_t k = 0; k < n; ++k) {
                    row[rho_index(p, k)] += L.at(k, q);
                    row[rho_index(k, q)] -= L.at(p, k);
                }
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Mat& L = a.lmul_basis(i);
            const Mat& R = a.rmul_basis(j);
            for (std::size_t p = 0; p < n; ++p) {
                Vec row(2 * n * n);
                // (L lam e_j)_p = sum_k L_{pk} lam_{kj};  (R rho e_i)_p = sum_k R_{pk} rho_{ki}
                for (std::size_t k = 0; k < n; ++k) {
                    row[lam_index(k, j)] += L.at(p, k);
                    row[rho_index(k, i)] -= R.at(p, k);
                }
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
        }

    std::vector<Vec> basis_flat = nullspace(Mat::from_rows(rows));
    // Canonicalize through a Subspace so coordinates() is well defined.
    Subspace span = Subspace::span(2 * n * n, basis_flat);

    MultiplierAlgebra ma;
    ma.source_dim = n;
    std::size_t m = span.dim();
    for (std::size_t k = 0; k < m; ++k)
        ma.basis.push_back(unflatten_multiplier(span.basis_vec(k), n));

    // Structure constants of M(A) in this basis.
    std::vector<Mat> lm(m, Mat(m, m));
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = "m" + std::to_string(i);
        for (std::size_t j = 0; j < m; ++j) {
            Multiplier prod = ma.basis[i] * ma.basis[j];
            auto coords = span.coordinates(flatten_multiplier(prod));
            assert(coords && "multiplier algebra not closed under product");
            for (std::size_t k = 0; k < m; ++k) lm[i].at(k, j) = (*coords)[k];
        }
    }
    ma.algebra = FiniteAlgebra(lm, labels);
    auto unit_coords = span.coordinates(flatten_multiplier(Multiplier::identity(n)));
    assert(unit_coords && "identity is always a multiplier");
    ma.algebra.set_unit(*unit_coords);
    return ma;
}

std::optional<Vec> MultiplierAlgebra::coordinates(const Multiplier& m) const {
    std::vector<Vec> gens;
    for (const auto& b : basis) gens.push_back(flatten_multiplier(b));
    Subspace span = Subspace::span(2 * source_dim * source_dim, gens);
    return span.coordinates(flatten_multiplier(m));
}

Multiplier MultiplierAlgebra::realize(const Vec& coords) const {
    Multiplier m{Mat(source_dim, source_dim), Mat(source_dim, source_dim)};
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero()) continue;
        m = m + basis[k].scaled(coords[k]);
    }
    return m;
}

Vec MultiplierAlgebra::embed_coords(const FiniteAlgebra& a, const Vec& v) const {
    auto c = coordinates(a.embed(v));
    assert(c && "embedding of a nondegenerate algebra lands in M(A)");
    return *c;
}

std::optional<Multiplier> extend_hom(const FiniteAlgebra& d,
                                     const std::vector<Multiplier>& pi,
                                     const FiniteAlgebra& a,
                                     const Multiplier& t) {
    std::size_t n = a.dim(), m = d.dim();
    assert(pi.size() == m);
    // Columns pi(e_k) e_j span A (left nondegeneracy); the extension U is
    // pinned by U (pi(d) a) = pi(T d) a and (a pi(d)) U = a pi(d T).
    Mat gl(n, m * n), hl(n, m * n), gr(n, m * n), hr(n, m * n);
    for (std::size_t k = 0; k < m; ++k) {
        Multiplier img_l{Mat(n, n), Mat(n, n)}, img_r{Mat(n, n), Mat(n, n)};
        Vec td = t.lam.col(k);   // T e_k in D
        Vec dt = t.rho.col(k);   // e_k T in D
        for (std::size_t s = 0; s < m; ++s) {
            if (!td[s].is_zero()) img_l = img_l + pi[s].scaled(td[s]);
            if (!dt[s].is_zero()) img_r = img_r + pi[s].scaled(dt[s]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            Vec g = pi[k].lam.col(j);       // pi(e_k) e_j
            Vec h = img_l.lam.col(j);       // pi(T e_k) e_j
            Vec g2 = pi[k].rho.col(j);      // e_j pi(e_k)
            Vec h2 = img_r.rho.col(j);      // e_j pi(e_k T)
            for (std::size_t i = 0; i < n; ++i) {
                gl.at(i, k * n + j) = g[i];
                hl.at(i, k * n + j) = h[i];
                gr.at(i, k * n + j) = g2[i];
                hr.at(i, k * n + j) = h2[i];
            }
        }
    }
    if (rank(gl) != n || rank(gr) != n) return std::nullopt;  // degenerate pi
    // Solve U_lam * gl = hl  =>  gl^T U_lam^T = hl^T (unique by full rank).
    auto lam_t = solve_unique(gl.transpose(), hl.transpose());
    auto rho_t = solve_unique(gr.transpose(), hr.transpose());
    if (!lam_t || !rho_t) return std::nullopt;
    return Multiplier{lam_t->transpose(), rho_t->transpose()};
}

bool is_multiplier(const FiniteAlgebra& a, const Multiplier& m) {
    std::size_t n = a.dim();
    if (m.lam.rows() != n || m.lam.cols() != n || m.rho.rows() != n || m.rho.cols() != n)
        return false;
    for (std::size_t j = 0; j < n; ++j) {
        // lam(e_j b) = (lam e_j) b, rho(a e_j) = a rho(e_j),
        // a lam(e_j) = (rho a) e_j.
        if (m.lam * a.lmul_basis(j) != a.lmul(m.lam.col(j))) return false;
        if (m.rho * a.rmul_basis(j) != a.rmul(m.rho.col(j))) return false;
        if (a.rmul(m.lam.col(j)) != a.rmul_basis(j) * m.rho) return false;
    }
    return true;
}

}  // namespace mhad

#include "mhad/bimodule.hpp"

#include <cassert>

namespace mhad {

Mat BaseEmbedding::lmul_on_A(const Vec& x) const {
    assert(x.size() == img.size());
    std::size_t n = img[0].lam.rows();
    Mat m(n, n);
    for (std::size_t k = 0; k < img.size(); ++k)
        if (!x[k].is_zero()) m = m + img[k].lam.scaled(x[k]);
    return m;
}

Mat BaseEmbedding::rmul_on_A(const Vec& x) const {
    assert(x.size() == img.size());
    std::size_t n = img[0].rho.rows();
    Mat m(n, n);
    for (std::size_t k = 0; k < img.size(); ++k)
        if (!x[k].is_zero()) m = m + img[k].rho.scaled(x[k]);
    return m;
}

bool BaseEmbedding::is_homomorphism() const {
    std::size_t m = dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec prod = alg.mul(basis_vec(m, i), basis_vec(m, j));
            Multiplier expect{lmul_on_A(prod), rmul_on_A(prod)};
            if (img[i] * img[j] != expect) return false;
        }
    return true;
}

Mat ModuleAction::of(const Vec& x) const {
    assert(x.size() == act.size());
    Mat m(mod_dim(), mod_dim());
    for (std::size_t k = 0; k < act.size(); ++k)
        if (!x[k].is_zero()) m = m + act[k].scaled(x[k]);
    return m;
}

ModuleStructures build_module_structures(const BaseEmbedding& B,
                                         const BaseEmbedding& C,
                                         const Mat& tB, const Mat& tC) {
    ModuleStructures s;
    std::size_t nb = B.dim(), nc = C.dim();
    s.B_l.left = true;  s.B_r.left = false;
    s.C_l.left = true;  s.C_r.left = false;
    s.Bs_r.left = false; s.Bs_l.left = true;
    s.Cs_r.left = false; s.Cs_l.left = true;
    for (std::size_t k = 0; k < nb; ++k) {
        s.B_l.act.push_back(B.img[k].lam);
        s.B_r.act.push_back(B.img[k].rho);
        Vec tbk = tB.col(k);  // tB(e_k) in C coordinates
        s.Bs_r.act.push_back(C.lmul_on_A(tbk));  // a.x = tB(x) a
        s.Bs_l.act.push_back(C.rmul_on_A(tbk));  // x.a = a tB(x)
    }
    for (std::size_t k = 0; k < nc; ++k) {
        s.C_l.act.push_back(C.img[k].lam);
        s.C_r.act.push_back(C.img[k].rho);
        Vec tck = tC.col(k);  // tC(e_k) in B coordinates
        s.Cs_r.act.push_back(B.lmul_on_A(tck));  // a.y = tC(y) a
        s.Cs_l.act.push_back(B.rmul_on_A(tck));  // y.a = a tC(y)
    }
    return s;
}

bool module_action_ok(const FiniteAlgebra& base, const ModuleAction& m,
                      bool require_nondegenerate) {
    std::size_t nb = base.dim(), n = m.mod_dim();
    // (xy).a = x.(y.a) for a left module; a.(xy) = (a.x).y for a right one.
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            Vec prod = base.mul(basis_vec(nb, i), basis_vec(nb, j));
            Mat lhs = m.of(prod);
            Mat rhs = m.left ? m.act[i] * m.act[j] : m.act[j] * m.act[i];
            if (lhs != rhs) return false;
        }
    if (require_nondegenerate) {
        // span{x.a} = module (idempotent/unital module in all our uses).
        std::vector<Vec> gens;
        for (std::size_t k = 0; k < nb; ++k)
            for (std::size_t j = 0; j < n; ++j) gens.push_back(m.act[k].col(j));
        if (Subspace::span(n, gens).dim() != n) return false;
    }
    return true;
}

QuotientSpace make_quotient(std::size_t ambient, const std::vector<Vec>& relation_gens) {
    QuotientSpace q;
    q.ambient = ambient;
    q.relations = Subspace::span(ambient, relation_gens);
    const Mat& rel = q.relations.basis();
    // Pivot columns of the relation RREF; the complementary (free)
    // coordinates realize the quotient and give a canonical section.
    std::vector<std::size_t> pivot_of_row(rel.rows());
    std::vector<bool> is_pivot(ambient, false);
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        std::size_t p = 0;
        while (p < ambient && rel.at(i, p).is_zero()) ++p;
        pivot_of_row[i] = p;
        if (p < ambient) is_pivot[p] = true;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < ambient; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    std::size_t d = free_cols.size();
    q.proj = Mat(d, ambient);
    q.sect = Mat(ambient, d);
    for (std::size_t k = 0; k < d; ++k) {
        q.proj.at(k, free_cols[k]) = GRat(1);
        q.sect.at(free_cols[k], k) = GRat(1);
    }
    // e_{pivot_i} == e_{pivot_i} - rel_i modulo relations, which lives on
    // the free coordinates as -rel_i restricted there.
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        std::size_t p = pivot_of_row[i];
        for (std::size_t k = 0; k < d; ++k)
            q.proj.at(k, p) = -rel.at(i, free_cols[k]);
    }
    return q;
}

TensorQuotient balanced_tensor(const ModuleAction& right1, const ModuleAction& left2) {
    assert(!right1.left && left2.left);
    assert(right1.base_dim() == left2.base_dim());
    std::size_t n1 = right1.mod_dim(), n2 = left2.mod_dim();
    std::vector<Vec> gens;
    gens.reserve(right1.base_dim() * n1 * n2);
    for (std::size_t k = 0; k < right1.base_dim(); ++k)
        for (std::size_t i = 0; i < n1; ++i) {
            Vec mi = right1.act[k].col(i);  // e_i . x_k
            for (std::size_t j = 0; j < n2; ++j) {
                Vec nj = left2.act[k].col(j);  // x_k . e_j
                Vec g = vec_kron(mi, basis_vec(n2, j));
                Vec h = vec_kron(basis_vec(n1, i), nj);
                Vec rel = vec_sub(g, h);
                if (!vec_is_zero(rel)) gens.push_back(std::move(rel));
            }
        }
    TensorQuotient t;
    t.right1 = right1;
    t.left2 = left2;
    t.q = make_quotient(n1 * n2, gens);
    return t;
}

QuotientSpace triple_quotient(const TensorQuotient& q12, const TensorQuotient& q23) {
    std::size_t n1 = q12.n1(), n2 = q12.n2(), n3 = q23.n2();
    assert(q23.n1() == n2);
    std::size_t amb = n1 * n2 * n3;
    std::vector<Vec> gens;
    // Relations of q12 tensored with every third-leg basis vector.
    for (std::size_t r = 0; r < q12.q.relations.dim(); ++r) {
        Vec rel12 = q12.q.relations.basis_vec(r);
        for (std::size_t l = 0; l < n3; ++l)
            gens.push_back(vec_kron(rel12, basis_vec(n3, l)));
    }
    for (std::size_t r = 0; r < q23.q.relations.dim(); ++r) {
        Vec rel23 = q23.q.relations.basis_vec(r);
        for (std::size_t i = 0; i < n1; ++i)
            gens.push_back(vec_kron(basis_vec(n1, i), rel23));
    }
    return make_quotient(amb, gens);
}

std::optional<Mat> descend(const QuotientSpace& src, const QuotientSpace& dst,
                           const Mat& ambient_map) {
    for (std::size_t r = 0; r < src.relations.dim(); ++r) {
        Vec img = ambient_map * src.relations.basis_vec(r);
        if (!dst.relations.contains(img)) return std::nullopt;
    }
    return dst.proj * ambient_map * src.sect;
}

std::optional<Mat> descend_to_plain(const QuotientSpace& src, const Mat& ambient_map) {
    for (std::size_t r = 0; r < src.relations.dim(); ++r) {
        Vec img = ambient_map * src.relations.basis_vec(r);
        if (!vec_is_zero(img)) return std::nullopt;
    }
    return ambient_map * src.sect;
}

Mat slice_second_ambient(const ModuleAction& right1, const Mat& chi, std::size_t n2) {
    assert(!right1.left);
    std::size_t n1 = right1.mod_dim(), nb = right1.base_dim();
    assert(chi.rows() == nb && chi.cols() == n2);
    Mat s(n1, n1 * n2);
    for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t k = 0; k < nb; ++k) {
            const GRat& c = chi.at(k, j);
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < n1; ++i) {
                Vec v = right1.act[k].col(i);  // e_i . x_k
                for (std::size_t p = 0; p < n1; ++p)
                    if (!v[p].is_zero()) s.at(p, tidx(i, j, n2)) += c * v[p];
            }
        }
    return s;
}

Mat slice_first_ambient(const ModuleAction& left2, const Mat& chi, std::size_t n1) {
    assert(left2.left);
    std::size_t n2 = left2.mod_dim(), nb = left2.base_dim();
    assert(chi.rows() == nb && chi.cols() == n1);
    Mat s(n2, n1 * n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t k = 0; k < nb; ++k) {
            const GRat& c = chi.at(k, i);
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n2; ++j) {
                Vec v = left2.act[k].col(j);  // x_k . e_j
                for (std::size_t p = 0; p < n2; ++p)
                    if (!v[p].is_zero()) s.at(p, tidx(i, j, n2)) += c * v[p];
            }
        }
    return s;
}

Mat on_first_leg(const Mat& op, std::size_t n2) {
    return op.kron(Mat::identity(n2));
}

Mat on_second_leg(const Mat& op, std::size_t n1) {
    return Mat::identity(n1).kron(op);
}

}  // namespace mhad

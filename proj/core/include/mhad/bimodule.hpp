// Base embeddings, the eight module structures on A over the bases B and C,
// balanced tensor products realized as explicit quotients of A (x) A with a
// stored linear section, and slice maps.

#pragma once

#include "mhad/algebra.hpp"

namespace mhad {

// A base algebra together with its embedding into M(A).
struct BaseEmbedding {
    FiniteAlgebra alg;               // B (or C) as an abstract algebra
    std::vector<Multiplier> img;     // image of each basis element in M(A)

    std::size_t dim() const { return img.size(); }

    // Left/right multiplication operators on A of a base element x.
    Mat lmul_on_A(const Vec& x) const;
    Mat rmul_on_A(const Vec& x) const;

    // The embedding must be a homomorphism with commuting (lam, rho) data;
    // verified by validate_base_embedding.
    bool is_homomorphism() const;
};

// One module structure: the action of every base basis element on A.
struct ModuleAction {
    bool left = true;            // left action x.a vs right action a.x
    std::vector<Mat> act;        // act[k] = action of base basis element k

    std::size_t base_dim() const { return act.size(); }
    std::size_t mod_dim() const { return act.empty() ? 0 : act[0].rows(); }

    // Action of an arbitrary base element.
    Mat of(const Vec& x) const;
};

// The eight structures. Subscript structures act by multiplication on the
// matching side; superscript structures act through the twist maps tB, tC
// by multiplication on the opposite side:
//   B_l : x.a = xa          B_r : a.x = ax
//   C_l : y.a = ya          C_r : a.y = ay
//   Bs_r: a.x = tB(x) a     Bs_l: x.a = a tB(x)
//   Cs_r: a.y = tC(y) a     Cs_l: y.a = a tC(y)
struct ModuleStructures {
    ModuleAction B_l, B_r, C_l, C_r;
    ModuleAction Bs_r, Bs_l, Cs_r, Cs_l;
};

// tB : B -> C and tC : C -> B are given as coordinate matrices.
ModuleStructures build_module_structures(const BaseEmbedding& B,
                                         const BaseEmbedding& C,
                                         const Mat& tB, const Mat& tC);

// Check that a module action really is one (associativity of the action and
// nondegeneracy span condition base . A = A).
bool module_action_ok(const FiniteAlgebra& base, const ModuleAction& m,
                      bool require_nondegenerate = true);

// A quotient of an ambient coordinate space by a relation subspace, with a
// projection and a section (proj * sect = id).
struct QuotientSpace {
    std::size_t ambient = 0;
    Subspace relations;
    Mat proj;  // dim x ambient
    Mat sect;  // ambient x dim

    std::size_t dim() const { return proj.rows(); }
    Vec project(const Vec& v) const { return proj * v; }
    Vec lift(const Vec& q) const { return sect * q; }
};

QuotientSpace make_quotient(std::size_t ambient, const std::vector<Vec>& relation_gens);

// The balanced tensor product M (x)_base N as a quotient of M (x) N by
// m.x (x) n - m (x) x.n.
struct TensorQuotient {
    ModuleAction right1;  // right action on the first factor
    ModuleAction left2;   // left action on the second factor
    QuotientSpace q;

    std::size_t n1() const { return right1.mod_dim(); }
    std::size_t n2() const { return left2.mod_dim(); }
};

TensorQuotient balanced_tensor(const ModuleAction& right1, const ModuleAction& left2);

// Quotient of M (x) N (x) P by the relations of q12 between legs 1,2 and of
// q23 between legs 2,3 (for coassociativity checks).
QuotientSpace triple_quotient(const TensorQuotient& q12, const TensorQuotient& q23);

// Induced map between quotients: returns proj_dst . ambient_map . sect_src
// after verifying that ambient_map maps src relations into dst relations;
// nullopt when the map does not descend.
std::optional<Mat> descend(const QuotientSpace& src, const QuotientSpace& dst,
                           const Mat& ambient_map);

// Induced map from a quotient to a plain space (relations must map to 0).
std::optional<Mat> descend_to_plain(const QuotientSpace& src, const Mat& ambient_map);

// Slice maps on the ambient tensor square, as matrices n1 x (n1 n2) or
// n2 x (n1 n2). chi is a module map from the sliced factor to the base
// (rows = base coordinates). The companion action tells how the base value
// acts on the surviving factor:
//   slice_second: m (x) n -> m . chi(n)   (right1 acts on factor 1)
//   slice_first : m (x) n -> chi(m) . n   (left2 acts on factor 2)
Mat slice_second_ambient(const ModuleAction& right1, const Mat& chi, std::size_t n2);
Mat slice_first_ambient(const ModuleAction& left2, const Mat& chi, std::size_t n1);

// Apply an operator to one leg of a tensor square: op (x) id or id (x) op.
Mat on_first_leg(const Mat& op, std::size_t n2);
Mat on_second_leg(const Mat& op, std::size_t n1);

}  // namespace mhad

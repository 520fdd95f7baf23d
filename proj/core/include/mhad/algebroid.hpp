// The central data model: an algebra A with two commuting base algebras
// B, C in M(A), twist anti-isomorphisms tB : B -> C and tC : C -> B, and
// two comultiplications given through their canonical-map representatives
// in A (x) A. On top of that: the six balanced tensor squares, the four
// canonical maps, the axiom battery, counits, the antipode, and the
// structural side conditions (bijectivity certificates, involution
// compatibility, firm bases, locally projective module structures).

#pragma once

#include "mhad/functional.hpp"
#include "mhad/report.hpp"

namespace mhad {

struct AlgebroidData {
    FiniteAlgebra A;
    BaseEmbedding B, C;
    Mat tB;  // dim C x dim B, column k = tB(e_k) in C coordinates
    Mat tC;  // dim B x dim C

    // Comultiplication representatives in A (x) A coordinates, indexed by
    // [a][b] with a the comultiplied element:
    //   dcr[a][b] = DeltaC(e_a) (1 (x) e_b)
    //   dcl[a][b] = DeltaC(e_a) (e_b (x) 1)
    //   dbl[a][b] = (e_b (x) 1) DeltaB(e_a)
    //   dbr[a][b] = (1 (x) e_b) DeltaB(e_a)
    // Stored flattened: entry a*n+b.
    std::vector<Vec> dcr, dcl, dbl, dbr;

    // Optional measuring functionals on the bases (coordinates of muB on
    // the basis of B, muC on the basis of C).
    std::optional<Functional> muB, muC;

    const Vec& dcr_at(std::size_t a, std::size_t b) const { return dcr[a * A.dim() + b]; }
    const Vec& dcl_at(std::size_t a, std::size_t b) const { return dcl[a * A.dim() + b]; }
    const Vec& dbl_at(std::size_t a, std::size_t b) const { return dbl[a * A.dim() + b]; }
    const Vec& dbr_at(std::size_t a, std::size_t b) const { return dbr[a * A.dim() + b]; }
};

// Everything derived from AlgebroidData that later stages need. The six
// tensor squares, with first-factor right action / second-factor left
// action in parentheses:
//   Q1 (tw-C, C-left)   target of Tl and Tr
//   Q2 (B-right, tw-B)  target of lT and rT
//   Q3 (tw-B, tw-B)     source of Tl
//   Q4 (B-right, B-left) source of Tr
//   Q5 (C-right, C-left) source of lT
//   Q6 (tw-C, tw-C)     source of rT
// where "tw" structures act through tB or tC on the opposite side.
struct Algebroid {
    AlgebroidData d;
    ModuleStructures mods;
    std::optional<Mat> tBinv, tCinv;
    TensorQuotient Q1, Q2, Q3, Q4, Q5, Q6;

    // Ambient n^2 x n^2 matrices with column (a,b) the representative.
    Mat Mdcr, Mdcl, Mdbl, Mdbr;

    // Canonical maps between the quotients (nullopt when the ambient map
    // does not descend, i.e. the input is not even a bialgebroid), and
    // their inverses when bijective.
    std::optional<Mat> Tl, Tr, lT, rT;
    std::optional<Mat> Tl_inv, Tr_inv, lT_inv, rT_inv;

    // Filled by compute_counits / compute_antipode.
    std::optional<Mat> epsC;  // dim C x n
    std::optional<Mat> epsB;  // dim B x n
    std::optional<Mat> S, Sinv;

    std::size_t n() const { return d.A.dim(); }

    // The left comultiplication of a as an endomorphism of Q1 (acting from
    // the left), and the right comultiplication as an endomorphism of Q2
    // (acting from the right); nullopt if the action does not descend.
    std::optional<Mat> comultC_endo(const Vec& a) const;
    std::optional<Mat> comultB_endo(const Vec& a) const;
};

// Build quotients and canonical maps. Never fails outright; missing
// descents surface as nullopt members and as failures in the batteries.
Algebroid build_algebroid(const AlgebroidData& d);

// Conditions (1)-(4) of the defining axiom list: algebra quality of A and
// the bases, commuting embeddings, module nondegeneracy and idempotency,
// twist anti-isomorphisms, nondegeneracy of the tensor squares over the
// two one-sided multiplications, representative consistency, bilinearity,
// multiplicativity, descent of all four canonical maps, and the four
// coassociativity identities on triple tensor quotients.
CheckReport validate_bialgebroid(const Algebroid& al);

// Solve the counit systems. Returns false (and leaves the fields empty)
// when a system has no solution; *rep records existence and uniqueness.
bool compute_counits(Algebroid& al, CheckReport* rep = nullptr);

// Solve the antipode from m (S (x) i) Tr = (epsB . i) on Q4, then verify
// the companion identity m (i (x) S) lT = (i . epsC) on Q5, the
// anti-automorphism property, bijectivity, and the restrictions
// S|_C = tB^-1 and S|_B = tC^-1 on the embedded bases.
bool compute_antipode(Algebroid& al, CheckReport* rep = nullptr);

// Bijectivity of the four canonical maps plus the four span conditions on
// functionals of the one-sided module structures, and independently the
// existence certificates for counits and antipode; both routes must agree.
CheckReport check_H1_H2(Algebroid& al);

// Identities valid in the regular case: the two inverse diagrams
// Tr (i (x) S) rT = (i (x) S) and lT (S (x) i) Tl = (S (x) i), the two
// flip-antipode squares with Sigma(S (x) S), the counit/antipode exchange
// identities, counit multiplicativity, and the pentagon for lT on the
// triple tensor.
CheckReport check_regular_identities(Algebroid& al);

// Involution compatibility: star subalgebras, twist/star exchange,
// star/comultiplication exchange, and the three counit/antipode/star
// identities.
CheckReport check_star(Algebroid& al);

// Firmness of B and C and local projectivity of the four one-sided module
// structures on A.
CheckReport check_local_projectivity(const Algebroid& al);

// Basis of the space of module maps X : M -> base with
// X act_k = reg_k X for every base basis element (reg is the left- or
// right-regular family of the base matching the handedness).
std::vector<Mat> module_hom_space(const ModuleAction& action,
                                  const std::vector<Mat>& reg);

// Apply an operator for a tensor square to two chosen legs of the triple
// tensor A (x) A (x) A (legs are 0-based, distinct, increasing).
Mat on_legs3(const Mat& op, std::size_t leg_a, std::size_t leg_b, std::size_t n);

}  // namespace mhad

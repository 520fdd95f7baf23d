// Weak multiplier Hopf algebras with integrals and their equivalence with
// measured algebroids over Frobenius bases: the finite axiom battery, the
// Frobenius-tuple validator, the passage to an algebroid through the
// source and target counital maps, and the reverse passage that rebuilds
// the total comultiplication from the separability idempotent.

#pragma once

#include "mhad/integration.hpp"

namespace mhad {

// A weak multiplier Hopf algebra on a finite-dimensional unital algebra.
// The comultiplication is carried through its four sandwich tables, all
// honest elements of A (x) A; E is the canonical idempotent Delta(1).
struct WMHASpec {
    FiniteAlgebra A;
    // Flattened a*n+b: Delta(a)(1 (x) b), Delta(a)(b (x) 1),
    // (b (x) 1)Delta(a), (1 (x) b)Delta(a).
    std::vector<Vec> dr, dl, ld, rd;
    Vec E;  // in A (x) A coordinates
    Functional eps;
    Functional phi, psi;

    const Vec& dr_at(std::size_t a, std::size_t b) const { return dr[a * A.dim() + b]; }
    const Vec& dl_at(std::size_t a, std::size_t b) const { return dl[a * A.dim() + b]; }
    const Vec& ld_at(std::size_t a, std::size_t b) const { return ld[a * A.dim() + b]; }
    const Vec& rd_at(std::size_t a, std::size_t b) const { return rd[a * A.dim() + b]; }
};

// The defining conditions on the finite data: the tables cohere with one
// element-valued comultiplication, that comultiplication is a full
// coassociative homomorphism, E is idempotent with the two-sided range
// conditions and the compatibility with Delta on both legs, the counit
// laws hold, and the integrals are faithful.
CheckReport validate_wmha(const WMHASpec& w);

// Frobenius tuple check for bases embedded in an n-dimensional algebra:
// E (in B (x) C coordinates) idempotent, the two leg-transport conditions
// through the twists, the two multiplicative normalizations, and the two
// weight normalizations.
CheckReport frobenius_validate(const BaseEmbedding& B, const BaseEmbedding& C,
                               const Mat& tB, const Mat& tC,
                               const Functional& muB, const Functional& muC,
                               const Mat& E, std::size_t n);

// The algebroid of a weak multiplier Hopf algebra: bases are the images
// of the source and target counital maps, twists are solved from the leg
// conditions on E, the tables are reused verbatim, the base weights are
// solved from the counit, and the partial integrals are the factorizations
// of phi through C and of psi through B.
struct WMHAModel {
    WMHASpec w;
    AlgebroidData data;
    Mat phiC, psiB;
    Mat Ebase;  // E in B (x) C coordinates
};
std::optional<WMHAModel> wmha_to_algebroid(const WMHASpec& w, CheckReport* rep = nullptr);

// The reverse passage: solve the separability idempotent of the base from
// its linear conditions, rebuild the total comultiplication tables as
// E-compressions of the algebroid tables, and read the counit off the
// weights. *rep records the section identities (projecting back along the
// quotients is the identity) and uniqueness of E.
std::optional<WMHASpec> algebroid_to_wmha(const MeasuredAlgebroid& m,
                                          Mat* Ebase = nullptr,
                                          CheckReport* rep = nullptr);

}  // namespace mhad

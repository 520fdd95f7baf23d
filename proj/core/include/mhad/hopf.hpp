// Finite-dimensional Hopf algebras as suppliers for the crossed-product
// and Yetter-Drinfeld constructions: group algebras and function algebras
// of finite groups, an axiom battery, the dual Hopf algebra on the basis
// of integral shifts, and the wrapping of a Hopf algebra as an algebroid
// over the trivial base.

#pragma once

#include "mhad/algebroid.hpp"

namespace mhad {

// A unital Hopf algebra over Q(i) with chosen integrals. Delta is stored
// columnwise: col a = Delta(e_a) in H (x) H coordinates.
struct HopfData {
    FiniteAlgebra H;
    Mat Delta;  // n^2 x n
    Functional eps;
    Mat S;
    Functional phi, psi;  // left and right integral
};

// kG for a finite group given by its multiplication table; index 0 must be
// the neutral element. Group-likes, Haar integral at the neutral element.
HopfData group_algebra_hopf(const std::vector<std::vector<std::size_t>>& table);

// k^G, pointwise functions with the comultiplication dual to the product;
// both integrals are the counting functional.
HopfData function_algebra_hopf(const std::vector<std::vector<std::size_t>>& table);

// Hopf axioms on the finite data: comultiplication a homomorphism,
// coassociativity, counit laws, antipode laws, the antipode a bijective
// anti-homomorphism, and invariance of both integrals.
CheckReport validate_hopf(const HopfData& h);

// The dual Hopf algebra on the shift basis {e_i . phi}, with the product
// and comultiplication solved from the pairing, the dual right integral
// h . phi -> eps(h) and the dual left integral composed through the dual
// antipode. Requires phi faithful; nullopt otherwise.
std::optional<HopfData> dual_hopf(const HopfData& h);

// Pairing grid of the shift basis: G(j, i) = phi(e_j e_i). Column i is the
// value row of the dual basis functional e_i . phi.
Mat hopf_shift_grid(const HopfData& h);

// A Hopf algebra is exactly an algebroid over the one-dimensional base.
struct HopfModel {
    HopfData h;
    AlgebroidData data;
    Mat phiC, psiB;  // 1 x n rows of the integrals
};
HopfModel hopf_algebroid(const HopfData& h);

}  // namespace mhad

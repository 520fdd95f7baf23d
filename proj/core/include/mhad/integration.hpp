// Partial integrals, base weights, the measured-structure validator,
// modular automorphisms of the total integrals and weights, and the
// modular elements relating left and right integrals.

#pragma once

#include "mhad/algebroid.hpp"

namespace mhad {

// An algebroid (with counits and antipode already computed) together with
// faithful weights on the bases and partial integrals
//   phiC : A -> C  (left invariant,  C-bimodule map)
//   psiB : A -> B  (right invariant, B-bimodule map)
// and everything derived from them. The total integrals are always the
// compositions phi = muC . phiC and psi = muB . psiB; they are never
// independent inputs, so they cannot disagree with the partial data.
struct MeasuredAlgebroid {
    Algebroid al;
    Functional muB, muC;
    Mat phiC;  // dim C x n
    Mat psiB;  // dim B x n
    Functional phi, psi;  // rows on A, derived

    // Partial maps of the total integrals through the bases: phi factored
    // through B on the left and on the right, psi through C likewise.
    // Filled by validate_measured.
    std::optional<Mat> bphi, phib;  // dim B x n
    std::optional<Mat> cpsi, psic;  // dim C x n

    // Modular automorphisms of phi, psi (on A) and of muB, muC (on the
    // bases). Filled by modular_automorphisms.
    std::optional<Mat> sigmaPhi, sigmaPsi;
    std::optional<Mat> sigmaB, sigmaC;

    // Modular elements: psi = delta . phi, phi . S = deltaPlus . phi,
    // phi . S^-1 = phi . deltaMinus. Filled by modular_element.
    std::optional<Multiplier> delta, deltaPlus, deltaMinus;
};

// Assemble the struct and derive the total integrals. The algebroid must
// already carry counits and antipode.
MeasuredAlgebroid make_measured(Algebroid al, Functional muB, Functional muC,
                                Mat phiC, Mat psiB);

// The three equivalent left-invariance conditions for phiC, each verified
// separately so an inconsistency between them (which the theory rules out)
// would surface as a report failure:
//   against the left comultiplication, sliced on the second leg through
//   the twisted action; against the right comultiplication, sliced through
//   the inverse twist; and the square that routes one through the antipode
//   and the flipped mixed canonical map.
CheckReport validate_left_integral(const Mat& phiC, const Algebroid& al);

// Mirror image for psiB: first-leg slices and the opposite square.
CheckReport validate_right_integral(const Mat& psiB, const Algebroid& al);

// The full measured-structure battery: weight/twist and weight/counit
// compatibility, faithfulness of the weights, both invariance batteries,
// faithfulness of the total integrals, existence and surjectivity of the
// one-sided partial maps of phi through B and of psi through C, and
// surjectivity of the counits. Fills bphi, phib, cpsi, psic.
CheckReport validate_measured(MeasuredAlgebroid& m);

// Solve sigma from omega(ab) = omega(b sigma(a)) for phi, psi, muB, muC,
// verify each is an algebra automorphism, and verify the structural
// identities: the weight automorphisms are the composed twists, the
// integral automorphisms restrict to them on the embedded bases, and both
// comultiplications exchange the integral automorphisms with the squared
// antipode on the other leg. When the module structures are locally
// projective, additionally: the integral automorphisms preserve the
// embedded bases, leave the weights invariant, and intertwine the
// one-sided partial maps.
CheckReport modular_automorphisms(MeasuredAlgebroid& m);

// Solve the three modular elements as multipliers of A from their defining
// equations, and verify uniqueness and invertibility.
CheckReport modular_element(MeasuredAlgebroid& m);

// Star case: self-adjointness and exact positive semidefiniteness of the
// Gram grids of muB, muC, phi and psi.
CheckReport check_positivity(const MeasuredAlgebroid& m);

}  // namespace mhad

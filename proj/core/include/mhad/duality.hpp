// The dual of a measured algebroid: the space of functionals obtained by
// shifting the total integrals, the two actions of that space on A, the
// convolution product, the dual comultiplications solved from the four
// evaluation pairings, the full re-validation of the dual as a measured
// algebroid, the multiplier-like functionals, biduality, and cointegrals.

#pragma once

#include "mhad/integration.hpp"

namespace mhad {

// The subspace A.phi = phi.A = A.psi = psi.A of functionals on A, in the
// fixed basis {e_i . phi}. The matrices via* express the other three
// shift identifications in that basis: the coordinates of phi.e_i,
// psi.e_i and e_i.psi are the columns of viaPhiRight, viaPsiLeft and
// viaPsiRight. pm[i] holds the eight partial maps of e_i . phi.
struct DualSpace {
    Mat G;     // G(j, i) = phi(e_j e_i); column i is the row of e_i . phi
    Mat Ginv;
    Mat viaPhiRight, viaPsiLeft, viaPsiRight;
    std::vector<PartialMaps> pm;

    Vec values(const Vec& coords) const { return G * coords; }
    Vec coords(const Vec& values) const { return Ginv * values; }
};

// Build the dual space. Fails (and leaves *out partially filled) when phi
// is not faithful, when the four shift images disagree, or when some
// basis functional is not fully factorizable.
CheckReport dual_space(const MeasuredAlgebroid& m, DualSpace* out);

// omega |> a (forward) and a <| omega (backward) for one factorizable
// functional, as multipliers of A assembled from sliced comultiplication
// representatives. nullopt when a slice needs a partial map that omega
// does not have.
struct ActPair {
    Multiplier fwd, bwd;
};
std::optional<ActPair> act(const Algebroid& al, const PartialMaps& pm, const Vec& a);

// Both actions of every dual basis functional, certified to land inside A
// (not just in M(A)) and stored as element matrices:
//   tri[u]  * a = omega_u |> a
//   itri[u] * a = a <| omega_u
struct DualActions {
    std::vector<Mat> tri, itri;

    Mat of_tri(const Vec& coords) const;
    Mat of_itri(const Vec& coords) const;
};
CheckReport build_actions(const MeasuredAlgebroid& m, const DualSpace& ds,
                          DualActions* out);

// Identity battery for the actions: the counit acts as the identity and
// reads off evaluation, the two actions commute, the strong-invariance
// exchange rules, the antipode and involution rules, and the bimodule
// rules for base elements moved onto the functional on either side.
CheckReport act_identities(const MeasuredAlgebroid& m, const DualSpace& ds,
                           const DualActions& ac);

// The dual measured algebroid. Base slots swap (the B slot of the dual is
// C, the C slot is B, the twists are the inverted twists), the product is
// convolution through the forward action, and the comultiplication tables
// are solved from the evaluation pairings against the primal canonical
// maps. The dual is then rebuilt and re-validated from scratch with the
// generic batteries: nothing about it is assumed.
struct DualResult {
    DualSpace space;
    DualActions actions;
    Mat ara, aba, ala, aca;  // pairing grids, rows (p,q) dual, cols (a,b) primal
    MeasuredAlgebroid dual;
};
CheckReport build_dual(const MeasuredAlgebroid& m, DualResult* out);

// Closed forms of the dual structure maps against the generically solved
// ones: counits as twisted partial integrals, the antipode as
// precomposition with the primal antipode, the dual integrals and their
// modular automorphisms in terms of primal data, the involution on
// shifted functionals, and the partial maps of evaluation functionals.
// Requires modular data on both m and dr.dual.
CheckReport dual_structure_identities(const MeasuredAlgebroid& m,
                                      const DualResult& dr);

// Functionals whose two actions send A into A on both sides. Returns the
// coordinate space inside the factorizable functionals and checks the
// isomorphism with the multiplier algebra of the dual.
CheckReport dual_multiplier_space(const MeasuredAlgebroid& m, const DualResult& dr,
                                  Subspace* out = nullptr);

// Evaluation embedding a -> (omega -> omega(a)) into a freshly dualized
// dual: isomorphism of measured algebroids onto the double dual.
CheckReport biduality(const MeasuredAlgebroid& m, const DualResult& dr);

// Left cointegrals (a l = eps-value times l) and right cointegrals, their
// normalizations against the partial integrals, the equivalence of
// normalizability with unitality of the dual, and the correspondence
// between cointegrals of the dual and partial-integral functionals on A.
// dr may be null; the dual-side checks are skipped then.
struct CointegralResult {
    Subspace left, right;                // inside A
    std::optional<Vec> normalizedLeft;   // l with phiC(l) = 1
    std::optional<Vec> normalizedRight;  // r with psiB(r) = 1
};
CheckReport cointegrals(const MeasuredAlgebroid& m, const DualResult* dr,
                        CointegralResult* out = nullptr);

}  // namespace mhad

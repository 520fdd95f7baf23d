// Morphisms between algebroids: a non-degenerate homomorphism into the
// multiplier algebra of the target, compatible with the bases, the twists
// and both comultiplications. The comultiplications are first extended
// from elements to arbitrary multipliers through the canonical maps; the
// compatibility conditions are then checked elementwise on basis tuples
// after projecting to the target tensor squares. On top of that: the
// antipode- and counit-preservation theorems as executable checks, and
// the pairing-based criterion for maps into a constructed dual.

#pragma once

#include "mhad/duality.hpp"

namespace mhad {

// A candidate morphism: the image of every source basis element as a
// multiplier of the target algebra. Both algebroids must be fully built
// (canonical maps, counits, antipode).
struct MorphismSpec {
    const Algebroid* src = nullptr;
    const Algebroid* dst = nullptr;
    std::vector<Multiplier> pi;
};

// Extend the map to a multiplier T of the source:
//   ext(T) (pi(d) a) = pi(Td) a   and   (a pi(d)) ext(T) = a pi(dT).
// Well defined exactly when the map is non-degenerate; nullopt when the
// defining systems have no solution.
std::optional<Multiplier> extend_through(const MorphismSpec& sp, const Multiplier& T);

// The comultiplications of a multiplier T of A, as endomorphisms of the
// two target tensor squares:
//   on the left square  (classes of DeltaC-representatives), DeltaC(T)
//   acts from the left through Tr (T (x) 1) Tr^-1;
//   on the right square, DeltaB(T) acts from the right through
//   lT (1 (x) T) lT^-1.
// nullopt when a leg multiplication fails to descend or a canonical map
// is not bijective. When rep is given it records, for the restriction to
// elements, agreement with the comultiplication tables and the
// homomorphism property against elementwise comultiplications.
struct ExtendedComult {
    Mat onQ1, onQ2;
};
std::optional<ExtendedComult> extend_comultiplications(const Algebroid& al,
                                                       const Multiplier& T,
                                                       CheckReport* rep = nullptr);

// The full definition: homomorphism, non-degeneracy, base compatibility
// (images of the source bases land in and span the target bases, twists
// intertwine), and both comultiplication conditions on all basis tuples.
CheckReport validate_morphism(const MorphismSpec& sp);

// Theorem battery for a validated morphism: the antipodes commute with
// the map, and the counits of the target compose with the map through
// the counits of the source.
CheckReport check_antipode_preserved(const MorphismSpec& sp);

// Criterion for a map into the dual of the measured algebroid m (built as
// dr): instead of the raw comultiplication conditions, the two evaluation
// identities against products of acted elements are tested, and the
// verdict is compared with validate_morphism run directly on the dual.
CheckReport check_morphism_into_dual(const MeasuredAlgebroid& m, const DualResult& dr,
                                     const Algebroid& src,
                                     const std::vector<Multiplier>& pi);

// Plumbing: the composite of two candidate morphisms (outer after inner).
// nullopt when the extension of the outer map fails on some image.
std::optional<MorphismSpec> compose_morphisms(const MorphismSpec& outer,
                                              const MorphismSpec& inner);

}  // namespace mhad

// Functionals on A, factorization through the bases (partial integrals /
// partial maps), tensor products of factorizable functionals, and the
// bimodule action on factorizable functionals.

#pragma once

#include "mhad/bimodule.hpp"

namespace mhad {

// A functional is a row vector of values on the basis of A.
using Functional = Vec;

inline GRat evalf(const Functional& f, const Vec& a) { return dot(f, a); }

// Functional precomposed with an operator on A.
Functional precompose(const Functional& f, const Mat& op);

// The eight partial maps of a functional, where defined. Naming follows the
// structure each one respects:
//   lB : (B-left)  lB(x a)     = x lB(a),      mu_B . lB = omega
//   rB : (B-right) rB(a x)     = rB(a) x,      mu_B . rB = omega
//   lC, rC : same over C
//   sBl: (B-left, twisted)  sBl(a tB(x)) = x sBl(a),   mu_B . sBl = omega
//   sBr: (B-right, twisted) sBr(tB(x) a) = sBr(a) x,   mu_B . sBr = omega
//   sCl, sCr : same over C with tC
struct PartialMaps {
    std::optional<Mat> lB, rB, lC, rC;
    std::optional<Mat> sBl, sBr, sCl, sCr;

    bool fully_factorizable() const {
        return lB && rB && lC && rC && sBl && sBr && sCl && sCr;
    }
};

// Solve one partial map: X with X . act_k = reg_k . X for every base basis
// element k, and mu . X = omega. reg is the left- or right-regular family of
// the base matching the handedness of the action. Returns nullopt when no
// solution exists, and reports via *unique whether it is unique.
std::optional<Mat> solve_partial(const ModuleAction& action,
                                 const std::vector<Mat>& base_regular,
                                 const Functional& mu,
                                 const Functional& omega,
                                 bool* unique = nullptr);

// All eight partials of one functional.
PartialMaps factorize(const ModuleStructures& s,
                      const BaseEmbedding& B, const BaseEmbedding& C,
                      const Functional& muB, const Functional& muC,
                      const Functional& omega);

// Subspace of A^v (row vectors) of functionals factorizable for one given
// structure pair; used for the intersection identities.
Subspace factorizable_space(const ModuleAction& left_action,
                            const std::vector<Mat>& left_regular,
                            const Functional& mu_left,
                            const ModuleAction& right_action,
                            const std::vector<Mat>& right_regular,
                            const Functional& mu_right);

// (upsilon (x)_muC omega)(m (x) n) = muC(upsilon_C(m) lC_omega(n)), as a
// functional on the ambient tensor square.
Functional tensor_functionals(const FiniteAlgebra& base,
                              const Functional& mu,
                              const Mat& ups_right_partial,
                              const Mat& omega_left_partial);

// (y . omega . x)(m) = omega(x m y) using multiplier actions.
Functional sandwich(const Functional& omega, const Mat& lmul_x, const Mat& rmul_y);

}  // namespace mhad

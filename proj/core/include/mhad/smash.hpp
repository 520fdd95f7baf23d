// Algebroids from Hopf-algebra actions: the two-sided crossed product
// C (x) H (x) C^op of a module algebra, and the smash product C # H of a
// braided-commutative Yetter-Drinfeld algebra. Both come with the partial
// integrals, the expected counits and antipode (solved from the defining
// formulas on a spanning family), and the embeddings of the ingredients,
// so the generic machinery can be cross-checked against closed forms.

#pragma once

#include "mhad/hopf.hpp"

namespace mhad {

// A unital left module algebra over a Hopf algebra, with an invariant
// faithful normalized functional. action is dim C x (dim H * dim C),
// column k*c+j = h_k acting on e_j.
struct SmashSpec {
    FiniteAlgebra C;
    HopfData H;
    Mat action;
    Functional muC;

    Vec act(std::size_t k, std::size_t j) const {
        return action.col(k * C.dim() + j);
    }
};

// Module axioms, module-algebra compatibility, fullness of the action, and
// the conditions on muC: faithful, normalized, action-invariant, and
// admitting a modular automorphism.
CheckReport validate_smash(const SmashSpec& s);

// The crossed product on C (x) H (x) C^op, with basis index
// (i*h + k)*c + j standing for the product e_i h_k e_j^op.
struct CrossedModel {
    SmashSpec s;
    Mat sigmaC, sigmaCinv;  // modular automorphism of muC
    AlgebroidData data;
    Mat phiC, psiB;
    // Closed forms to compare the generic solutions against. The counits
    // and antipode are stated on products in the opposite order, so they
    // are solved from that spanning family.
    Mat epsC_expected, epsB_expected;  // base dim x n
    Mat S_expected;                    // n x n
    std::vector<Vec> embC, embH, embB;  // ingredient bases in A coordinates
};
std::optional<CrossedModel> crossed_product(const SmashSpec& s);

// A braided-commutative Yetter-Drinfeld algebra: a module algebra that is
// also a right comodule algebra over the opposite Hopf algebra. coaction
// is (c*h) x c, column j = the coaction of e_j in C (x) H coordinates.
struct YDSpec {
    FiniteAlgebra C;
    HopfData H;
    Mat action;
    Mat coaction;
    Functional muC;

    Vec act(std::size_t k, std::size_t j) const {
        return action.col(k * C.dim() + j);
    }
};

// Everything validate_smash checks, plus: comodule coassociativity and
// counit law, the comodule-algebra property over the opposite algebra,
// the Yetter-Drinfeld exchange condition, both braided-commutativity
// identities, and coaction-invariance of muC.
CheckReport validate_yd(const YDSpec& s);

// The smash product on C (x) H, basis index i*h + k standing for
// e_i # h_k. The source base is the image of the coaction.
struct YDModel {
    YDSpec s;
    AlgebroidData data;
    Mat phiC, psiB;
    Mat epsC_expected, epsB_expected;
    Mat S_expected;
    std::vector<Vec> embC, embH, embB;
};
std::optional<YDModel> yd_algebroid(const YDSpec& s);

}  // namespace mhad

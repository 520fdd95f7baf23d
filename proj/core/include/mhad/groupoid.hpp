// Finite groupoids with a positive weight on units, and the function
// algebra model they generate: A = functions on arrows with pointwise
// multiplication, bases pulled back along source and target, the
// comultiplication dual to composition, fiber-sum partial integrals, and
// the expected counits, antipode and modular data used as oracles.

#pragma once

#include "mhad/algebroid.hpp"

namespace mhad {

struct GroupoidSpec {
    std::size_t num_arrows = 0;
    std::vector<std::size_t> src, tgt;  // arrow -> unit arrow
    // compose[i][j] = i after j, defined exactly when src[i] == tgt[j].
    std::vector<std::vector<std::optional<std::size_t>>> compose;
    std::vector<std::size_t> inv;
    std::vector<std::size_t> units;  // ascending list of unit arrows
    std::vector<Rat> weights;        // one positive weight per entry of units

    // Position of a unit arrow inside `units`, or npos.
    std::size_t unit_index(std::size_t arrow) const;
    Rat weight_at(std::size_t arrow) const { return weights[unit_index(arrow)]; }

    // Weight ratio of target over source, one value per arrow.
    std::vector<Rat> cocycle() const;
    // True when every cocycle value is a square of a rational; required by
    // the dual convolution oracle (never by the generic duality).
    bool cocycle_square(std::vector<Rat>* roots = nullptr) const;
};

// A group is a groupoid with one unit; `table[i][j]` is the product, index
// 0 must be the neutral element.
GroupoidSpec group_groupoid(const std::vector<std::vector<std::size_t>>& table);

// The pair groupoid on k points: arrows (i, j), composition
// (i, j)(j, l) = (i, l), units on the diagonal.
GroupoidSpec pair_groupoid(std::size_t k, std::vector<Rat> weights);

// Axioms on the finite tables: unit laws, composability bookkeeping,
// associativity, inverses, weight positivity.
CheckReport validate_groupoid(const GroupoidSpec& g);

struct GroupoidModel {
    GroupoidSpec spec;
    AlgebroidData data;     // with muB, muC set from the weights
    Mat phiC;               // left partial integral A -> C, fiber sum over target
    Mat psiB;               // right partial integral A -> B, fiber sum over source
    Mat epsC_expected;      // restriction to units, pulled back along target
    Mat epsB_expected;      // restriction to units, pulled back along source
    Mat S_expected;         // f -> f composed with arrow inversion
    Vec D;                  // weight cocycle as diagonal entries, per arrow
};

GroupoidModel groupoid_algebroid(const GroupoidSpec& g);

// Expected structure of the dual in the shift basis {omega_a = delta_a . phi}.
// The normalized functionals fhat_a = D^{-1/2}(a) omega_a multiply by plain
// convolution, so omega_a carries a D^{1/2} twist into every formula below.
// Requires all cocycle values to be rational squares; nullopt otherwise (the
// generic duality never needs this, only the oracle comparison does).
struct GroupoidDualOracle {
    std::vector<Rat> droot;      // D^{1/2} per arrow
    Mat G;                       // pairing grid phi(e_j e_i): diag of weight(tgt)
    std::vector<Vec> mul;        // flattened a*n+b: omega_a omega_b in shift coords
    std::vector<Mat> tri, itri;  // forward / backward action of each omega_a
    Functional phiHat, psiHat;   // dual integrals on the shift basis
    Mat S;                       // dual antipode: D(a) times the inverted arrow
    Mat star;                    // dual involution, same twist
};
std::optional<GroupoidDualOracle> groupoid_dual_oracle(const GroupoidSpec& g);

}  // namespace mhad

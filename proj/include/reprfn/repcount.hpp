#pragma once

#include "reprfn/blockset.hpp"
#include "reprfn/numeric.hpp"

namespace reprfn {

// Weights of n = k1*a1 + k2*a2.
struct WeightPair {
    Int k1 = 1;
    Int k2 = 2;
};

// R1: ordered pairs a + a' = n; R2: pairs with a < a'; R3: pairs with a <= a'.
enum class ClassicVariant { R1, R2, R3 };

// Reference count: walks every a2 in [0, n/k2] and tests membership of both
// components directly. O(n/k2) membership queries.
Int count_weighted_oracle(const BlockSet& set, const Int& n, const WeightPair& w);

// Same value as the oracle, computed block against block: for each pair of
// blocks the admissible a2 form an interval intersected with a residue class
// mod k1/gcd(k1,k2), counted in closed form.
Int count_weighted(const BlockSet& set, const Int& n, const WeightPair& w);

Int count_classic(const BlockSet& set, const Int& n, ClassicVariant variant);

}  // namespace reprfn

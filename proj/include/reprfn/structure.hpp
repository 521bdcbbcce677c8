#pragma once

#include "reprfn/blockset.hpp"
#include "reprfn/numeric.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace reprfn {

// Smallest odd period a, then smallest start i0, with t_{i+a} = k t_i for
// every checkable i >= i0 and at least a checkable relations. Throws
// DomainError when fewer than two boundaries are given.
std::optional<TailRule> detect_tail(std::span<const Int> boundaries, const Int& k);

// Extends seed (length a, odd) by t_{i+a} = k t_i, storing every boundary up
// to limit and never fewer than the seed itself. Tail rule (a, k, 0).
BlockSet generate_from_seed(std::span<const Int> seed, std::size_t a, const Int& k, const Int& limit);

struct GSelection {
    Int spread;         // T = 4 (t_{a+2} - t_0)
    std::size_t g = 1;  // least odd g with k^g > T
};

// Requires a tail rule starting at index 0 (see BlockSet::truncated).
GSelection select_g(const BlockSet& set);

// n = (k^g + 1) m + r, with m in [k^s t_l, k^s t_{l+1}) and 0 <= l < a.
struct Decomposition {
    Int n;
    Int m;
    Int r;
    std::size_t s = 0;
    std::size_t ell = 0;
    std::size_t g = 1;
};

// Throws DomainError when m < t_0 or the set has no tail starting at 0.
Decomposition decompose(const BlockSet& set, const Int& n, std::size_t g);

// k = base^p and l = base^q with gcd(p, q) = 1 when dependent.
struct MultiplicativeProfile {
    bool dependent = false;
    Int base;
    std::size_t p = 0;
    std::size_t q = 0;
};

MultiplicativeProfile multiplicative_profile(const Int& k, const Int& l);

// True iff log k / log l is a ratio of two odd positive integers.
bool intersection_nonempty(const Int& k, const Int& l);

// x = base^exponent with the largest possible exponent (base is not itself a
// perfect power). x >= 2.
struct PerfectPower {
    Int base;
    std::size_t exponent = 1;
};
PerfectPower primitive_power(const Int& x);

// floor(x^(1/e)) for x >= 0, e >= 1.
Int integer_root(const Int& x, std::size_t e);

}  // namespace reprfn

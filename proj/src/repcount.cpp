#include "reprfn/repcount.hpp"

#include <algorithm>

namespace reprfn {

namespace {

void check_weights(const WeightPair& w) {
    if (w.k1 < 1 || w.k2 < 1) throw DomainError("weights must be positive");
}

// Modular inverse of x mod m (gcd(x, m) == 1, m >= 1).
Int inverse_mod(const Int& x, const Int& m) {
    if (m == 1) return 0;
    Int old_r = x % m, r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    Int inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

}  // namespace

Int count_weighted_oracle(const BlockSet& set, const Int& n, const WeightPair& w) {
    check_weights(w);
    if (n < 0) return 0;
    Int count = 0;
    for (Int a2 = 0; w.k2 * a2 <= n; ++a2) {
        const Int rest = n - w.k2 * a2;
        if (rest % w.k1 != 0) continue;
        if (set.contains(a2) && set.contains(rest / w.k1)) ++count;
    }
    return count;
}

Int count_weighted(const BlockSet& set, const Int& n, const WeightPair& w) {
    check_weights(w);
    if (n < 0) return 0;

    // k2*a2 = n (mod k1) is solvable iff gcd | n; then a2 = residue (mod modulus).
    const Int g = gcd(w.k1, w.k2);
    if (n % g != 0) return 0;
    const Int modulus = w.k1 / g;
    const Int residue = ((n / g) % modulus) * inverse_mod((w.k2 / g) % modulus, modulus) % modulus;
    auto count_in = [&](const Int& lo, const Int& hi) -> Int {
        if (hi < lo) return 0;
        return floor_div(hi - residue, modulus) - floor_div(lo - 1 - residue, modulus);
    };

    const std::vector<Interval> blocks = set.materialize(n + 1);
    const Int a2_max = n / w.k2;
    Int total = 0;
    for (const Interval& b2 : blocks) {
        if (b2.lo > a2_max) break;
        const Int lo2 = b2.lo;
        const Int hi2 = std::min<Int>(b2.hi - 1, a2_max);
        // a1 ranges over [(n - k2*hi2)/k1, (n - k2*lo2)/k1] as a2 sweeps the block.
        const Int a1_lo = ceil_div(n - w.k2 * hi2, w.k1);
        const Int a1_hi = floor_div(n - w.k2 * lo2, w.k1);
        auto it = std::upper_bound(blocks.begin(), blocks.end(), a1_lo,
                                   [](const Int& v, const Interval& b) { return v < b.hi; });
        for (; it != blocks.end() && it->lo <= a1_hi; ++it) {
            // k1*a1 = n - k2*a2 with lo1 <= a1 <= hi1 - 1.
            const Int lo = std::max<Int>(lo2, ceil_div(n - w.k1 * (it->hi - 1), w.k2));
            const Int hi = std::min<Int>(hi2, floor_div(n - w.k1 * it->lo, w.k2));
            total += count_in(lo, hi);
        }
    }
    return total;
}

Int count_classic(const BlockSet& set, const Int& n, ClassicVariant variant) {
    const Int ordered = count_weighted(set, n, WeightPair{1, 1});
    if (variant == ClassicVariant::R1) return ordered;
    const Int diagonal = (n >= 0 && n % 2 == 0 && set.contains(n / 2)) ? 1 : 0;
    const Int strict = (ordered - diagonal) / 2;
    return variant == ClassicVariant::R2 ? strict : strict + diagonal;
}

}  // namespace reprfn

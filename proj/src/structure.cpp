#include "reprfn/structure.hpp"

#include <boost/multiprecision/integer.hpp>

#include <string>

namespace reprfn {

namespace {

void require_lawful_tail(const BlockSet& set) {
    if (!set.has_tail()) throw DomainError("operation requires a set with a tail rule");
    if (set.tail()->start != 0)
        throw DomainError("operation requires a tail rule starting at index 0; truncate first");
}

}  // namespace

std::optional<TailRule> detect_tail(std::span<const Int> boundaries, const Int& k) {
    const std::size_t count = boundaries.size();
    if (count < 2) throw DomainError("insufficient data: need at least two boundaries");
    if (k < 2) throw DomainError("ratio k must be at least 2");
    for (std::size_t i = 1; i < count; ++i) {
        if (boundaries[i] <= boundaries[i - 1])
            throw DomainError("boundaries must be strictly increasing");
    }

    for (std::size_t a = 1; 2 * a <= count; a += 2) {
        // Relations t_{i+a} = k t_i hold for all i >= start exactly when start
        // is past the last failing index.
        std::size_t start = 0;
        for (std::size_t i = 0; i + a < count; ++i) {
            if (boundaries[i + a] != k * boundaries[i]) start = i + 1;
        }
        if (count - a >= start + a) return TailRule{a, k, start};
    }
    return std::nullopt;
}

BlockSet generate_from_seed(std::span<const Int> seed, std::size_t a, const Int& k, const Int& limit) {
    if (a == 0 || a % 2 == 0) throw DomainError("period a must be an odd positive integer");
    if (seed.size() != a) throw DomainError("seed length must equal the period a");
    if (k < 2) throw DomainError("ratio k must be at least 2");
    for (std::size_t i = 0; i < seed.size(); ++i) {
        if (seed[i] < 0) throw DomainError("seed boundaries must be nonnegative");
        if (i > 0 && seed[i] <= seed[i - 1]) throw DomainError("seed must be strictly increasing");
    }
    if (k * seed.front() <= seed.back())
        throw DomainError("seed violates k * t_0 > t_{a-1}; the extension would not increase");

    std::vector<Int> bounds(seed.begin(), seed.end());
    for (std::size_t i = a;; ++i) {
        Int next = k * bounds[i - a];
        if (next > limit) break;
        bounds.push_back(std::move(next));
    }
    return BlockSet(std::move(bounds), true, TailRule{a, k, 0});
}

GSelection select_g(const BlockSet& set) {
    require_lawful_tail(set);
    const auto a = static_cast<std::int64_t>(set.tail()->period);
    const Int& k = set.tail()->ratio;
    GSelection out;
    out.spread = 4 * (set.boundary_at(static_cast<std::size_t>(a + 2)) - set.boundary_at(0));
    Int power = k;
    out.g = 1;
    while (power <= out.spread) {
        power *= k * k;
        out.g += 2;
    }
    return out;
}

Decomposition decompose(const BlockSet& set, const Int& n, std::size_t g) {
    require_lawful_tail(set);
    if (g == 0 || g % 2 == 0) throw DomainError("g must be an odd positive integer");
    if (n < 0) throw DomainError("n must be nonnegative");
    const std::size_t a = set.tail()->period;
    const Int& k = set.tail()->ratio;

    Decomposition d;
    d.n = n;
    d.g = g;
    const Int modulus = pow_int(k, g) + 1;
    d.m = n / modulus;
    d.r = n % modulus;
    const Int& t0 = set.boundaries().front();
    if (d.m < t0)
        throw DomainError("n below the supported range: m = " + d.m.str() + " < t_0 = " + t0.str());

    // Lattice k^s t_l tiles [t_0, inf) since k^s t_a = k^{s+1} t_0.
    Int scale = 1;
    while (scale * k * t0 <= d.m) {
        scale *= k;
        ++d.s;
    }
    d.ell = 0;
    while (d.ell + 1 < a && scale * set.boundary_at(d.ell + 1) <= d.m) ++d.ell;
    return d;
}

Int integer_root(const Int& x, std::size_t e) {
    if (x < 0) throw DomainError("integer_root of a negative number");
    if (e == 0) throw DomainError("integer_root with exponent 0");
    if (x < 2 || e == 1) return x;
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    Int lo = 1;
    Int hi = Int(1) << (bits / e + 1);
    // Invariant: lo^e <= x < hi^e.
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (pow_int(mid, e) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

PerfectPower primitive_power(const Int& x) {
    if (x < 2) throw DomainError("primitive_power requires x >= 2");
    const std::size_t max_exp = boost::multiprecision::msb(x);
    for (std::size_t e = max_exp; e >= 2; --e) {
        Int root = integer_root(x, e);
        if (pow_int(root, e) == x) return {root, e};
    }
    return {x, 1};
}

MultiplicativeProfile multiplicative_profile(const Int& k, const Int& l) {
    if (k < 2 || l < 2) throw DomainError("k and l must be at least 2");
    const PerfectPower pk = primitive_power(k);
    const PerfectPower pl = primitive_power(l);
    MultiplicativeProfile out;
    if (pk.base != pl.base) return out;
    // Distinct primitive bases generate multiplicatively independent groups,
    // so a common base exists iff the primitive bases agree.
    std::size_t a = pk.exponent, b = pl.exponent;
    while (b != 0) {
        std::size_t t = a % b;
        a = b;
        b = t;
    }
    out.dependent = true;
    out.base = pow_int(pk.base, a);
    out.p = pk.exponent / a;
    out.q = pl.exponent / a;
    return out;
}

bool intersection_nonempty(const Int& k, const Int& l) {
    const MultiplicativeProfile prof = multiplicative_profile(k, l);
    return prof.dependent && prof.p % 2 == 1 && prof.q % 2 == 1;
}

}  // namespace reprfn

#pragma once

// Finite-horizon experiments. Nothing here certifies membership in the
// infinite family; every report states the range it actually checked.

#include "reprfn/blockset.hpp"
#include "reprfn/numeric.hpp"
#include "reprfn/witness.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace reprfn {

struct PsiSample {
    Int n;
    Int r_set;
    Int r_complement;
};

struct PsiReport {
    Int k;
    Int n_lo;
    Int n_hi;
    Int equal_count;
    std::optional<Int> first_violation;
    std::vector<PsiSample> per_n;  // filled only on request
};

// Compares r_{1,k}(A, n) with r_{1,k}(N \ A, n) for every n in [n_lo, n_hi].
PsiReport verify_equality(const BlockSet& set, const Int& k, const Int& n_lo, const Int& n_hi,
                          bool keep_series = false, unsigned workers = 1);

struct RatioSample {
    Int n;
    Int r_set;
    Int r_complement;
    Side side = Side::set;
    Rational ratio;  // count on `side` divided by n
};

struct RatioScan {
    std::vector<RatioSample> series;
    Int window_lo;  // min_ratio covers sampled n >= window_lo
    std::optional<Rational> min_ratio;
    std::optional<Rational> theoretical_floor;  // 1 / (k^5 t_a (k^g + 2)) for tail sets
    Rational trivial_ceiling;                   // 1 / k
    Int stride;
};

// Samples n_lo, n_lo + stride, ... and always n_hi. The ratio uses the side
// containing m's block when n decomposes, the set itself otherwise.
RatioScan scan_ratio(const BlockSet& set, const Int& k, const Int& n_lo, const Int& n_hi, std::size_t g,
                     const Int& stride = 1, unsigned workers = 1);

struct SeedSearchParams {
    Int k = 2;
    std::size_t a = 1;
    Int t0_max = 8;
    Int width_max = 8;
    Int horizon = 1000;
    std::optional<Int> n_start;  // default t_{a+2} of each seed
    unsigned workers = 1;
};

struct SeedResult {
    std::vector<Int> seed;
    PsiReport report;
};

// Every strictly increasing seed with 1 <= t_0 <= t0_max, t_{a-1} - t_0 <=
// width_max and k t_0 > t_{a-1}, in lexicographic order.
std::vector<std::vector<Int>> enumerate_seeds(const Int& k, std::size_t a, const Int& t0_max, const Int& width_max);

// Ranked: seeds with no violation first, then by later first violation,
// ties by seed order.
std::vector<SeedResult> search_seeds(const SeedSearchParams& params);

}  // namespace reprfn

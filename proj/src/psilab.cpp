#include "reprfn/psilab.hpp"

#include "parallel.hpp"
#include "reprfn/repcount.hpp"
#include "reprfn/structure.hpp"

#include <algorithm>

namespace reprfn {

PsiReport verify_equality(const BlockSet& set, const Int& k, const Int& n_lo, const Int& n_hi,
                          bool keep_series, unsigned workers) {
    if (k < 2) throw DomainError("k must be at least 2");
    if (n_lo < 0 || n_hi < n_lo) throw DomainError("range must satisfy 0 <= n_lo <= n_hi");

    const BlockSet comp = set.complement();
    const WeightPair w{1, k};
    const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<PsiSample> samples(count);
    detail::parallel_for(count, workers, [&](std::size_t i) {
        const Int n = n_lo + i;
        samples[i] = {n, count_weighted(set, n, w), count_weighted(comp, n, w)};
    });

    PsiReport report{k, n_lo, n_hi, 0, std::nullopt, {}};
    for (const auto& s : samples) {
        if (s.r_set == s.r_complement)
            ++report.equal_count;
        else if (!report.first_violation)
            report.first_violation = s.n;
    }
    if (keep_series) report.per_n = std::move(samples);
    return report;
}

RatioScan scan_ratio(const BlockSet& set, const Int& k, const Int& n_lo, const Int& n_hi, std::size_t g,
                     const Int& stride, unsigned workers) {
    if (k < 2) throw DomainError("k must be at least 2");
    if (n_lo < 1 || n_hi < n_lo) throw DomainError("range must satisfy 1 <= n_lo <= n_hi");
    if (stride < 1) throw DomainError("stride must be positive");

    std::vector<Int> points;
    for (Int n = n_lo; n <= n_hi; n += stride) points.push_back(n);
    if (points.back() != n_hi) points.push_back(n_hi);

    // Side selection works on the lawful re-indexing; it drops an even number
    // of boundaries so block parity is unchanged.
    std::optional<BlockSet> lawful;
    if (set.has_tail() && set.tail()->ratio == k) lawful = set.truncated();

    RatioScan scan;
    scan.trivial_ceiling = Rational(Int(1), k);
    scan.stride = stride;
    scan.window_lo = ceil_div(n_lo + n_hi, 2);
    if (lawful) {
        const Int t_a = lawful->boundary_at(lawful->tail()->period);
        scan.theoretical_floor = Rational(Int(1), pow_int(k, 5) * t_a * (pow_int(k, g) + 2));
    }

    const BlockSet comp = set.complement();
    const WeightPair w{1, k};
    scan.series.resize(points.size());
    detail::parallel_for(points.size(), workers, [&](std::size_t i) {
        RatioSample& s = scan.series[i];
        s.n = points[i];
        s.r_set = count_weighted(set, s.n, w);
        s.r_complement = count_weighted(comp, s.n, w);
        s.side = Side::set;
        if (lawful) {
            const Int m = s.n / (pow_int(k, g) + 1);
            if (m >= lawful->boundaries().front()) {
                const Decomposition d = decompose(*lawful, s.n, g);
                s.side = containing_side(*lawful, d.s, d.ell);
            }
        }
        s.ratio = Rational(s.side == Side::set ? s.r_set : s.r_complement, s.n);
    });

    for (const auto& s : scan.series) {
        if (s.n < scan.window_lo) continue;
        if (!scan.min_ratio || s.ratio < *scan.min_ratio) scan.min_ratio = s.ratio;
    }
    return scan;
}

std::vector<std::vector<Int>> enumerate_seeds(const Int& k, std::size_t a, const Int& t0_max, const Int& width_max) {
    if (a == 0 || a % 2 == 0) throw DomainError("period a must be an odd positive integer");
    if (k < 2) throw DomainError("k must be at least 2");
    std::vector<std::vector<Int>> seeds;
    std::vector<Int> current(a);
    // Depth-first over t_1 < ... < t_{a-1} <= min(t_0 + width_max, k t_0 - 1).
    auto extend = [&](auto&& self, std::size_t idx, const Int& cap) -> void {
        if (idx == a) {
            seeds.push_back(current);
            return;
        }
        // Leave room for the remaining a - 1 - idx strictly larger entries.
        const Int top = cap - Int(a - 1 - idx);
        for (Int v = current[idx - 1] + 1; v <= top; ++v) {
            current[idx] = v;
            self(self, idx + 1, cap);
        }
    };
    for (Int t0 = 1; t0 <= t0_max; ++t0) {
        current[0] = t0;
        const Int cap = std::min<Int>(t0 + width_max, k * t0 - 1);
        if (a == 1) {
            seeds.push_back(current);
            continue;
        }
        extend(extend, 1, cap);
    }
    return seeds;
}

std::vector<SeedResult> search_seeds(const SeedSearchParams& params) {
    if (params.horizon < 0) throw DomainError("horizon must be nonnegative");
    const auto seeds = enumerate_seeds(params.k, params.a, params.t0_max, params.width_max);
    std::vector<SeedResult> results(seeds.size());
    detail::parallel_for(seeds.size(), params.workers, [&](std::size_t i) {
        const BlockSet set = generate_from_seed(seeds[i], params.a, params.k, params.horizon);
        Int start = params.n_start ? *params.n_start : set.boundary_at(params.a + 2);
        if (params.horizon < start)
            throw DomainError("horizon " + params.horizon.str() + " lies below the check start " + start.str());
        results[i] = {seeds[i], verify_equality(set, params.k, start, params.horizon)};
    });
    std::stable_sort(results.begin(), results.end(), [](const SeedResult& x, const SeedResult& y) {
        const auto& fx = x.report.first_violation;
        const auto& fy = y.report.first_violation;
        if (!fx || !fy) return !fx && fy;
        return *fx > *fy;
    });
    return results;
}

}  // namespace reprfn

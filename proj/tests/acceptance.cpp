// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "oracle.hpp"
#include "reprfn/psilab.hpp"
#include "reprfn/repcount.hpp"
#include "reprfn/structure.hpp"
#include "reprfn/witness.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace reprfn;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kRuntimeLimitSeconds = 60.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Shared across criteria for the trivial-ceiling check.
std::size_t g_ceiling_checks = 0;
std::size_t g_ceiling_failures = 0;

void note_ceiling(const Int& count, const Int& n, const Int& k) {
    ++g_ceiling_checks;
    if (count > n / k + 1) ++g_ceiling_failures;
}

BlockSet s1() {
    const std::vector<Int> seed{4, 5, 7};
    return generate_from_seed(seed, 3, 2, 30);
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(20240601);
    const std::pair<int, int> weights[] = {{1, 2}, {1, 3}, {1, 5}, {2, 3}};
    const auto start = Clock::now();
    std::size_t cases = 0, mismatches = 0;
    for (; cases < 10000; ++cases) {
        const auto raw = oracle::random_boundaries(rng, 12, 4200);
        const BlockSet set(oracle::to_ints(raw), rng() % 3 != 0, std::nullopt);
        const auto [k1, k2] = weights[cases % 4];
        const Int n = Int(rng() % 4097);
        const Int fast = count_weighted(set, n, {k1, k2});
        if (fast != count_weighted_oracle(set, n, {k1, k2})) ++mismatches;
        if (k1 == 1) note_ceiling(fast, n, k2);
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << cases << " cases, " << mismatches << " mismatches, " << elapsed << " s";
    return {mismatches == 0 && elapsed <= kRuntimeLimitSeconds, d.str()};
}

Outcome closed_form() {
    const BlockSet everything = BlockSet::empty().complement();
    const BlockSet horizon = BlockSet::prefix(20000);
    std::size_t bad = 0, checks = 0;
    for (int k : {2, 3, 5}) {
        for (int n = 0; n <= 10000; ++n) {
            const Int expected = n / k + 1;
            bad += count_weighted(everything, n, {1, k}) != expected;
            bad += count_weighted(horizon, n, {1, k}) != expected;
            checks += 2;
        }
    }
    return {bad == 0, std::to_string(checks) + " checks, " + std::to_string(bad) + " wrong"};
}

Outcome trivial_ceiling() {
    // Plus a sweep over S1, its complement and random tail sets.
    std::mt19937_64 rng(77);
    const BlockSet s = s1();
    for (int n = 0; n <= 10000; ++n) {
        note_ceiling(count_weighted(s, n, {1, 2}), n, 2);
        note_ceiling(count_weighted(s.complement(), n, {1, 2}), n, 2);
    }
    for (int round = 0; round < 100; ++round) {
        const std::size_t a = 1 + 2 * (rng() % 3);
        const oracle::u64 k = 2 + rng() % 4;
        const BlockSet t(oracle::to_ints(oracle::random_seed(rng, a, k, 30)), rng() % 2 == 0, TailRule{a, k, 0});
        for (int i = 0; i < 50; ++i) {
            const Int n = Int(rng() % 1000000000);
            note_ceiling(count_weighted(t, n, {1, k}), n, k);
        }
    }
    return {g_ceiling_failures == 0,
            std::to_string(g_ceiling_checks) + " counts, " + std::to_string(g_ceiling_failures) + " above floor(n/k)+1"};
}

Outcome structure_round_trip() {
    std::ostringstream d;
    bool ok = true;
    const BlockSet s = s1();
    const auto rule = detect_tail(s.boundaries(), 2);
    ok = ok && rule && rule->period == 3 && rule->start == 0;
    const auto sel = select_g(s);
    ok = ok && sel.spread == 40 && sel.g == 7;
    d << "S1 -> a=" << (rule ? rule->period : 0) << " i0=" << (rule ? rule->start : 0) << ", T=" << sel.spread
      << ", g=" << sel.g;

    std::mt19937_64 rng(4);
    std::size_t good = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t a = 1 + 2 * (i % 3);
        const oracle::u64 k = 2 + (i / 3) % 2;
        const auto seed = oracle::random_seed(rng, a, k, 25);
        const BlockSet g = generate_from_seed(oracle::to_ints(seed), a, k, pow_int(k, 3) * Int(seed.back()));
        const auto r = detect_tail(g.boundaries(), k);
        good += (r && r->period == a && r->start == 0);
    }
    d << "; random seeds " << good << "/50";
    return {ok && good == 50, d.str()};
}

Outcome decomposition() {
    const BlockSet s = s1();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> dist(10000, 1000000000);
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const Int n = dist(rng);
        const auto d = decompose(s, n, 7);
        const Int scale = pow_int(2, d.s);
        const bool ok = 129 * d.m + d.r == n && d.r >= 0 && d.r < 129 && d.ell <= 2 &&
                        scale * s.boundary_at(d.ell) <= d.m && d.m < scale * s.boundary_at(d.ell + 1);
        bad += !ok;
    }
    const auto fx = decompose(s, 100000000, 7);
    const bool fixture = fx.m == 775193 && fx.r == 103 && fx.s == 17 && fx.ell == 1;
    std::ostringstream d;
    d << "1000 random n, " << bad << " bad; n=1e8 -> (" << fx.m << "," << fx.r << "," << fx.s << "," << fx.ell << ")";
    return {bad == 0 && fixture, d.str()};
}

Outcome witness_soundness() {
    const BlockSet s = s1();
    const auto start = Clock::now();
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::uint64_t> dist(10000000, 1000000000);
    std::size_t bad_bound = 0, bad_pairs = 0, bad_parity = 0;
    Int total_pairs = 0;
    for (int i = 0; i < 200; ++i) {
        const Int n = dist(rng);
        const auto d = decompose(s, n, 7);
        const auto home = static_cast<std::int64_t>(d.ell + 3 * d.s);
        WitnessReport rep;
        try {
            rep = enumerate_witnesses(s, n, 7, [&](const WitnessPair& p) {
                const bool in_side = [&] {
                    const bool want = containing_side(s, d.s, d.ell) == Side::set;
                    return s.contains(p.a1) == want && s.contains(p.a2) == want;
                }();
                bad_pairs += !(p.a1 + 2 * p.a2 == n && in_side);
                const auto j1 = static_cast<std::int64_t>(s.count_at_most(p.a1)) - 1;
                const auto j2 = static_cast<std::int64_t>(s.count_at_most(p.a2)) - 1;
                bad_parity += ((j1 - home) % 2 != 0) || ((j2 - home) % 2 != 0);
            });
        } catch (const DomainError&) {
            ++bad_pairs;
            continue;
        }
        total_pairs += rep.pairs_checked;
        bad_bound += Rational(rep.pairs_checked) < rep.guaranteed;
    }
    const auto fx = enumerate_witnesses(s, 100000000, 7);
    const bool fixture = fx.pairs_checked == 3993 && ceil(fx.guaranteed) == 2876 &&
                         Rational(fx.pairs_checked) >= fx.guaranteed;
    const double elapsed = seconds_since(start);
    std::ostringstream out;
    out << "200 n, " << total_pairs << " pairs, " << bad_pairs << " invalid, " << bad_parity << " parity breaks, "
        << bad_bound << " below bound; n=1e8 -> " << fx.pairs_checked << " >= " << ceil(fx.guaranteed) << "; "
        << elapsed << " s";
    return {bad_bound == 0 && bad_pairs == 0 && bad_parity == 0 && fixture && elapsed <= kRuntimeLimitSeconds,
            out.str()};
}

Outcome ratio_scan() {
    const BlockSet s = s1();
    const Int lo = 10000000, hi = 1000000000;
    const Int stride = (hi - lo) / 499;
    const RatioScan scan = scan_ratio(s, 2, lo, hi, 7, stride, std::thread::hardware_concurrency());
    std::size_t bad = 0;
    for (const auto& p : scan.series) {
        note_ceiling(p.side == Side::set ? p.r_set : p.r_complement, p.n, 2);
        Rational floor_value = Rational(1, 33280) - Rational(Int(129), p.n);
        if (floor_value < 0) floor_value = 0;
        const Rational ceiling = Rational(1, 2) + Rational(Int(1), p.n);
        bad += !(p.ratio >= floor_value && p.ratio <= ceiling);
    }
    std::ostringstream d;
    d << scan.series.size() << " samples, " << bad << " outside; min ratio "
      << (scan.min_ratio ? to_decimal_string(*scan.min_ratio, 8) : "n/a");
    return {bad == 0, d.str()};
}

Outcome intersection_fixtures() {
    bool ok = intersection_nonempty(2, 8) && !intersection_nonempty(2, 4) && !intersection_nonempty(2, 3) &&
              intersection_nonempty(4, 64) && intersection_nonempty(8, 32);
    for (int k = 2; k <= 10; ++k) ok = ok && intersection_nonempty(k, k);
    return {ok, "(2,8) (2,4) (2,3) (4,64) (8,32) (k,k) for k=2..10"};
}

Outcome verifier_sanity() {
    const auto full = verify_equality(BlockSet::prefix(100000), 2, 10, 20);
    const auto none = verify_equality(BlockSet::empty(), 2, 0, 20);
    const bool ok = full.first_violation && *full.first_violation == 10 && none.first_violation &&
                    *none.first_violation == 0;
    return {ok, "N-at-horizon first violation " + (full.first_violation ? full.first_violation->str() : "none") +
                    ", empty set " + (none.first_violation ? none.first_violation->str() : "none")};
}

Outcome complement_involution() {
    std::mt19937_64 rng(10);
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
        BlockSet set;
        if (i % 2 == 0) {
            set = BlockSet(oracle::to_ints(oracle::random_boundaries(rng, 12, 5000)), rng() % 2 == 0, std::nullopt);
        } else {
            const std::size_t a = 1 + 2 * (rng() % 3);
            const oracle::u64 k = 2 + rng() % 3;
            set = BlockSet(oracle::to_ints(oracle::random_seed(rng, a, k, 40)), rng() % 2 == 0, TailRule{a, k, 0});
        }
        const BlockSet comp = set.complement();
        bad += !(comp.complement() == set);
        for (int j = 0; j < 20; ++j) {
            const Int x = Int(rng() % 1000000);
            bad += !(set.contains(x) != comp.contains(x));
        }
    }
    return {bad == 0, "1000 sets x 20 points, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    // The trivial ceiling runs after every criterion that feeds it.
    const Criterion criteria[] = {
        {"1 oracle equivalence", oracle_equivalence},
        {"2 closed form for N", closed_form},
        {"4 structure round-trip", structure_round_trip},
        {"5 decomposition", decomposition},
        {"6 witness soundness", witness_soundness},
        {"7 ratio scan", ratio_scan},
        {"8 intersection criterion", intersection_fixtures},
        {"9 verifier sanity", verifier_sanity},
        {"10 complement involution", complement_involution},
        {"3 trivial ceiling", trivial_ceiling},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  %-26s %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}

#include "reprfn/blockset.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace reprfn {

namespace {

// Materialization never needs more than a few hundred boundaries for a
// scaling tail; this only trips on absurd limits.
constexpr std::size_t kMaxExpandedBoundaries = std::size_t{1} << 22;

}  // namespace

BlockSet::BlockSet(std::vector<Int> boundaries, bool leading_gap, std::optional<TailRule> tail)
    : boundaries_(std::move(boundaries)), leading_gap_(leading_gap), tail_(std::move(tail)) {
    for (std::size_t i = 0; i < boundaries_.size(); ++i) {
        if (boundaries_[i] < 0) throw DomainError("boundaries must be nonnegative");
        if (i > 0 && boundaries_[i] <= boundaries_[i - 1])
            throw DomainError("boundaries must be strictly increasing");
    }
    if (!tail_) {
        build_narrow();
        return;
    }

    const TailRule& rule = *tail_;
    if (rule.period == 0 || rule.period % 2 == 0)
        throw DomainError("tail period must be an odd positive integer");
    if (rule.ratio < 2) throw DomainError("tail ratio must be at least 2");
    if (boundaries_.size() < rule.start + rule.period)
        throw DomainError("tail rule needs at least start + period stored boundaries");
    for (std::size_t i = rule.start; i + rule.period < boundaries_.size(); ++i) {
        if (boundaries_[i + rule.period] != rule.ratio * boundaries_[i])
            throw DomainError("stored boundaries violate the scaling law at index " +
                              std::to_string(i + rule.period));
    }
    if (rule.ratio * boundaries_[rule.start] <= boundaries_[rule.start + rule.period - 1])
        throw DomainError("scaling law does not extend the boundaries increasingly");
    build_narrow();
}

void BlockSet::build_narrow() {
    constexpr std::uint64_t kBoundaryCap = std::uint64_t{1} << 63;
    constexpr std::uint64_t kRatioCap = std::uint64_t{1} << 32;
    if (tail_ && tail_->ratio >= kRatioCap) return;
    if (!boundaries_.empty() && boundaries_.back() >= kBoundaryCap) return;
    narrow_.reserve(boundaries_.size());
    for (const auto& b : boundaries_) narrow_.push_back(b.convert_to<std::uint64_t>());
    narrow_ratio_ = tail_ ? tail_->ratio.convert_to<std::uint64_t>() : 0;
    has_narrow_ = true;
}

std::size_t BlockSet::count_at_most_narrow(std::uint64_t x) const {
    const std::size_t stored = narrow_.size();
    if (stored == 0 || x < narrow_.back() || !tail_) {
        return static_cast<std::size_t>(std::upper_bound(narrow_.begin(), narrow_.end(), x) - narrow_.begin());
    }
    // Same counting as the wide path; products stay below 2^127.
    using u128 = unsigned __int128;
    const std::size_t a = tail_->period;
    const std::size_t base = stored - a;
    std::size_t c0 = 0;
    u128 scale = 1;
    u128 scaled_base = narrow_[base];
    while (scaled_base * narrow_ratio_ <= x) {
        scaled_base *= narrow_ratio_;
        scale *= narrow_ratio_;
        ++c0;
    }
    if (c0 == 0) return stored;
    std::size_t extra = 0;
    for (std::size_t r = 0; r < a; ++r) {
        if (scale * narrow_[base + r] <= x) ++extra;
    }
    return stored + a * (c0 - 1) + extra;
}

BlockSet BlockSet::normalize(std::span<const Interval> intervals) {
    std::vector<Interval> sorted(intervals.begin(), intervals.end());
    for (const auto& iv : sorted) {
        if (iv.lo < 0 || iv.hi < 0) throw DomainError("interval endpoints must be nonnegative");
        if (iv.lo >= iv.hi) throw DomainError("interval must satisfy lo < hi");
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

    std::vector<Int> bounds;
    for (const auto& iv : sorted) {
        if (!bounds.empty() && iv.lo <= bounds.back()) {
            if (iv.hi > bounds.back()) bounds.back() = iv.hi;
            continue;
        }
        bounds.push_back(iv.lo);
        bounds.push_back(iv.hi);
    }
    return BlockSet(std::move(bounds), true, std::nullopt);
}

BlockSet BlockSet::prefix(const Int& limit) {
    if (limit <= 0) return empty();
    return BlockSet({Int(0), limit}, true, std::nullopt);
}

BlockSet BlockSet::empty() { return BlockSet({}, true, std::nullopt); }

std::size_t BlockSet::count_at_most(const Int& x) const {
    if (x < 0) return 0;
    if (has_narrow_ && x <= std::numeric_limits<std::uint64_t>::max())
        return count_at_most_narrow(x.convert_to<std::uint64_t>());
    const std::size_t stored = boundaries_.size();
    if (stored == 0 || x < boundaries_.back() || !tail_) {
        return static_cast<std::size_t>(
            std::upper_bound(boundaries_.begin(), boundaries_.end(), x) - boundaries_.begin());
    }
    // Every extended boundary is k^c * t_{B-a+r} with c >= 1 and 0 <= r < a.
    // With c0 the largest c having k^c * t_{B-a} <= x, each residue r
    // contributes c0 - 1 extended boundaries plus one more when
    // k^c0 * t_{B-a+r} <= x.
    const std::size_t a = tail_->period;
    const Int& k = tail_->ratio;
    const std::size_t base = stored - a;
    std::size_t c0 = 0;
    Int scale = 1;
    Int scaled_base = boundaries_[base];
    for (;;) {
        Int next = scaled_base * k;
        if (next > x) break;
        scaled_base = std::move(next);
        scale *= k;
        ++c0;
    }
    if (c0 == 0) return stored;
    std::size_t extra = 0;
    for (std::size_t r = 0; r < a; ++r) {
        if (scale * boundaries_[base + r] <= x) ++extra;
    }
    return stored + a * (c0 - 1) + extra;
}

bool BlockSet::contains(const Int& x) const {
    if (x < 0) return false;
    const auto j = static_cast<std::int64_t>(count_at_most(x));
    return block_in_set(j - 1);
}

BlockSet BlockSet::complement() const {
    BlockSet out = *this;
    out.leading_gap_ = !leading_gap_;
    return out;
}

Int BlockSet::boundary_at(std::size_t i) const {
    if (i < boundaries_.size()) return boundaries_[i];
    if (!tail_) throw DomainError("boundary index " + std::to_string(i) + " outside a finite set");
    const std::size_t a = tail_->period;
    const std::size_t last = boundaries_.size() - 1;
    const std::size_t steps = (i - last + a - 1) / a;
    return pow_int(tail_->ratio, steps) * boundaries_[i - steps * a];
}

Rational BlockSet::boundary(std::int64_t i) const {
    if (i >= 0) {
        const auto u = static_cast<std::size_t>(i);
        if (u < boundaries_.size() || tail_) return Rational(boundary_at(u));
        throw DomainError("boundary index " + std::to_string(i) + " outside a finite set");
    }
    if (!tail_) throw DomainError("negative boundary index requires a tail rule");
    const auto a = static_cast<std::int64_t>(tail_->period);
    const auto start = static_cast<std::int64_t>(tail_->start);
    const std::int64_t steps = (start - i + a - 1) / a;
    return Rational(boundaries_[static_cast<std::size_t>(i + steps * a)]) /
           Rational(pow_int(tail_->ratio, static_cast<std::size_t>(steps)));
}

std::vector<Interval> BlockSet::materialize(const Int& limit) const {
    std::vector<Interval> out;
    if (limit <= 0) return out;

    auto emit = [&](const Int& lo, const Int& hi) {
        const Int& top = hi < limit ? hi : limit;
        if (lo < top) out.push_back({lo, top});
    };

    if (!leading_gap_) {
        if (boundaries_.empty()) {
            emit(0, limit);
            return out;
        }
        emit(0, boundaries_[0]);
    }

    std::size_t i = 0;
    for (;; ++i) {
        if (i >= boundaries_.size() && !tail_) break;
        if (i >= kMaxExpandedBoundaries)
            throw DomainError("tail expansion exceeds the supported boundary count");
        Int lo = boundary_at(i);
        if (lo >= limit) return out;
        if (!block_in_set(static_cast<std::int64_t>(i))) continue;
        if (i + 1 >= boundaries_.size() && !tail_) {
            emit(lo, limit);
            return out;
        }
        emit(lo, boundary_at(i + 1));
    }
    return out;
}

BlockSet BlockSet::truncated() const {
    if (!tail_ || tail_->start == 0) return *this;
    const std::size_t a = tail_->period;
    const std::size_t first = tail_->start + (tail_->start % 2);
    std::vector<Int> kept;
    for (std::size_t i = first; i < boundaries_.size() || kept.size() < a; ++i)
        kept.push_back(boundary_at(i));
    return BlockSet(std::move(kept), leading_gap_, TailRule{a, tail_->ratio, 0});
}

}  // namespace reprfn

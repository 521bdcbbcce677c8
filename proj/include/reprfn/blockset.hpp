#pragma once

#include "reprfn/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace reprfn {

// Half-open integer interval [lo, hi).
struct Interval {
    Int lo;
    Int hi;

    bool operator==(const Interval&) const = default;
};

// Scaling law t_{i+period} = ratio * t_i, valid for every i >= start.
struct TailRule {
    std::size_t period = 1;
    Int ratio = 2;
    std::size_t start = 0;

    bool operator==(const TailRule&) const = default;
};

// A subset of N described by an increasing boundary sequence t_0 < t_1 < ...
// The boundaries cut N into the blocks [t_j, t_{j+1}); block -1 is the
// leading region [0, t_0). With leading_gap set, the member blocks are the
// even-indexed ones (and [0, t_0) is excluded); otherwise the odd-indexed
// ones together with [0, t_0). Past the last stored boundary the sequence
// either continues through the tail rule or the final block runs to infinity.
class BlockSet {
public:
    BlockSet() = default;

    // Validates every invariant; throws DomainError.
    BlockSet(std::vector<Int> boundaries, bool leading_gap, std::optional<TailRule> tail);

    // Sorted, merged union of finite intervals.
    static BlockSet normalize(std::span<const Interval> intervals);
    // [0, limit); the whole of N at any horizon below limit.
    static BlockSet prefix(const Int& limit);
    static BlockSet empty();

    const std::vector<Int>& boundaries() const { return boundaries_; }
    bool leading_gap() const { return leading_gap_; }
    const std::optional<TailRule>& tail() const { return tail_; }
    bool has_tail() const { return tail_.has_value(); }

    bool contains(const Int& x) const;
    BlockSet complement() const;

    // Member intervals clipped to [0, limit), sorted and disjoint.
    std::vector<Interval> materialize(const Int& limit) const;

    // Number of boundaries t_i (over the whole, possibly infinite, sequence)
    // with t_i <= x. x then lies in block count_at_most(x) - 1.
    std::size_t count_at_most(const Int& x) const;

    // Whether block [t_j, t_{j+1}) belongs to the set; j = -1 is [0, t_0).
    bool block_in_set(std::int64_t j) const {
        const bool even = (j % 2 == 0);
        return even == leading_gap_;
    }

    // t_i for i >= 0, through the tail rule past the stored prefix.
    Int boundary_at(std::size_t i) const;

    // t_i for any integer i under the two-sided extension of the scaling law
    // (t_{i-a} = t_i / k below the first lawful index).
    Rational boundary(std::int64_t i) const;

    // The same set with the lawful part re-indexed so the tail starts at 0:
    // boundaries below t_j are dropped for the smallest even j >= start. The
    // result differs from *this only on [0, t_j), and keeps the block parity.
    BlockSet truncated() const;

    bool operator==(const BlockSet&) const = default;

private:
    std::vector<Int> boundaries_;
    bool leading_gap_ = true;
    std::optional<TailRule> tail_;
    // 64-bit copies of the stored boundaries and ratio when everything fits;
    // count_at_most uses them for small queries.
    std::vector<std::uint64_t> narrow_;
    std::uint64_t narrow_ratio_ = 0;
    bool has_narrow_ = false;

    void build_narrow();
    std::size_t count_at_most_narrow(std::uint64_t x) const;
};

}  // namespace reprfn

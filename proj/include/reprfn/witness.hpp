#pragma once

#include "reprfn/blockset.hpp"
#include "reprfn/numeric.hpp"
#include "reprfn/structure.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace reprfn {

enum class Side { set, complement };
enum class CaseTag { I, II, III };

const char* to_string(Side side);
const char* to_string(CaseTag tag);

// Closed integer interval [lo, hi]; empty when hi < lo.
struct QRange {
    Int lo;
    Int hi;

    bool empty() const { return hi < lo; }
    Int size() const { return empty() ? Int(0) : Int(hi - lo + 1); }
};

struct WitnessPair {
    Int q;
    Int a1;
    Int a2;
};

struct WitnessReport {
    Decomposition decomposition;
    CaseTag case_tag = CaseTag::I;
    QRange q_range;
    Side side = Side::set;
    Int pairs_checked;
    Rational guaranteed;
    bool g_admissible = true;  // k^g > T
    std::optional<WitnessPair> first;
    std::optional<WitnessPair> last;
};

// Which side holds [k^s t_l, k^s t_{l+1}) = [t_{l+sa}, t_{l+sa+1}).
Side containing_side(const BlockSet& set, std::size_t s, std::size_t ell);

CaseTag classify_case(const BlockSet& set, const Decomposition& d);

// Integer q-interval of the case's witness family. Empty when s < 5.
QRange witness_q_range(const BlockSet& set, const Decomposition& d, CaseTag tag);

// Case I/III: (m + kq + r, k^{g-1} m - q); case II: (m - kq + r, k^{g-1} m + q).
WitnessPair witness_pair(const BlockSet& set, const Decomposition& d, CaseTag tag, const Int& q);

// max(0, n / (k^5 t_a (k^g + 2)) - (k^g + 1)).
Rational guaranteed_lower_bound(const BlockSet& set, const Int& n, std::size_t g);

// Builds and validates every pair of the family. Throws DomainError if any
// pair misses the identity n = a1 + k a2 or leaves the containing side.
// visit, when given, sees every validated pair in increasing q.
WitnessReport enumerate_witnesses(const BlockSet& set, const Int& n, std::size_t g,
                                  const std::function<void(const WitnessPair&)>& visit = {});

}  // namespace reprfn

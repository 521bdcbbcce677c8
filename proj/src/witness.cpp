#include "reprfn/witness.hpp"

#include <string>

namespace reprfn {

namespace {

struct Frame {
    std::size_t a;
    Int k;
    Rational left;   // k^s t_l
    Rational right;  // k^s t_{l+1}
};

Frame frame_of(const BlockSet& set, const Decomposition& d) {
    if (!set.has_tail() || set.tail()->start != 0)
        throw DomainError("witness operations require a tail rule starting at index 0");
    Frame f{set.tail()->period, set.tail()->ratio, {}, {}};
    const Rational scale(pow_int(f.k, d.s));
    f.left = scale * set.boundary(static_cast<std::int64_t>(d.ell));
    f.right = scale * set.boundary(static_cast<std::int64_t>(d.ell) + 1);
    return f;
}

// k^{s-1} (t_x - t_y) for signed indices.
Rational scaled_gap(const BlockSet& set, const Frame& f, std::size_t s, std::int64_t x, std::int64_t y) {
    return pow_rational(f.k, static_cast<std::int64_t>(s) - 1) * (set.boundary(x) - set.boundary(y));
}

}  // namespace

const char* to_string(Side side) { return side == Side::set ? "set" : "complement"; }

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
    }
    return "?";
}

Side containing_side(const BlockSet& set, std::size_t s, std::size_t ell) {
    if (!set.has_tail() || set.tail()->start != 0)
        throw DomainError("containing_side requires a tail rule starting at index 0");
    const auto j = static_cast<std::int64_t>(ell + s * set.tail()->period);
    return set.block_in_set(j) ? Side::set : Side::complement;
}

CaseTag classify_case(const BlockSet& set, const Decomposition& d) {
    const Frame f = frame_of(set, d);
    const Rational margin = pow_rational(f.k, static_cast<std::int64_t>(d.s) - 4);
    const Rational m(d.m);
    if (m < f.left + margin) return CaseTag::II;
    if (m >= f.right - margin) return CaseTag::III;
    return CaseTag::I;
}

QRange witness_q_range(const BlockSet& set, const Decomposition& d, CaseTag tag) {
    const Frame f = frame_of(set, d);
    QRange out{0, -1};
    if (d.s < 5) return out;

    const auto s = d.s;
    const auto l = static_cast<std::int64_t>(d.ell);
    const Rational small = pow_rational(f.k, static_cast<std::int64_t>(s) - 5);
    const Rational r(d.r);
    switch (tag) {
        case CaseTag::I:
            // 0 <= q < k^{s-5} - r
            out.lo = 0;
            out.hi = ceil(small - r) - 1;
            break;
        case CaseTag::II:
            // k^{s-1}(t_l - t_{l-1}) + k^{s-5} + r < q <= k^{s-1}(t_l - t_{l-2})
            out.lo = floor(scaled_gap(set, f, s, l, l - 1) + small + r) + 1;
            out.hi = floor(scaled_gap(set, f, s, l, l - 2));
            break;
        case CaseTag::III:
            // k^{s-1}(t_{l+2} - t_{l+1}) + k^{s-5} <= q <= k^{s-1}(t_{l+3} - t_{l+1}) - r
            out.lo = ceil(scaled_gap(set, f, s, l + 2, l + 1) + small);
            out.hi = floor(scaled_gap(set, f, s, l + 3, l + 1) - r);
            break;
    }
    if (out.empty()) out = QRange{0, -1};
    return out;
}

WitnessPair witness_pair(const BlockSet& set, const Decomposition& d, CaseTag tag, const Int& q) {
    if (!set.has_tail()) throw DomainError("witness_pair requires a tail rule");
    const Int& k = set.tail()->ratio;
    const Int lifted = pow_int(k, d.g - 1) * d.m;
    if (tag == CaseTag::II) return {q, d.m - k * q + d.r, lifted + q};
    return {q, d.m + k * q + d.r, lifted - q};
}

Rational guaranteed_lower_bound(const BlockSet& set, const Int& n, std::size_t g) {
    if (!set.has_tail() || set.tail()->start != 0)
        throw DomainError("guaranteed_lower_bound requires a tail rule starting at index 0");
    const Int& k = set.tail()->ratio;
    const Int kg = pow_int(k, g);
    const Int t_a = set.boundary_at(set.tail()->period);
    const Rational bound = Rational(n, pow_int(k, 5) * t_a * (kg + 2)) - Rational(kg + 1);
    return bound > 0 ? bound : Rational(0);
}

WitnessReport enumerate_witnesses(const BlockSet& set, const Int& n, std::size_t g,
                                  const std::function<void(const WitnessPair&)>& visit) {
    WitnessReport report;
    report.decomposition = decompose(set, n, g);
    const Decomposition& d = report.decomposition;
    report.g_admissible = pow_int(set.tail()->ratio, g) > select_g(set).spread;
    report.case_tag = classify_case(set, d);
    report.q_range = witness_q_range(set, d, report.case_tag);
    report.side = containing_side(set, d.s, d.ell);
    report.guaranteed = guaranteed_lower_bound(set, n, g);
    report.pairs_checked = 0;

    const Int& k = set.tail()->ratio;
    const bool want_set = report.side == Side::set;
    for (Int q = report.q_range.lo; q <= report.q_range.hi; ++q) {
        const WitnessPair p = witness_pair(set, d, report.case_tag, q);
        if (p.a1 < 0 || p.a2 < 0 || p.a1 + k * p.a2 != n)
            throw DomainError("witness pair at q = " + q.str() + " breaks n = a1 + k a2");
        if (set.contains(p.a1) != want_set || set.contains(p.a2) != want_set)
            throw DomainError("witness pair at q = " + q.str() + " leaves the " +
                              to_string(report.side) + " side");
        if (!report.first) report.first = p;
        report.last = p;
        ++report.pairs_checked;
        if (visit) visit(p);
    }
    return report;
}

}  // namespace reprfn

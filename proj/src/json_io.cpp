#include "reprfn/json_io.hpp"

#include <limits>

namespace reprfn {

Json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw DomainError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& x) {
    return {{"exact", to_fraction_string(x)}, {"decimal", to_decimal_string(x)}};
}

Json to_json(const TailRule& rule) {
    return {{"a", rule.period}, {"k", int_to_json(rule.ratio)}, {"i0", rule.start}};
}

Json to_json(const BlockSet& set) {
    Json bounds = Json::array();
    for (const auto& b : set.boundaries()) bounds.push_back(int_to_json(b));
    Json out{{"boundaries", bounds}, {"leading_gap", set.leading_gap()}, {"tail", nullptr}};
    if (set.tail()) out["tail"] = to_json(*set.tail());
    return out;
}

BlockSet blockset_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw DomainError("set document must be a JSON object");
        std::vector<Int> bounds;
        for (const auto& b : j.at("boundaries")) bounds.push_back(int_from_json(b));
        const bool leading_gap = j.value("leading_gap", true);
        std::optional<TailRule> tail;
        if (j.contains("tail") && !j.at("tail").is_null()) {
            const Json& t = j.at("tail");
            const Int a = int_from_json(t.at("a"));
            const Int i0 = t.contains("i0") ? int_from_json(t.at("i0")) : Int(0);
            if (a < 1 || a > 1'000'000) throw DomainError("tail period out of range");
            if (i0 < 0 || i0 > 1'000'000) throw DomainError("tail i0 out of range");
            tail = TailRule{a.convert_to<std::size_t>(), int_from_json(t.at("k")), i0.convert_to<std::size_t>()};
        }
        return BlockSet(std::move(bounds), leading_gap, std::move(tail));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed set document: ") + e.what());
    }
}

Json to_json(const GSelection& sel) { return {{"T", int_to_json(sel.spread)}, {"g", sel.g}}; }

Json to_json(const Decomposition& d) {
    return {{"n", d.n.str()}, {"m", d.m.str()}, {"r", d.r.str()},
            {"s", d.s},       {"ell", d.ell},   {"g", d.g}};
}

Json to_json(const MultiplicativeProfile& p) {
    Json out{{"dependent", p.dependent}};
    if (p.dependent) {
        out["d"] = int_to_json(p.base);
        out["p"] = p.p;
        out["q"] = p.q;
    } else {
        out["d"] = nullptr;
    }
    return out;
}

namespace {

Json pair_to_json(const std::optional<WitnessPair>& p) {
    if (!p) return nullptr;
    return {{"q", p->q.str()}, {"a1", p->a1.str()}, {"a2", p->a2.str()}};
}

}  // namespace

Json to_json(const WitnessReport& report) {
    Json q_range{{"lo", report.q_range.lo.str()}, {"hi", report.q_range.hi.str()},
                 {"empty", report.q_range.empty()}, {"size", report.q_range.size().str()}};
    return {{"decomposition", to_json(report.decomposition)},
            {"case", to_string(report.case_tag)},
            {"q_range", q_range},
            {"side", to_string(report.side)},
            {"pairs_checked", report.pairs_checked.str()},
            {"guaranteed", rational_to_json(report.guaranteed)},
            {"g_admissible", report.g_admissible},
            {"first_pair", pair_to_json(report.first)},
            {"last_pair", pair_to_json(report.last)}};
}

Json to_json(const PsiReport& report) {
    Json out{{"k", int_to_json(report.k)},
             {"n_lo", report.n_lo.str()},
             {"n_hi", report.n_hi.str()},
             {"equal_count", report.equal_count.str()},
             {"first_violation", nullptr}};
    if (report.first_violation) out["first_violation"] = report.first_violation->str();
    if (!report.per_n.empty()) {
        Json series = Json::array();
        for (const auto& s : report.per_n)
            series.push_back({{"n", s.n.str()}, {"r_A", s.r_set.str()}, {"r_comp", s.r_complement.str()}});
        out["per_n"] = std::move(series);
    }
    return out;
}

Json to_json(const RatioScan& scan) {
    Json series = Json::array();
    for (const auto& s : scan.series) {
        series.push_back({{"n", s.n.str()},
                          {"r_A", s.r_set.str()},
                          {"r_comp", s.r_complement.str()},
                          {"side", to_string(s.side)},
                          {"ratio", rational_to_json(s.ratio)}});
    }
    Json out{{"series", std::move(series)},
             {"window_lo", scan.window_lo.str()},
             {"stride", scan.stride.str()},
             {"sampled", scan.stride > 1},
             {"min_ratio", nullptr},
             {"theoretical_floor", nullptr},
             {"trivial_ceiling", rational_to_json(scan.trivial_ceiling)}};
    if (scan.min_ratio) out["min_ratio"] = rational_to_json(*scan.min_ratio);
    if (scan.theoretical_floor) out["theoretical_floor"] = rational_to_json(*scan.theoretical_floor);
    return out;
}

Json to_json(const std::vector<SeedResult>& results) {
    Json out = Json::array();
    for (const auto& r : results) {
        Json seed = Json::array();
        for (const auto& t : r.seed) seed.push_back(int_to_json(t));
        out.push_back({{"seed", std::move(seed)}, {"report", to_json(r.report)}});
    }
    return out;
}

void write_csv(std::ostream& out, const RatioScan& scan) {
    out << "n,r_A,r_comp,ratio_num,ratio_den\n";
    for (const auto& s : scan.series) {
        out << s.n << ',' << s.r_set << ',' << s.r_complement << ','
            << boost::multiprecision::numerator(s.ratio) << ',' << boost::multiprecision::denominator(s.ratio)
            << '\n';
    }
}

void write_csv(std::ostream& out, const PsiReport& report) {
    out << "n,r_A,r_comp,ratio_num,ratio_den\n";
    for (const auto& s : report.per_n) {
        const Rational ratio = s.n == 0 ? Rational(0) : Rational(s.r_set, s.n);
        out << s.n << ',' << s.r_set << ',' << s.r_complement << ','
            << boost::multiprecision::numerator(ratio) << ',' << boost::multiprecision::denominator(ratio) << '\n';
    }
}

}  // namespace reprfn

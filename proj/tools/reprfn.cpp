// reprfn: command-line front end for the representation-function library.
//
// Exit status: 0 success, 1 domain error (bad set, failed precondition,
// --check mismatch), 2 usage error.

#include "CLI11.hpp"
#include "reprfn/json_io.hpp"
#include "reprfn/psilab.hpp"
#include "reprfn/repcount.hpp"
#include "reprfn/structure.hpp"
#include "reprfn/witness.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <map>
#include <thread>

namespace {

using namespace reprfn;

enum class Format { human, json, csv };

struct Options {
    std::string set_path;
    std::string set_inline;
    std::string n = "";
    std::string n_lo, n_hi;
    std::string k = "2";
    std::string k1, k2;
    std::string l;
    std::string g;
    std::string stride = "1";
    std::string limit = "1000";
    std::string seed;
    std::string boundaries;
    std::string variant = "R1";
    std::string t0_max = "8", width_max = "8", horizon = "1000", n_start;
    std::size_t a = 0;
    bool check = false;
    bool series = false;
    unsigned workers = 0;
    Format format = Format::human;
};

unsigned worker_count(const Options& opt) {
    if (opt.workers != 0) return opt.workers;
    if (const char* env = std::getenv("REPRFN_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Int> parse_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_int(item));
    }
    return out;
}

Int require_int(const std::string& text, const char* name) {
    if (text.empty()) throw CLI::ValidationError(std::string("--") + name + " is required");
    return parse_int(text);
}

BlockSet load_set(const Options& opt) {
    std::string text = opt.set_inline;
    if (text.empty()) {
        if (opt.set_path.empty()) throw CLI::ValidationError("--set or --set-json is required");
        std::ifstream in(opt.set_path);
        if (!in) throw DomainError("cannot read set file '" + opt.set_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("set document is not valid JSON: ") + e.what());
    }
    return blockset_from_json(doc);
}

WeightPair weights(const Options& opt) {
    if (!opt.k1.empty() || !opt.k2.empty()) {
        return {opt.k1.empty() ? Int(1) : parse_int(opt.k1), require_int(opt.k2, "k2")};
    }
    return {1, parse_int(opt.k)};
}

std::size_t parse_small(const std::string& text, const char* name) {
    const Int v = parse_int(text);
    if (v < 0 || v > 1'000'000) throw DomainError(std::string(name) + " out of range");
    return v.convert_to<std::size_t>();
}

// Lawful view for the proof machinery, noting when a prefix was dropped.
BlockSet lawful(const BlockSet& set, bool& truncated) {
    if (!set.has_tail()) throw DomainError("this subcommand needs a set with a tail rule");
    truncated = set.tail()->start != 0;
    return set.truncated();
}

std::size_t choose_g(const BlockSet& set, const Options& opt) {
    if (!opt.g.empty()) return parse_small(opt.g, "g");
    return select_g(set).g;
}

void emit(const Options& opt, const Json& doc, const std::string& human) {
    if (opt.format == Format::json)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << human << '\n';
}

int run_count(const Options& opt, bool use_oracle) {
    const BlockSet set = load_set(opt);
    const Int n = require_int(opt.n, "n");
    const WeightPair w = weights(opt);
    const Int value = use_oracle ? count_weighted_oracle(set, n, w) : count_weighted(set, n, w);
    if (opt.check) {
        const Int other = use_oracle ? count_weighted(set, n, w) : count_weighted_oracle(set, n, w);
        if (other != value) {
            std::cerr << "error: fast count " << (use_oracle ? other : value) << " != oracle count "
                      << (use_oracle ? value : other) << '\n';
            return 1;
        }
    }
    emit(opt,
         {{"n", n.str()}, {"k1", w.k1.str()}, {"k2", w.k2.str()}, {"count", value.str()},
          {"method", use_oracle ? "oracle" : "fast"}, {"checked", opt.check}},
         value.str());
    return 0;
}

int run_classic(const Options& opt) {
    const BlockSet set = load_set(opt);
    const Int n = require_int(opt.n, "n");
    ClassicVariant v;
    if (opt.variant == "R1")
        v = ClassicVariant::R1;
    else if (opt.variant == "R2")
        v = ClassicVariant::R2;
    else if (opt.variant == "R3")
        v = ClassicVariant::R3;
    else
        throw CLI::ValidationError("--variant must be R1, R2 or R3");
    const Int value = count_classic(set, n, v);
    emit(opt, {{"n", n.str()}, {"variant", opt.variant}, {"count", value.str()}}, value.str());
    return 0;
}

int run_detect(const Options& opt) {
    std::vector<Int> bounds =
        opt.boundaries.empty() ? load_set(opt).boundaries() : parse_list(opt.boundaries);
    const auto rule = detect_tail(bounds, parse_int(opt.k));
    Json doc{{"tail", rule ? to_json(*rule) : Json(nullptr)}};
    std::string human = "none";
    if (rule)
        human = "a=" + std::to_string(rule->period) + " k=" + rule->ratio.str() +
                " i0=" + std::to_string(rule->start);
    emit(opt, doc, human);
    return 0;
}

int run_gen(const Options& opt) {
    const std::vector<Int> seed = parse_list(opt.seed);
    if (seed.empty()) throw CLI::ValidationError("--seed is required");
    const std::size_t a = opt.a == 0 ? seed.size() : opt.a;
    const BlockSet set = generate_from_seed(seed, a, parse_int(opt.k), parse_int(opt.limit));
    // The set document is JSON in every format.
    std::cout << to_json(set).dump(opt.format == Format::json ? 2 : -1) << '\n';
    return 0;
}

int run_select_g(const Options& opt) {
    bool truncated = false;
    const BlockSet set = lawful(load_set(opt), truncated);
    const GSelection sel = select_g(set);
    Json doc = to_json(sel);
    doc["truncated"] = truncated;
    emit(opt, doc,
         "T = 4 (t_{a+2} - t_0) = " + sel.spread.str() + "\ng = " + std::to_string(sel.g) +
             " (least odd g with k^g > T)");
    return 0;
}

int run_decompose(const Options& opt) {
    bool truncated = false;
    const BlockSet set = lawful(load_set(opt), truncated);
    const std::size_t g = choose_g(set, opt);
    const Decomposition d = decompose(set, require_int(opt.n, "n"), g);
    Json doc = to_json(d);
    doc["truncated"] = truncated;
    std::ostringstream human;
    human << "n = (k^" << g << " + 1) * " << d.m << " + " << d.r << "\n"
          << "m in [k^" << d.s << " t_" << d.ell << ", k^" << d.s << " t_" << d.ell + 1 << ")";
    emit(opt, doc, human.str());
    return 0;
}

int run_witnesses(const Options& opt) {
    bool truncated = false;
    const BlockSet set = lawful(load_set(opt), truncated);
    const std::size_t g = choose_g(set, opt);
    const WitnessReport rep = enumerate_witnesses(set, require_int(opt.n, "n"), g);
    if (!rep.g_admissible) std::cerr << "warning: k^g <= T; the witness family is not guaranteed\n";
    Json doc = to_json(rep);
    doc["truncated"] = truncated;
    std::ostringstream human;
    const Decomposition& d = rep.decomposition;
    human << "m = " << d.m << ", r = " << d.r << ", s = " << d.s << ", l = " << d.ell << ", g = " << g << "\n"
          << "case " << to_string(rep.case_tag) << ", side " << to_string(rep.side) << "\n"
          << "q in [" << rep.q_range.lo << ", " << rep.q_range.hi << "]" << (rep.q_range.empty() ? " (empty)" : "")
          << "\n"
          << "pairs checked: " << rep.pairs_checked << "\n"
          << "guaranteed: " << to_fraction_string(rep.guaranteed) << " ~ " << to_decimal_string(rep.guaranteed);
    emit(opt, doc, human.str());
    return 0;
}

int run_verify(const Options& opt) {
    const BlockSet set = load_set(opt);
    const Int k = parse_int(opt.k);
    const bool series = opt.series || opt.format == Format::csv;
    const PsiReport rep =
        verify_equality(set, k, require_int(opt.n_lo, "n-lo"), require_int(opt.n_hi, "n-hi"), series,
                        worker_count(opt));
    if (opt.format == Format::csv) {
        write_csv(std::cout, rep);
        return 0;
    }
    std::ostringstream human;
    human << "checked n in [" << rep.n_lo << ", " << rep.n_hi << "]: " << rep.equal_count << " equal\n"
          << "first violation: " << (rep.first_violation ? rep.first_violation->str() : "none in range");
    emit(opt, to_json(rep), human.str());
    return 0;
}

int run_scan(const Options& opt) {
    const BlockSet set = load_set(opt);
    const Int k = parse_int(opt.k);
    std::size_t g = 0;
    if (!opt.g.empty())
        g = parse_small(opt.g, "g");
    else if (set.has_tail())
        g = select_g(set.truncated()).g;
    else
        g = 1;
    const RatioScan scan = scan_ratio(set, k, require_int(opt.n_lo, "n-lo"), require_int(opt.n_hi, "n-hi"), g,
                                      parse_int(opt.stride), worker_count(opt));
    if (opt.format == Format::csv) {
        write_csv(std::cout, scan);
        return 0;
    }
    std::ostringstream human;
    human << scan.series.size() << " samples (stride " << scan.stride << ")\n"
          << "min ratio over n >= " << scan.window_lo << ": "
          << (scan.min_ratio ? to_fraction_string(*scan.min_ratio) + " ~ " + to_decimal_string(*scan.min_ratio, 8)
                             : std::string("n/a"))
          << "\n"
          << "theoretical floor: "
          << (scan.theoretical_floor ? to_fraction_string(*scan.theoretical_floor) : std::string("n/a")) << "\n"
          << "trivial ceiling: " << to_fraction_string(scan.trivial_ceiling);
    emit(opt, to_json(scan), human.str());
    return 0;
}

int run_search(const Options& opt) {
    SeedSearchParams p;
    p.k = parse_int(opt.k);
    p.a = opt.a == 0 ? 1 : opt.a;
    p.t0_max = parse_int(opt.t0_max);
    p.width_max = parse_int(opt.width_max);
    p.horizon = parse_int(opt.horizon);
    if (!opt.n_start.empty()) p.n_start = parse_int(opt.n_start);
    p.workers = worker_count(opt);
    const auto results = search_seeds(p);
    std::ostringstream human;
    for (const auto& r : results) {
        for (std::size_t i = 0; i < r.seed.size(); ++i) human << (i ? "," : "") << r.seed[i];
        human << "  checked [" << r.report.n_lo << ", " << r.report.n_hi << "]  first violation: "
              << (r.report.first_violation ? r.report.first_violation->str() : "none") << "\n";
    }
    std::string text = human.str();
    if (!text.empty()) text.pop_back();
    emit(opt, to_json(results), text);
    return 0;
}

int run_intersect(const Options& opt) {
    const Int k = parse_int(opt.k);
    const Int l = require_int(opt.l, "l");
    const bool nonempty = intersection_nonempty(k, l);
    emit(opt,
         {{"k", int_to_json(k)}, {"l", int_to_json(l)}, {"nonempty", nonempty},
          {"profile", to_json(multiplicative_profile(k, l))}},
         nonempty ? "nonempty" : "empty");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted representation functions over self-similar block sets"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;

    const std::map<std::string, Format> formats{
        {"human", Format::human}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", opt.format, "Output format: human, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--workers", opt.workers, "Worker threads (default REPRFN_WORKERS or all cores)");

    auto add_set = [&](CLI::App* sub) {
        sub->add_option("--set", opt.set_path, "Set document (JSON file)");
        sub->add_option("--set-json", opt.set_inline, "Set document given inline");
    };
    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--k", opt.k, "Weight k for n = a1 + k a2");
        sub->add_option("--k1", opt.k1, "General weight k1");
        sub->add_option("--k2", opt.k2, "General weight k2");
    };

    auto* eval = app.add_subcommand("eval", "Fast exact count r_{k1,k2}(A, n)");
    add_set(eval);
    add_weights(eval);
    eval->add_option("--n", opt.n)->required();
    eval->add_flag("--check", opt.check, "Also run the oracle and fail on mismatch");

    auto* orc = app.add_subcommand("oracle", "Brute-force count r_{k1,k2}(A, n)");
    add_set(orc);
    add_weights(orc);
    orc->add_option("--n", opt.n)->required();
    orc->add_flag("--check", opt.check, "Also run the fast counter and fail on mismatch");

    auto* classic = app.add_subcommand("classic", "Unweighted counts R1, R2, R3");
    add_set(classic);
    classic->add_option("--n", opt.n)->required();
    classic->add_option("--variant", opt.variant, "R1, R2 or R3");

    auto* detect = app.add_subcommand("detect", "Detect a scaling tail t_{i+a} = k t_i");
    add_set(detect);
    detect->add_option("--boundaries", opt.boundaries, "Comma-separated boundaries");
    detect->add_option("--k", opt.k);

    auto* gen = app.add_subcommand("gen", "Generate a scaling set from a seed");
    gen->add_option("--seed", opt.seed, "Comma-separated t_0..t_{a-1}")->required();
    gen->add_option("--a", opt.a, "Period (defaults to the seed length)");
    gen->add_option("--k", opt.k);
    gen->add_option("--limit", opt.limit, "Store boundaries up to this value");

    auto* selg = app.add_subcommand("select-g", "T and the least odd g with k^g > T");
    add_set(selg);

    auto* dec = app.add_subcommand("decompose", "n = (k^g + 1) m + r and the lattice cell of m");
    add_set(dec);
    dec->add_option("--n", opt.n)->required();
    dec->add_option("--g", opt.g, "Odd exponent (defaults to select-g)");

    auto* wit = app.add_subcommand("witnesses", "Build and validate the witness family for n");
    add_set(wit);
    wit->add_option("--n", opt.n)->required();
    wit->add_option("--g", opt.g, "Odd exponent (defaults to select-g)");

    auto* ver = app.add_subcommand("verify-psi", "Compare r(A, n) and r(N \\ A, n) over a range");
    add_set(ver);
    ver->add_option("--k", opt.k);
    ver->add_option("--n-lo", opt.n_lo)->required();
    ver->add_option("--n-hi", opt.n_hi)->required();
    ver->add_flag("--series", opt.series, "Include the per-n series");

    auto* scan = app.add_subcommand("scan", "Sampled r(n)/n on the containing side");
    add_set(scan);
    scan->add_option("--k", opt.k);
    scan->add_option("--n-lo", opt.n_lo)->required();
    scan->add_option("--n-hi", opt.n_hi)->required();
    scan->add_option("--g", opt.g);
    scan->add_option("--stride", opt.stride);

    auto* search = app.add_subcommand("search", "Search scaling seeds for finite-horizon equality");
    search->add_option("--k", opt.k);
    search->add_option("--a", opt.a, "Odd period");
    search->add_option("--t0-max", opt.t0_max);
    search->add_option("--width-max", opt.width_max);
    search->add_option("--horizon", opt.horizon);
    search->add_option("--n-start", opt.n_start, "First n checked (default t_{a+2} of each seed)");

    auto* inter = app.add_subcommand("intersect", "Whether Psi_k and Psi_l can intersect");
    inter->add_option("--k", opt.k);
    inter->add_option("--l", opt.l)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval) return run_count(opt, false);
        if (*orc) return run_count(opt, true);
        if (*classic) return run_classic(opt);
        if (*detect) return run_detect(opt);
        if (*gen) return run_gen(opt);
        if (*selg) return run_select_g(opt);
        if (*dec) return run_decompose(opt);
        if (*wit) return run_witnesses(opt);
        if (*ver) return run_verify(opt);
        if (*scan) return run_scan(opt);
        if (*search) return run_search(opt);
        if (*inter) return run_intersect(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

// Command-line surface for the orbitwords library.
//
// Exit codes: 0 = success / all claims verified, 1 = a mathematical
// violation (failed check, occurrence found by `avoid`, series mismatch,
// unstabilized factor set), 2 = usage or configuration errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitwords/complexity.hpp"
#include "orbitwords/config.hpp"
#include "orbitwords/factors.hpp"
#include "orbitwords/oeis.hpp"
#include "orbitwords/pqstats.hpp"
#include "orbitwords/powers.hpp"
#include "orbitwords/search.hpp"
#include "orbitwords/suite.hpp"

using nlohmann::json;
using namespace orbitwords;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + out_path);
    out << text;
}

json occurrence_json(const PowerOccurrence& occ) {
    json witnesses = json::array();
    for (const PairWitness& w : occ.witnesses) {
        witnesses.push_back({{"i", w.i},
                             {"j", w.j},
                             {"g", w.g.cycle_notation()},
                             {"h", h_witness_name(w.h)},
                             {"shift", w.shift}});
    }
    return {{"j", occ.start},
            {"n", occ.block_len},
            {"r", occ.r},
            {"family", family_name(occ.family)},
            {"g", occ.witnesses.empty() ? "()" : occ.witnesses.front().g.cycle_notation()},
            {"witnesses", witnesses}};
}

struct Options {
    std::string config_path;
    std::string format = "text";
    std::string out_path;

    NameEnv env() const {
        if (config_path.empty()) return NameEnv{};
        return NameEnv(parse_config(read_file(config_path)));
    }
};

ActionPair resolve_action(const NameEnv& env, const std::string& action_name, const std::string& g_gens,
                          const std::string& h_family, Alphabet a) {
    if (!g_gens.empty() || !h_family.empty()) {
        std::vector<AlphabetPerm> gens;
        for (const std::string& tok : detail::split(g_gens, ',')) {
            if (tok.empty()) continue;
            gens.push_back(AlphabetPerm::parse_cycles(a, tok));
        }
        PositionFamily fam = h_family.empty() ? PositionFamily::trivial()
                                              : PositionFamily::symbolic(parse_family_name(h_family));
        return {AlphabetGroup::close(a, std::move(gens)), fam};
    }
    return env.action(action_name.empty() ? "plain" : action_name, a);
}

int cmd_generate(const Options& opt, const std::string& name, std::size_t n) {
    NameEnv env = opt.env();
    FiniteWord w = prefix(env.generator(name), n);
    if (opt.format == "csv") {
        std::string out = "i,letter\n";
        for (std::size_t i = 0; i < w.size(); ++i) {
            out += std::to_string(i) + "," + letter_to_char(w[i]) + std::string("\n");
        }
        emit(out, opt.out_path);
    } else if (opt.format == "json") {
        emit(json{{"name", name}, {"n", n}, {"letters", w.to_string()}}.dump(2) + "\n", opt.out_path);
    } else {
        emit(w.to_string() + "\n", opt.out_path);
    }
    return kExitOk;
}

int cmd_complexity(const Options& opt, const std::string& gen_name, const std::string& action_name,
                   const std::string& g_gens, const std::string& h_family, std::size_t lmax) {
    NameEnv env = opt.env();
    GeneratorSpec gen = env.generator(gen_name);
    ActionPair action = resolve_action(env, action_name, g_gens, h_family, gen.alphabet());
    ComplexitySeries series = complexity_series(gen, action, lmax);
    series.generator_name = gen_name;
    bool all_stable = true;
    for (const ComplexityEntry& e : series.entries) all_stable = all_stable && e.stabilized;

    if (opt.format == "json") {
        json rows = json::array();
        for (const ComplexityEntry& e : series.entries) {
            rows.push_back({{"l", e.length},
                            {"value", e.value},
                            {"prefix_used", e.prefix_used},
                            {"stabilized", e.stabilized}});
        }
        emit(json{{"generator", gen_name}, {"action", series.action_description}, {"rows", rows}}.dump(2) + "\n",
             opt.out_path);
    } else {
        std::string out = "l,value,prefix_used,stabilized\n";
        for (const ComplexityEntry& e : series.entries) {
            out += std::to_string(e.length) + "," + std::to_string(e.value) + "," +
                   std::to_string(e.prefix_used) + "," + (e.stabilized ? "1" : "0") + "\n";
        }
        emit(out, opt.out_path);
    }
    return all_stable ? kExitOk : kExitViolation;
}

int cmd_factors(const Options& opt, const std::string& gen_name, std::size_t l) {
    NameEnv env = opt.env();
    GeneratorSpec gen = env.generator(gen_name);
    FactorSet fs = factors_of_length(gen, l);
    if (opt.format == "json") {
        ParikhVector mn(gen.alphabet().size(), 0), mx(gen.alphabet().size(), 0);
        bool first = true;
        for (const FiniteWord& u : fs.factors) {
            ParikhVector pv = parikh(u);
            if (first) {
                mn = mx = pv;
                first = false;
            }
            for (std::size_t i = 0; i < pv.size(); ++i) {
                mn[i] = std::min(mn[i], pv[i]);
                mx[i] = std::max(mx[i], pv[i]);
            }
        }
        emit(json{{"generator", gen_name},
                  {"l", l},
                  {"count", fs.factors.size()},
                  {"parikh_min", mn},
                  {"parikh_max", mx},
                  {"prefix_used", fs.prefix_used},
                  {"stabilized", fs.stabilized}}
                     .dump(2) +
                 "\n",
             opt.out_path);
    } else {
        std::string out = "factor\n";
        for (const FiniteWord& u : fs.factors) out += u.to_string() + "\n";
        emit(out, opt.out_path);
    }
    return fs.stabilized ? kExitOk : kExitViolation;
}

PowerQuery build_query(const NameEnv& env, Alphabet a, const std::string& action_name, const std::string& g_gens,
                       const std::string& h_family, int r, std::size_t n_min, std::size_t n_max,
                       const std::string& filter, const std::string& g_element) {
    ActionPair action = resolve_action(env, action_name, g_gens, h_family, a);
    PowerQuery q;
    q.r = r;
    q.group = action.group;
    q.family = action.family.kind();
    q.n_min = n_min;
    if (n_max > 0) q.n_max = n_max;
    if (filter == "all" || filter.empty()) {
        q.filter = ElementFilter::All;
    } else if (filter == "nontrivial") {
        q.filter = ElementFilter::NontrivialOnly;
    } else if (filter == "specific") {
        if (g_element.empty()) throw UsageError("--filter specific needs --g-element");
        q.filter = ElementFilter::Specific;
        q.specific = AlphabetPerm::parse_cycles(a, g_element);
    } else {
        throw UsageError("unknown filter '" + filter + "'");
    }
    return q;
}

int cmd_powers(const Options& opt, const std::string& gen_name, std::size_t len, const std::string& word_digits,
               int k, const std::string& action_name, const std::string& g_gens, const std::string& h_family,
               int r, std::size_t n_min, std::size_t n_max, const std::string& filter,
               const std::string& g_element) {
    NameEnv env = opt.env();
    FiniteWord w;
    if (!word_digits.empty()) {
        if (k < 1) throw UsageError("--word needs --k alphabet size");
        w = FiniteWord::from_digits(Alphabet(k), word_digits);
    } else if (!gen_name.empty()) {
        if (len == 0) throw UsageError("--gen needs --len");
        w = prefix(env.generator(gen_name), len);
    } else {
        throw UsageError("powers needs --word or --gen");
    }
    PowerQuery q = build_query(env, w.alphabet(), action_name, g_gens, h_family, r, n_min, n_max, filter,
                               g_element);
    std::vector<PowerOccurrence> occs = find_powers(w, q);
    if (opt.format == "csv") {
        std::string out = "j,n,r,family,g,h\n";
        for (const PowerOccurrence& occ : occs) {
            out += std::to_string(occ.start) + "," + std::to_string(occ.block_len) + "," +
                   std::to_string(occ.r) + "," + family_name(occ.family) + "," +
                   (occ.witnesses.empty() ? "()" : occ.witnesses.front().g.cycle_notation()) + "," +
                   (occ.witnesses.empty() ? "id" : h_witness_name(occ.witnesses.front().h)) + "\n";
        }
        emit(out, opt.out_path);
    } else {
        json rows = json::array();
        for (const PowerOccurrence& occ : occs) rows.push_back(occurrence_json(occ));
        emit(rows.dump(2) + "\n", opt.out_path);
    }
    return kExitOk;
}

int cmd_avoid(const Options& opt, const std::string& gen_name, std::size_t prefix_len,
              const std::string& action_name, const std::string& g_gens, const std::string& h_family, int r,
              std::size_t n_min, std::size_t n_max, const std::string& filter, const std::string& g_element) {
    NameEnv env = opt.env();
    GeneratorSpec gen = env.generator(gen_name);
    PowerQuery q = build_query(env, gen.alphabet(), action_name, g_gens, h_family, r, n_min, n_max, filter,
                               g_element);
    AvoidanceReport rep = verify_avoidance(gen, q, prefix_len);
    json j{{"generator", gen_name},
           {"prefix_len", rep.prefix_len},
           {"clean", rep.clean},
           {"first_violation", rep.first_violation ? occurrence_json(*rep.first_violation) : json(nullptr)}};
    if (opt.format == "text") {
        std::string out = rep.clean ? "clean\n"
                                    : "violation at j=" + std::to_string(rep.first_violation->start) +
                                          " n=" + std::to_string(rep.first_violation->block_len) + "\n";
        emit(out, opt.out_path);
    } else {
        emit(j.dump(2) + "\n", opt.out_path);
    }
    return rep.clean ? kExitOk : kExitViolation;
}

int cmd_search(const Options& opt, int k, bool squarefree, std::size_t caesar_min, std::size_t cap,
               const std::string& policy_name, bool witness_text) {
    Alphabet a(k);
    SearchProblem p;
    p.alphabet = a;
    if (squarefree) p.constraints.push_back(SearchConstraint::squarefree(a));
    if (caesar_min > 0) p.constraints.push_back(SearchConstraint::no_caesar_square(a, caesar_min));
    if (p.constraints.empty()) throw UsageError("search needs at least one constraint");
    p.length_cap = cap;
    if (policy_name == "first") {
        p.policy = WitnessPolicy::First;
    } else if (policy_name == "all") {
        p.policy = WitnessPolicy::All;
    } else if (policy_name == "count") {
        p.policy = WitnessPolicy::Count;
    } else {
        throw UsageError("unknown witness policy '" + policy_name + "'");
    }
    SearchReport rep = dfs_longest(p);
    if (witness_text) {
        std::string out;
        for (const FiniteWord& w : rep.witnesses) out += w.to_string() + "\n";
        emit(out, opt.out_path);
        return kExitOk;
    }
    json witnesses = json::array();
    for (const FiniteWord& w : rep.witnesses) witnesses.push_back(w.to_string());
    emit(json{{"max_length", rep.max_length},
              {"exhausted", rep.exhausted},
              {"witness_count", rep.witness_count},
              {"nodes_expanded", rep.nodes_expanded},
              {"witnesses", witnesses}}
                 .dump(2) +
             "\n",
         opt.out_path);
    return kExitOk;
}

int cmd_pq(const Options& opt, std::size_t lmax, const std::string& source, bool check,
           std::size_t bounds_lmax) {
    std::string out = "l,p,q,source\n";
    auto dump = [&out](const PQTable& t) {
        const char* s = t.source == PQTable::Source::Direct ? "direct" : "recurrence";
        for (std::size_t l = 1; l <= t.lmax; ++l) {
            out += std::to_string(l) + "," + std::to_string(t.p[l]) + "," + std::to_string(t.q[l]) + "," + s +
                   "\n";
        }
    };
    bool ok = true;
    std::optional<PQTable> direct, rec;
    if (source == "direct" || source == "both") direct = pq_direct(lmax);
    if (source == "recurrence" || source == "both") rec = pq_recurrence(lmax);
    if (!direct && !rec) throw UsageError("unknown pq source '" + source + "'");
    if (direct) dump(*direct);
    if (rec) dump(*rec);
    if (check) {
        if (direct && rec) {
            for (std::size_t l = 1; l <= lmax; ++l) {
                ok = ok && direct->p[l] == rec->p[l] && direct->q[l] == rec->q[l];
            }
        }
        BoundsReport b = check_bounds(bounds_lmax ? bounds_lmax : lmax);
        ok = ok && b.pass;
        out += check ? std::string("# check ") + (ok ? "pass" : "FAIL") + "\n" : "";
    }
    emit(out, opt.out_path);
    return ok ? kExitOk : kExitViolation;
}

int cmd_verify_suite(const Options& opt, const std::string& profile_name, std::size_t lmax_override,
                     std::size_t prefix_override) {
    NameEnv env = opt.env();
    SuiteProfile prof;
    if (profile_name == "quick") {
        prof = quick_profile();
    } else if (profile_name == "full") {
        prof = full_profile();
    } else {
        throw UsageError("unknown profile '" + profile_name + "' (quick|full)");
    }
    if (lmax_override > 0) {
        prof.lmax = lmax_override;
        prof.pq_lmax = std::min(prof.pq_lmax, lmax_override);
        prof.interval_lmax = std::min(prof.interval_lmax, lmax_override);
    }
    if (prefix_override > 0) prof.scan_prefix = prefix_override;
    SuiteReport rep = run_verify_suite(env, prof);
    if (opt.format == "json") {
        emit(suite_report_json(rep).dump(2) + "\n", opt.out_path);
    } else {
        emit(suite_report_text(rep), opt.out_path);
    }
    return rep.pass ? kExitOk : kExitViolation;
}

int cmd_oeis_compare(const Options& opt, const std::string& series_path, const std::string& bfile_path,
                     long long offset) {
    std::vector<SeriesPoint> series, bfile;
    try {
        series = parse_series_csv(read_file(series_path));
        bfile = parse_bfile(read_file(bfile_path));
    } catch (const SeriesParseError& e) {
        throw UsageError(e.what());
    }
    OeisCompareReport rep = oeis_compare(series, bfile, offset);
    json j{{"comparable", rep.comparable},
           {"agree", rep.agree},
           {"overlap_lo", rep.overlap_lo},
           {"overlap_hi", rep.overlap_hi},
           {"compared", rep.compared}};
    std::string text;
    if (!rep.comparable) {
        text = "no comparable range\n";
        j["message"] = "no comparable range";
    } else if (rep.agree) {
        text = "agreement over " + std::to_string(rep.compared) + " terms (indices " +
               std::to_string(rep.overlap_lo) + ".." + std::to_string(rep.overlap_hi) + ")\n";
    } else {
        text = "first mismatch at index " + std::to_string(rep.mismatch_series->index) + ": series " +
               std::to_string(rep.mismatch_series->value) + " vs b-file " +
               std::to_string(*rep.mismatch_bvalue) + "\n";
        j["first_mismatch"] = {{"index", rep.mismatch_series->index},
                               {"series", rep.mismatch_series->value},
                               {"bfile", *rep.mismatch_bvalue}};
    }
    emit(opt.format == "json" ? j.dump(2) + "\n" : text, opt.out_path);
    if (!rep.comparable) return kExitOk;
    return rep.agree ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-action powers and factor complexity on words"};
    app.require_subcommand(1);
    // Global options (--format, --out, --config) may also appear after the
    // subcommand name.
    app.fallthrough();

    Options opt;
    app.add_option("--config", opt.config_path, "configuration file with named generators/actions");
    app.add_option("--format", opt.format, "output format: text|csv|json")->capture_default_str();
    app.add_option("--out", opt.out_path, "write output to a file instead of stdout");

    // generate
    std::string gen_name, action_name, g_gens, h_family, word_digits, filter = "all", g_element;
    std::size_t n = 0, lmax = 8, flen = 0, n_min = 1, n_max = 0, prefix_len = 20000, cap = 1024;
    std::size_t bounds_lmax = 0, lmax_override = 0, prefix_override = 0;
    int k = 3, r = 2;

    auto* generate = app.add_subcommand("generate", "print a prefix of a named word");
    generate->add_option("name", gen_name)->required();
    generate->add_option("n", n)->required();

    auto* complexity_cmd = app.add_subcommand("complexity", "orbit-counting factor complexity series");
    complexity_cmd->add_option("generator", gen_name)->required();
    complexity_cmd->add_option("action", action_name)->required();
    complexity_cmd->add_option("lmax", lmax)->required();
    complexity_cmd->add_option("--g-gens", g_gens, "explicit alphabet group generators, cycle notation");
    complexity_cmd->add_option("--h-family", h_family, "explicit position family name");

    auto* factors_cmd = app.add_subcommand("factors", "factor set of one length");
    factors_cmd->add_option("generator", gen_name)->required();
    factors_cmd->add_option("l", flen)->required();

    auto* powers_cmd = app.add_subcommand("powers", "list power occurrences in a word or prefix");
    powers_cmd->add_option("--gen", gen_name);
    powers_cmd->add_option("--len", n);
    powers_cmd->add_option("--word", word_digits);
    powers_cmd->add_option("--k", k);
    powers_cmd->add_option("--action", action_name);
    powers_cmd->add_option("--g-gens", g_gens);
    powers_cmd->add_option("--h-family", h_family);
    powers_cmd->add_option("--r", r);
    powers_cmd->add_option("--n-min", n_min);
    powers_cmd->add_option("--n-max", n_max);
    powers_cmd->add_option("--filter", filter, "all|nontrivial|specific");
    powers_cmd->add_option("--g-element", g_element, "cycle notation for --filter specific");

    auto* avoid_cmd = app.add_subcommand("avoid", "scan a prefix for any power occurrence");
    avoid_cmd->add_option("generator", gen_name)->required();
    avoid_cmd->add_option("--prefix", prefix_len);
    avoid_cmd->add_option("--action", action_name);
    avoid_cmd->add_option("--g-gens", g_gens);
    avoid_cmd->add_option("--h-family", h_family);
    avoid_cmd->add_option("--r", r);
    avoid_cmd->add_option("--n-min", n_min);
    avoid_cmd->add_option("--n-max", n_max);
    avoid_cmd->add_option("--filter", filter);
    avoid_cmd->add_option("--g-element", g_element);

    bool squarefree = false, witness_text = false, pq_check = false;
    std::size_t caesar_min = 0;
    std::string policy = "first", pq_source = "both", profile = "quick";
    std::string series_path, bfile_path;
    long long offset = 0;

    auto* search_cmd = app.add_subcommand("search", "longest word satisfying avoidance constraints");
    search_cmd->add_option("--k", k);
    search_cmd->add_flag("--squarefree", squarefree);
    search_cmd->add_option("--caesar-min", caesar_min, "forbid Caesar squares of half-length >= this");
    search_cmd->add_option("--cap", cap);
    search_cmd->add_option("--policy", policy, "first|all|count");
    search_cmd->add_flag("--witness-text", witness_text, "print witnesses one per line");

    auto* pq_cmd = app.add_subcommand("pq", "extremal 1-count tables of vtm");
    pq_cmd->add_option("--lmax", lmax)->required();
    pq_cmd->add_option("--source", pq_source, "direct|recurrence|both");
    pq_cmd->add_flag("--check", pq_check, "verify direct == recurrence and bounds");
    pq_cmd->add_option("--bounds-lmax", bounds_lmax);

    auto* suite_cmd = app.add_subcommand("verify-suite", "run the one-shot verification suite");
    suite_cmd->add_option("--profile", profile, "quick|full")->capture_default_str();
    suite_cmd->add_option("--lmax", lmax_override, "override profile series depth");
    suite_cmd->add_option("--prefix", prefix_override, "override profile scan prefix");

    auto* oeis_cmd = app.add_subcommand("oeis-compare", "compare a series CSV with a local b-file");
    oeis_cmd->add_option("--series", series_path)->required();
    oeis_cmd->add_option("--bfile", bfile_path)->required();
    oeis_cmd->add_option("--offset", offset, "b-file index = series index + offset")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(opt, gen_name, n);
        if (complexity_cmd->parsed()) return cmd_complexity(opt, gen_name, action_name, g_gens, h_family, lmax);
        if (factors_cmd->parsed()) return cmd_factors(opt, gen_name, flen);
        if (powers_cmd->parsed()) {
            return cmd_powers(opt, gen_name, n, word_digits, k, action_name, g_gens, h_family, r, n_min,
                              n_max, filter, g_element);
        }
        if (avoid_cmd->parsed()) {
            return cmd_avoid(opt, gen_name, prefix_len, action_name, g_gens, h_family, r, n_min, n_max, filter,
                             g_element);
        }
        if (search_cmd->parsed()) return cmd_search(opt, k, squarefree, caesar_min, cap, policy, witness_text);
        if (pq_cmd->parsed()) return cmd_pq(opt, lmax, pq_source, pq_check, bounds_lmax);
        if (suite_cmd->parsed()) return cmd_verify_suite(opt, profile, lmax_override, prefix_override);
        if (oeis_cmd->parsed()) return cmd_oeis_compare(opt, series_path, bfile_path, offset);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const StabilizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

#pragma once

// The one-shot verification suite: every headline claim the library can
// check at desk scale, run against a name environment (so a config that
// redefines a built-in word is verified in its corrupted form).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitwords/complexity.hpp"
#include "orbitwords/config.hpp"
#include "orbitwords/factors.hpp"
#include "orbitwords/pqstats.hpp"
#include "orbitwords/powers.hpp"
#include "orbitwords/search.hpp"

namespace orbitwords {

struct SuiteProfile {
    std::string name = "quick";
    std::size_t lmax = 64;            // relation series depth
    std::size_t scan_prefix = 20000;  // avoidance scans
    std::size_t pq_lmax = 64;         // direct-vs-recurrence depth
    std::size_t bounds_lmax = 4096;
    std::size_t interval_lmax = 64;
    std::size_t s3_nmax = 256;
    int mesosome_samples = 2000;
    int monotonicity_words = 20;
};

inline SuiteProfile quick_profile() { return {}; }

inline SuiteProfile full_profile() {
    SuiteProfile p;
    p.name = "full";
    p.lmax = 512;
    p.pq_lmax = 512;
    p.interval_lmax = 256;
    p.mesosome_samples = 10000;
    p.monotonicity_words = 50;
    return p;
}

struct CheckRecord {
    std::string id;
    std::string claim;
    nlohmann::json params;
    bool pass = false;
    std::string details;
    nlohmann::json rows;  // per-l rows for relation-backed checks
    double seconds = 0.0;
};

struct SuiteReport {
    std::string profile;
    std::vector<CheckRecord> checks;
    bool pass = false;
};

inline nlohmann::json relation_rows_json(const RelationReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const RelationRow& r : rep.rows) {
        rows.push_back({{"l", r.l},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"pass", r.pass},
                        {"stabilized", r.stabilized},
                        {"note", r.note}});
    }
    return rows;
}

namespace detail {

inline std::string rows_summary(const RelationReport& rep) {
    std::size_t bad = 0;
    std::string first;
    for (const RelationRow& r : rep.rows) {
        if (!r.pass || !r.stabilized) {
            if (bad == 0) {
                first = "first failure at l=" + std::to_string(r.l) + " lhs=" + std::to_string(r.lhs) +
                        " rhs=" + std::to_string(r.rhs) + (r.stabilized ? "" : " (unstabilized)");
            }
            ++bad;
        }
    }
    if (bad == 0) return std::to_string(rep.rows.size()) + " rows pass";
    return std::to_string(bad) + "/" + std::to_string(rep.rows.size()) + " rows fail; " + first;
}

struct SuiteRunner {
    const NameEnv& env;
    const SuiteProfile& prof;
    SuiteReport report;

    void run(const std::string& id, const std::string& claim, nlohmann::json params,
             const std::function<std::pair<bool, std::string>()>& body) {
        CheckRecord rec;
        rec.id = id;
        rec.claim = claim;
        rec.params = std::move(params);
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [pass, details] = body();
            rec.pass = pass;
            rec.details = details;
        } catch (const std::exception& e) {
            rec.pass = false;
            rec.details = std::string("exception: ") + e.what();
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.checks.push_back(std::move(rec));
    }

    /// Checks backed by a relation verifier also export their per-l rows.
    void run_relation(const std::string& id, const std::string& claim, nlohmann::json params,
                      const std::function<RelationReport()>& body) {
        CheckRecord rec;
        rec.id = id;
        rec.claim = claim;
        rec.params = std::move(params);
        auto t0 = std::chrono::steady_clock::now();
        try {
            RelationReport rep = body();
            rec.pass = rep.pass;
            rec.details = rows_summary(rep);
            rec.rows = relation_rows_json(rep);
        } catch (const std::exception& e) {
            rec.pass = false;
            rec.details = std::string("exception: ") + e.what();
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.checks.push_back(std::move(rec));
    }
};

}  // namespace detail

inline SuiteReport run_verify_suite(const NameEnv& env, const SuiteProfile& prof) {
    detail::SuiteRunner runner{env, prof, {}};
    runner.report.profile = prof.name;

    GeneratorSpec vtm = env.generator("vtm");
    GeneratorSpec pd = env.generator("pd");
    GeneratorSpec tm = env.generator("tm");
    GeneratorSpec psi_tm = env.generator("psi-tm");
    GeneratorSpec w_alpha = env.generator("w-alpha");
    Alphabet tern(3), bin(2);

    runner.run("vtm-squarefree", "the ternary word vtm contains no square xx",
               {{"prefix", prof.scan_prefix}}, [&] {
                   AvoidanceReport rep = verify_avoidance(vtm, PowerQuery::square(tern), prof.scan_prefix);
                   return std::make_pair(rep.clean, rep.clean ? "clean" : "square at j=" +
                                         std::to_string(rep.first_violation->start));
               });

    runner.run("caesar-ge-12", "vtm contains no Caesar square of half-length >= 6",
               {{"prefix", prof.scan_prefix}, {"n_min", 6}}, [&] {
                   AvoidanceReport rep = verify_avoidance(vtm, PowerQuery::caesar_square(tern, 6), prof.scan_prefix);
                   return std::make_pair(rep.clean, rep.clean ? "clean" : "violation at j=" +
                                         std::to_string(rep.first_violation->start) + " n=" +
                                         std::to_string(rep.first_violation->block_len));
               });

    runner.run("caesar-spectrum", "the Caesar-square half-lengths occurring in vtm form a nonempty subset of {1..5}",
               {{"prefix", prof.scan_prefix}}, [&] {
                   std::set<std::size_t> spec = caesar_spectrum(vtm, prof.scan_prefix);
                   bool ok = !spec.empty();
                   std::string got;
                   for (std::size_t n : spec) {
                       ok = ok && n <= 5;
                       got += (got.empty() ? "" : ",") + std::to_string(n);
                   }
                   return std::make_pair(ok, "{" + got + "}");
               });

    runner.run("caesar-extremal-21",
               "the longest ternary squarefree word avoiding Caesar squares of half-length >= 5 has "
               "length 21 and is unique up to alphabet permutation",
               {{"min_half_length", 5}}, [&] {
                   SearchProblem p{tern,
                                   {SearchConstraint::squarefree(tern), SearchConstraint::no_caesar_square(tern, 5)},
                                   4096,
                                   WitnessPolicy::All};
                   SearchReport rep = dfs_longest(p);
                   auto classes = canonical_witnesses(rep, AlphabetGroup::symmetric(tern));
                   bool ok = rep.exhausted && rep.max_length == 21 && classes.size() == 1 &&
                             !rep.witnesses.empty() &&
                             rep.witnesses.front().to_string() == "010201210212012102010";
                   return std::make_pair(ok, "max=" + std::to_string(rep.max_length) + " witnesses=" +
                                                 std::to_string(rep.witness_count) + " classes=" +
                                                 std::to_string(classes.size()));
               });

    runner.run("reflection-avoidance", "vtm contains neither squares nor reflection squares",
               {{"prefix", prof.scan_prefix}}, [&] {
                   AvoidanceReport rep =
                       verify_avoidance(vtm, PowerQuery::reflection_square(tern), prof.scan_prefix);
                   return std::make_pair(rep.clean, rep.clean ? "clean" : "violation at j=" +
                                         std::to_string(rep.first_violation->start));
               });

    runner.run("first-last-avoidance",
               "vtm contains no square with blocks related by exchanging first and last letters",
               {{"prefix", prof.scan_prefix}}, [&] {
                   AvoidanceReport rep = verify_avoidance(
                       vtm, PowerQuery::first_last_square(tern, ElementFilter::NontrivialOnly), prof.scan_prefix);
                   return std::make_pair(rep.clean, rep.clean ? "clean" : "violation at j=" +
                                         std::to_string(rep.first_violation->start));
               });

    runner.run("s3-squares-powers-of-2",
               "vtm contains 0<->2 swap squares of half-length n for every power of 2 up to the cap",
               {{"n_max", prof.s3_nmax}}, [&] {
                   AlphabetPerm g = AlphabetPerm::parse_cycles(tern, "(0 2)");
                   std::set<std::size_t> found = s3_square_half_lengths(vtm, g, prof.s3_nmax);
                   std::string missing;
                   for (std::size_t n = 1; n <= prof.s3_nmax; n *= 2) {
                       if (!found.count(n)) missing += (missing.empty() ? "" : ",") + std::to_string(n);
                   }
                   return std::make_pair(missing.empty(),
                                         missing.empty() ? std::to_string(found.size()) + " half-lengths found"
                                                         : "missing powers of 2: " + missing);
               });

    runner.run_relation("tm-parity",
                        "the 2-letter-symmetric abelian complexity of tm is 1 for odd l, 2 for even l",
                        {{"lmax", prof.lmax}},
                        [&] { return detail::relation_tm_parity(tm, prof.lmax); });

    runner.run_relation("sturmian-constant",
                        "the 2-letter-symmetric abelian complexity of the slope-below-1/4 Sturmian word is "
                        "1 at l=1 and 2 for l>1",
                        {{"lmax", prof.lmax}}, [&] {
                            return detail::relation_constant_1_then_2(RelationId::SturmianConstant, w_alpha,
                                                                      prof.lmax);
                        });
    runner.run_relation("psi-tm-constant",
                        "the 2-letter-symmetric abelian complexity of the four-block image of tm is 1 at "
                        "l=1 and 2 for l>1",
                        {{"lmax", prof.lmax}}, [&] {
                            return detail::relation_constant_1_then_2(RelationId::PsiTmConstant, psi_tm,
                                                                      prof.lmax);
                        });

    runner.run("psi-tm-not-sturmian", "the four-block image of tm has some l <= 16 with complexity != l+1",
               {{"lmax", 16}}, [&] {
                   ActionPair plain{AlphabetGroup::trivial(bin), PositionFamily::trivial()};
                   PrefixCache cache(psi_tm);
                   for (std::size_t l = 1; l <= 16; ++l) {
                       std::uint64_t rho = complexity(psi_tm, plain, l, {}, &cache);
                       if (rho != l + 1) {
                           return std::make_pair(true, "witness l=" + std::to_string(l) + " rho=" +
                                                           std::to_string(rho));
                       }
                   }
                   return std::make_pair(false, std::string("complexity is l+1 for all l <= 16"));
               });

    runner.run_relation(
        "vtm-halving",
        "the 0<->2 swap halves the factor complexity of vtm for l >= 2 and gives 2 (not 3/2) at l = 1",
        {{"lmax", std::min<std::size_t>(prof.lmax, 128)}},
        [&] { return detail::relation_vtm_halving(vtm, std::min<std::size_t>(prof.lmax, 128)); });

    runner.run("mesosome-equivalence",
               "a ternary word contains a square iff it contains a rotation square (sampled)",
               {{"samples", prof.mesosome_samples}}, [&] {
                   std::mt19937 rng(0xc0ffee);
                   for (int i = 0; i < prof.mesosome_samples; ++i) {
                       std::size_t len = 2 + rng() % 39;
                       std::vector<Letter> ls(len);
                       for (auto& x : ls) x = static_cast<Letter>(rng() % 3);
                       FiniteWord w(tern, std::move(ls));
                       bool has_square = !find_powers(w, PowerQuery::square(tern)).empty();
                       bool has_rot = !find_powers(w, PowerQuery::rotation_square(tern)).empty();
                       if (has_square != has_rot) {
                           return std::make_pair(false, "counterexample: " + w.to_string());
                       }
                   }
                   return std::make_pair(true, std::to_string(prof.mesosome_samples) + " samples agree");
               });

    runner.run_relation("subgroup-monotonicity",
                        "complexity never increases when the acting groups grow (sampled subgroup pairs)",
                        {{"random_words", prof.monotonicity_words}}, [&] {
                            MonotonicityOptions opt;
                            opt.lmax = std::min<std::size_t>(prof.lmax, 24);
                            opt.random_words = prof.monotonicity_words;
                            return verify_relation(RelationId::SubgroupMonotonicity, opt.lmax, opt);
                        });

    runner.run("pq-direct-vs-recurrence", "direct and recurrence 1-count extremes of vtm factors agree",
               {{"lmax", prof.pq_lmax}}, [&] {
                   PQTable direct = pq_direct(prof.pq_lmax);
                   PQTable rec = pq_recurrence(prof.pq_lmax);
                   for (std::size_t l = 1; l <= prof.pq_lmax; ++l) {
                       if (direct.p[l] != rec.p[l] || direct.q[l] != rec.q[l]) {
                           return std::make_pair(false, "mismatch at l=" + std::to_string(l));
                       }
                   }
                   std::string issue = direct.validate();
                   if (!issue.empty()) return std::make_pair(false, "direct table invalid: " + issue);
                   return std::make_pair(true, std::to_string(prof.pq_lmax) + " lengths agree");
               });

    runner.run("pq-bounds", "p[l] <= floor((l-1)/3) and q[l] >= floor(l/3)+1",
               {{"lmax", prof.bounds_lmax}}, [&] {
                   BoundsReport rep = check_bounds(prof.bounds_lmax);
                   return std::make_pair(rep.pass,
                                         rep.pass ? std::to_string(rep.lmax) + " lengths pass"
                                                  : "first failure at l=" + std::to_string(rep.failures.front().l));
               });

    runner.run("ones-interval", "the 1-counts of length-l vtm factors form a gap-free integer interval",
               {{"lmax", prof.interval_lmax}}, [&] {
                   PrefixCache cache(vtm);
                   for (std::size_t l = 1; l <= prof.interval_lmax; ++l) {
                       OnesInterval iv = ones_count_interval(vtm, l, {}, &cache);
                       if (!iv.stabilized || !iv.gap_free) {
                           return std::make_pair(false, "fails at l=" + std::to_string(l));
                       }
                   }
                   return std::make_pair(true, std::to_string(prof.interval_lmax) + " lengths pass");
               });

    runner.run_relation(
        "vtm-pd-main-theorem",
        "the fully symmetric orbit complexity of vtm equals the abelian complexity of pd minus 1",
        {{"lmax", prof.lmax}}, [&] { return detail::relation_vtm_pd(vtm, pd, prof.lmax); });

    runner.run_relation(
        "pd-recurrences",
        "the abelian complexity of pd satisfies value(2l) = value(l) and value(4l+-1) = value(l)+1",
        {{"lmax", std::min<std::size_t>(prof.lmax, 128)}},
        [&] { return detail::relation_pd_recurrences(pd, std::min<std::size_t>(prof.lmax, 128)); });

    std::sort(runner.report.checks.begin(), runner.report.checks.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
    runner.report.pass = true;
    for (const CheckRecord& rec : runner.report.checks) runner.report.pass = runner.report.pass && rec.pass;
    return runner.report;
}

inline nlohmann::json suite_report_json(const SuiteReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRecord& c : rep.checks) {
        nlohmann::json entry = {{"id", c.id},     {"claim", c.claim},     {"params", c.params},
                                {"pass", c.pass}, {"details", c.details}, {"seconds", c.seconds}};
        if (c.rows.is_array()) entry["rows"] = c.rows;
        checks.push_back(std::move(entry));
    }
    return {{"profile", rep.profile}, {"pass", rep.pass}, {"checks", checks}};
}

inline std::string suite_report_text(const SuiteReport& rep) {
    std::string out = "verification suite (profile " + rep.profile + ")\n";
    for (const CheckRecord& c : rep.checks) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%7.2fs", c.seconds);
        out += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.id + " " + buf + "  " + c.details + "\n";
    }
    out += rep.pass ? "all checks passed\n" : "SUITE FAILED\n";
    return out;
}

}  // namespace orbitwords

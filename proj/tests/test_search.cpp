#include <catch_amalgamated.hpp>

#include "orbitwords/search.hpp"

using namespace orbitwords;

namespace {

SearchProblem extremal_problem(std::size_t min_half_length, std::size_t cap, WitnessPolicy policy) {
    Alphabet a(3);
    SearchProblem p;
    p.alphabet = a;
    p.constraints = {SearchConstraint::squarefree(a), SearchConstraint::no_caesar_square(a, min_half_length)};
    p.length_cap = cap;
    p.policy = policy;
    return p;
}

}  // namespace

TEST_CASE("longest squarefree word avoiding caesar squares of half-length >= 5") {
    SearchReport rep = dfs_longest(extremal_problem(5, 4096, WitnessPolicy::All));
    CHECK(rep.exhausted);
    CHECK(rep.max_length == 21);
    CHECK(rep.witness_count == 6);
    REQUIRE_FALSE(rep.witnesses.empty());
    CHECK(rep.witnesses.front().to_string() == "010201210212012102010");

    auto classes = canonical_witnesses(rep, AlphabetGroup::symmetric(Alphabet(3)));
    CHECK(classes.size() == 1);
    CHECK(classes.front().to_string() == "010201210212012102010");
}

TEST_CASE("relaxing to half-length >= 6 blows past the cap") {
    SearchReport rep = dfs_longest(extremal_problem(6, 5000, WitnessPolicy::First));
    CHECK_FALSE(rep.exhausted);
    CHECK(rep.max_length == 5000);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses.front().size() == 5000);
}

TEST_CASE("squarefree ternary words alone are unbounded") {
    Alphabet a(3);
    SearchProblem p;
    p.alphabet = a;
    p.constraints = {SearchConstraint::squarefree(a)};
    p.length_cap = 1000;
    SearchReport rep = dfs_longest(p);
    CHECK_FALSE(rep.exhausted);
    CHECK(rep.max_length == 1000);
}

TEST_CASE("tight constraints exhaust instantly") {
    // Avoiding all Caesar squares over a transitive group caps words at one
    // letter.
    Alphabet a(3);
    SearchProblem p;
    p.alphabet = a;
    p.constraints = {SearchConstraint::no_caesar_square(a, 1)};
    p.length_cap = 100;
    SearchReport rep = dfs_longest(p);
    CHECK(rep.exhausted);
    CHECK(rep.max_length == 1);
    CHECK(rep.witness_count == 3);
}

TEST_CASE("witnesses satisfy their constraints from scratch", "[property]") {
    SearchProblem p = extremal_problem(5, 4096, WitnessPolicy::All);
    SearchReport rep = dfs_longest(p);
    for (const FiniteWord& w : rep.witnesses) {
        for (const SearchConstraint& c : p.constraints) {
            CHECK(find_powers(w, c.query).empty());
        }
        // Prefix closure: every prefix also satisfies every constraint.
        for (std::size_t m = 1; m < w.size(); ++m) {
            FiniteWord pre = w.factor(0, m);
            for (const SearchConstraint& c : p.constraints) {
                CHECK(find_powers(pre, c.query).empty());
            }
        }
    }
}

TEST_CASE("reports are deterministic, node counts included") {
    SearchReport a = dfs_longest(extremal_problem(5, 4096, WitnessPolicy::Count));
    SearchReport b = dfs_longest(extremal_problem(5, 4096, WitnessPolicy::Count));
    CHECK(a.max_length == b.max_length);
    CHECK(a.witness_count == b.witness_count);
    CHECK(a.nodes_expanded == b.nodes_expanded);
    CHECK(a.exhausted == b.exhausted);
}

TEST_CASE("policy first returns the lexicographically least witness") {
    SearchReport first = dfs_longest(extremal_problem(5, 4096, WitnessPolicy::First));
    SearchReport all = dfs_longest(extremal_problem(5, 4096, WitnessPolicy::All));
    REQUIRE(first.witnesses.size() == 1);
    CHECK(first.witnesses.front() == all.witnesses.front());
    CHECK(std::is_sorted(all.witnesses.begin(), all.witnesses.end()));
}

TEST_CASE("custom power-query constraints") {
    // Forbid (1, Reversal)-squares over the binary alphabet: squares and
    // reflection squares together cap words at length 3.
    Alphabet a(2);
    SearchProblem p;
    p.alphabet = a;
    p.constraints = {SearchConstraint::custom("no-reflection-square", PowerQuery::reflection_square(a))};
    p.length_cap = 64;
    p.policy = WitnessPolicy::All;
    SearchReport rep = dfs_longest(p);
    CHECK(rep.exhausted);
    CHECK(rep.max_length == 3);
    REQUIRE(rep.witness_count == 2);
    CHECK(rep.witnesses.front().to_string() == "010");
    CHECK(rep.witnesses.back().to_string() == "101");
}

TEST_CASE("canonical witness helpers") {
    SearchReport rep;
    rep.witnesses = {FiniteWord::from_digits(Alphabet(3), "01"), FiniteWord::from_digits(Alphabet(3), "12")};
    auto classes = canonical_witnesses(rep, AlphabetGroup::cyclic(Alphabet(3)));
    REQUIRE(classes.size() == 1);
    CHECK(classes.front().to_string() == "01");
    CHECK(canonical_witnesses(SearchReport{}, AlphabetGroup::cyclic(Alphabet(3))).empty());
}

TEST_CASE("problem validation") {
    SearchProblem p;
    p.alphabet = Alphabet(3);
    CHECK_THROWS_AS(dfs_longest(p), std::invalid_argument);  // no constraints
    p.constraints = {SearchConstraint::squarefree(Alphabet(3))};
    p.length_cap = 2'000'000;
    CHECK_THROWS_AS(dfs_longest(p), std::invalid_argument);  // cap too large
    p.length_cap = 10;
    p.constraints = {SearchConstraint::squarefree(Alphabet(2))};
    CHECK_THROWS_AS(dfs_longest(p), std::invalid_argument);  // alphabet mismatch
}

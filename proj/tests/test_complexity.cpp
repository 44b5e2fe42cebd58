#include <catch_amalgamated.hpp>

#include <random>

#include "orbitwords/complexity.hpp"

using namespace orbitwords;

namespace {

ActionPair plain(int k) { return {AlphabetGroup::trivial(Alphabet(k)), PositionFamily::trivial()}; }
ActionPair abelian(int k) { return {AlphabetGroup::trivial(Alphabet(k)), PositionFamily::full_symmetric()}; }
ActionPair sym_abelian(int k) { return {AlphabetGroup::symmetric(Alphabet(k)), PositionFamily::full_symmetric()}; }

}  // namespace

TEST_CASE("single complexity values") {
    CHECK(complexity(builtin_vtm(), plain(3), 1) == 3);
    CHECK(complexity(builtin_tm(), sym_abelian(2), 3) == 1);
    CHECK(complexity(builtin_tm(), sym_abelian(2), 4) == 2);
    CHECK(complexity(builtin_w_alpha(), sym_abelian(2), 1) == 1);
    CHECK(complexity(builtin_w_alpha(), sym_abelian(2), 7) == 2);
    CHECK(complexity(builtin_psi_tm(), sym_abelian(2), 9) == 2);
    CHECK(complexity(builtin_pd(), abelian(2), 1) == 2);
}

TEST_CASE("complexity requires stabilization") {
    StabilizationPolicy tiny;
    tiny.initial_prefix = 64;
    tiny.prefix_cap = 128;
    CHECK_THROWS_AS(complexity(builtin_vtm(), plain(3), 16, tiny), StabilizationError);
    ComplexityEntry e = complexity_entry(builtin_vtm(), plain(3), 16, tiny);
    CHECK_FALSE(e.stabilized);
}

TEST_CASE("vtm halving by the 0<->2 swap") {
    GeneratorSpec vtm = builtin_vtm();
    ActionPair swapped{AlphabetGroup::transposition(Alphabet(3), 0, 2), PositionFamily::trivial()};
    PrefixCache cache(vtm);
    CHECK(complexity(vtm, swapped, 1, {}, &cache) == 2);
    CHECK(complexity(vtm, plain(3), 1, {}, &cache) == 3);
    for (std::size_t l = 2; l <= 64; ++l) {
        std::uint64_t half = complexity(vtm, swapped, l, {}, &cache);
        std::uint64_t rho = complexity(vtm, plain(3), l, {}, &cache);
        CHECK(2 * half == rho);
    }
}

TEST_CASE("swapping the two leftmost positions changes nothing for (012)^w") {
    GeneratorSpec w = builtin_period012();
    PrefixCache cache(w);
    for (std::size_t l = 2; l <= 32; ++l) {
        PositionFamily fam = PositionFamily::generated(l, {PositionPerm::parse_cycles(l, "(0 1)")});
        ActionPair action{AlphabetGroup::trivial(Alphabet(3)), fam};
        std::uint64_t with_h = complexity(w, action, l, {}, &cache);
        std::uint64_t ordinary = complexity(w, plain(3), l, {}, &cache);
        CHECK(with_h == ordinary);
        CHECK(ordinary == 3);
    }
}

TEST_CASE("complexity series carries provenance") {
    ComplexitySeries s = complexity_series(builtin_tm(), sym_abelian(2), 6);
    REQUIRE(s.entries.size() == 6);
    std::vector<std::uint64_t> vals;
    for (const auto& e : s.entries) {
        CHECK(e.stabilized);
        CHECK(e.prefix_used >= 1024);
        vals.push_back(e.value);
    }
    CHECK(vals == std::vector<std::uint64_t>{1, 2, 1, 2, 1, 2});
}

TEST_CASE("abelian parikh classes") {
    auto tm5 = abelian_parikh_classes(builtin_tm(), 5);
    CHECK(tm5 == std::vector<ParikhVector>{{2, 3}, {3, 2}});
    auto tm4 = abelian_parikh_classes(builtin_tm(), 4);
    CHECK(tm4 == std::vector<ParikhVector>{{1, 3}, {2, 2}, {3, 1}});
    // Sturmian: (l - floor(l a), floor) and (l - ceil, ceil) for small l.
    auto w1 = abelian_parikh_classes(builtin_w_alpha(), 1);
    CHECK(w1 == std::vector<ParikhVector>{{0, 1}, {1, 0}});
    auto w2 = abelian_parikh_classes(builtin_w_alpha(), 2);
    CHECK(w2 == std::vector<ParikhVector>{{1, 1}, {2, 0}});
    auto w3 = abelian_parikh_classes(builtin_w_alpha(), 3);
    CHECK(w3 == std::vector<ParikhVector>{{2, 1}, {3, 0}});
    auto w4 = abelian_parikh_classes(builtin_w_alpha(), 4);
    CHECK(w4 == std::vector<ParikhVector>{{3, 1}, {4, 0}});
}

TEST_CASE("relation: vtm-pd main theorem at unit scale") {
    RelationReport rep = verify_relation(RelationId::VtmPdTheorem, 64);
    CHECK(rep.pass);
    CHECK(rep.rows.size() == 64);
}

TEST_CASE("relation: pd recurrences") {
    RelationReport rep = verify_relation(RelationId::PdRecurrences, 48);
    CHECK(rep.pass);
}

TEST_CASE("relation: tm parity") {
    RelationReport rep = verify_relation(RelationId::TmParity, 64);
    CHECK(rep.pass);
}

TEST_CASE("relation: sturmian and psi-tm constants") {
    CHECK(verify_relation(RelationId::SturmianConstant, 48).pass);
    CHECK(verify_relation(RelationId::PsiTmConstant, 48).pass);
}

TEST_CASE("relation: vtm halving") {
    RelationReport rep = verify_relation(RelationId::VtmHalving, 48);
    CHECK(rep.pass);
    CHECK(rep.rows.front().note == "l=1 exception");
}

TEST_CASE("relation ids parse") {
    CHECK(parse_relation_id("vtm-pd-theorem") == RelationId::VtmPdTheorem);
    CHECK(parse_relation_id("tm-parity") == RelationId::TmParity);
    CHECK_FALSE(parse_relation_id("nonsense").has_value());
}

TEST_CASE("sturmian ordinary and abelian complexity") {
    GeneratorSpec w = builtin_w_alpha();
    PrefixCache cache(w);
    for (std::size_t l = 1; l <= 64; ++l) {
        CHECK(complexity(w, plain(2), l, {}, &cache) == l + 1);
        CHECK(complexity(w, abelian(2), l, {}, &cache) == 2);
    }
}

TEST_CASE("psi(tm) is not Sturmian") {
    GeneratorSpec w = builtin_psi_tm();
    PrefixCache cache(w);
    bool witness = false;
    for (std::size_t l = 1; l <= 16 && !witness; ++l) {
        witness = complexity(w, plain(2), l, {}, &cache) != l + 1;
    }
    CHECK(witness);
}

TEST_CASE("sandwich between 1 and ordinary complexity", "[property]") {
    std::mt19937 rng(23);
    std::vector<GeneratorSpec> gens = {builtin_vtm(), builtin_pd(), builtin_tm(), builtin_psi_tm()};
    std::vector<PositionFamily> fams = {PositionFamily::trivial(), PositionFamily::full_symmetric(),
                                        PositionFamily::rotation(), PositionFamily::reversal(),
                                        PositionFamily::first_last_swap()};
    for (int trial = 0; trial < 30; ++trial) {
        const GeneratorSpec& gen = gens[rng() % gens.size()];
        int k = gen.alphabet().size();
        std::size_t l = 1 + rng() % 24;
        AlphabetGroup grp = (rng() % 2) ? AlphabetGroup::symmetric(Alphabet(k)) : AlphabetGroup::cyclic(Alphabet(k));
        ActionPair action{grp, fams[rng() % fams.size()]};
        PrefixCache cache(gen);
        std::uint64_t v = complexity(gen, action, l, {}, &cache);
        std::uint64_t rho = complexity(gen, plain(k), l, {}, &cache);
        CHECK(v >= 1);
        CHECK(v <= rho);
    }
}

TEST_CASE("relation: subgroup monotonicity sample") {
    MonotonicityOptions opt;
    opt.lmax = 16;
    opt.random_words = 25;
    RelationReport rep = verify_relation(RelationId::SubgroupMonotonicity, 16, opt);
    CHECK(rep.pass);
}

TEST_CASE("balanced-sum pairs coincide (exhaustive)") {
    // a+b = c+d with |a-b| <= 1 and |c-d| <= 1 forces {a,b} = {c,d}.
    for (int a = -10; a <= 10; ++a) {
        for (int b = -10; b <= 10; ++b) {
            for (int c = -10; c <= 10; ++c) {
                for (int d = -10; d <= 10; ++d) {
                    if (a + b != c + d || std::abs(a - b) > 1 || std::abs(c - d) > 1) continue;
                    CHECK(std::minmax(a, b) == std::minmax(c, d));
                }
            }
        }
    }
}

#include <catch_amalgamated.hpp>

#include <random>

#include "orbitwords/continued_fraction.hpp"
#include "orbitwords/generator.hpp"
#include "orbitwords/morphism.hpp"
#include "orbitwords/word.hpp"

using namespace orbitwords;

namespace {

FiniteWord tw(int k, const std::string& digits) { return FiniteWord::from_digits(Alphabet(k), digits); }

}  // namespace

TEST_CASE("alphabet bounds") {
    CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet(17), std::invalid_argument);
    CHECK(Alphabet(16).size() == 16);
}

TEST_CASE("letters are validated") {
    CHECK_THROWS_AS(FiniteWord(Alphabet(2), {0, 2}), std::invalid_argument);
    FiniteWord empty(Alphabet(3));
    CHECK(empty.empty());
    CHECK(tw(3, "0102").to_string() == "0102");
}

TEST_CASE("morphism validation for prolongable seeds") {
    Morphism vtm = vtm_morphism();
    CHECK(validate_morphism(vtm, 0).ok);

    Morphism identity = Morphism::from_rules(Alphabet(2), Alphabet(2), {"0", "1"});
    MorphismValidation v = validate_morphism(identity, 0);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "image does not grow");

    CHECK_THROWS_AS(Morphism::from_rules(Alphabet(2), Alphabet(2), {"12", "01"}), std::invalid_argument);
    Morphism wrong_start = Morphism::from_rules(Alphabet(3), Alphabet(3), {"12", "01", "2"});
    v = validate_morphism(wrong_start, 0);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "image does not start with seed");
}

TEST_CASE("prefixes of the built-in words") {
    CHECK(prefix(builtin_vtm(), 12).to_string() == "012021012102");
    CHECK(prefix(builtin_pd(), 8).to_string() == "01000101");
    CHECK(prefix(builtin_tm(), 8).to_string() == "01101001");
    CHECK(prefix(builtin_psi_tm(), 12).to_string() == "001101100110");
    CHECK(prefix(builtin_period012(), 7).to_string() == "0120120");
    CHECK(prefix(builtin_vtm(), 0).empty());
}

TEST_CASE("morphic-image generators validate the coding alphabet") {
    Morphism coding = Morphism::from_rules(Alphabet(2), Alphabet(2), {"01", "10"});
    CHECK_THROWS_AS(GeneratorSpec::morphic_image(builtin_vtm(), coding), std::invalid_argument);
    GeneratorSpec ok = GeneratorSpec::morphic_image(builtin_vtm(), squash02_morphism());
    CHECK(prefix(ok, 8).to_string() == "01000101");
}

TEST_CASE("digit rendering above 9 uses letters") {
    FiniteWord w(Alphabet(16), {0, 9, 10, 15});
    CHECK(w.to_string() == "09af");
    CHECK(FiniteWord::from_digits(Alphabet(16), "09af") == w);
}

TEST_CASE("morphic image concatenates letter images") {
    Morphism phi = squash02_morphism();
    CHECK(morphic_image(tw(3, "012021"), phi).to_string() == "010001");
    CHECK(morphic_image(FiniteWord(Alphabet(3)), phi).empty());
    CHECK(morphic_image(tw(2, "01"), psi_morphism()).to_string() == "00110110");
    CHECK_THROWS_AS(morphic_image(tw(2, "01"), phi), std::invalid_argument);
}

TEST_CASE("sturmian standard-word prefixes") {
    CHECK(sturmian_prefix({1, 1, 1, 1, 1}, 8).to_string() == "01001010");
    CHECK(sturmian_prefix({5, 1, 1, 1, 1, 1}, 6).to_string() == "000001");
    CHECK(sturmian_prefix({3, 2}, 0).empty());
    // s1 = 0^1 1 has length 2; nothing longer is determined by one quotient.
    CHECK_THROWS_AS(sturmian_prefix({1}, 3), BudgetError);
    CHECK_THROWS_AS(GeneratorSpec::sturmian({}), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSpec::sturmian({1, 0}), std::invalid_argument);
}

TEST_CASE("prefix budget is enforced") {
    PrefixOptions opts;
    opts.max_letters = 100;
    CHECK_THROWS_AS(prefix(builtin_vtm(), 101, opts), BudgetError);
    CHECK(prefix(builtin_vtm(), 100, opts).size() == 100);
}

TEST_CASE("prefix monotonicity", "[property]") {
    std::mt19937 rng(7);
    std::vector<GeneratorSpec> gens = {builtin_vtm(), builtin_pd(), builtin_tm(), builtin_psi_tm(),
                                       builtin_period012(), builtin_w_alpha()};
    for (int trial = 0; trial < 40; ++trial) {
        const GeneratorSpec& gen = gens[rng() % gens.size()];
        std::size_t n = 1 + rng() % 4096;
        std::size_t m = rng() % (n + 1);
        FiniteWord big = prefix(gen, n);
        FiniteWord small = prefix(gen, m);
        CHECK(std::equal(small.letters().begin(), small.letters().end(), big.letters().begin()));
    }
}

TEST_CASE("fixed points are invariant under their morphism", "[property]") {
    for (const auto& [m, seed] :
         std::vector<std::pair<Morphism, Letter>>{{vtm_morphism(), 0}, {pd_morphism(), 0}, {tm_morphism(), 0}}) {
        GeneratorSpec gen = GeneratorSpec::fixed_point(m, seed);
        FiniteWord w = prefix(gen, 300);
        FiniteWord image = morphic_image(w, m);
        CHECK(image.size() >= w.size());
        CHECK(std::equal(w.letters().begin(), w.letters().end(), image.letters().begin()));
    }
}

TEST_CASE("squashing 0 and 2 maps vtm onto pd") {
    FiniteWord v = prefix(builtin_vtm(), 2000);
    FiniteWord image = morphic_image(v, squash02_morphism());
    CHECK(image == prefix(builtin_pd(), 2000));
}

TEST_CASE("sturmian balance", "[property]") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<int> quots{1 + static_cast<int>(rng() % 5)};
        for (int i = 0; i < 24; ++i) quots.push_back(1 + static_cast<int>(rng() % 3));
        FiniteWord w = sturmian_prefix(quots, 400);
        std::size_t l = 1 + rng() % 80;
        int mn = static_cast<int>(l) + 1, mx = -1;
        for (std::size_t j = 0; j + l <= w.size(); ++j) {
            int ones = 0;
            for (std::size_t t = 0; t < l; ++t) ones += w[j + t];
            mn = std::min(mn, ones);
            mx = std::max(mx, ones);
        }
        CHECK(mx - mn <= 1);
    }
}

TEST_CASE("sturmian letter-count law against exact convergents", "[property]") {
    // Slope of the standard-word limit for quotients (a1, a2, ...) is
    // [0; a1+1, a2, a3, ...]; prefix 1-counts must lie in {floor(l a), ceil(l a)}.
    auto check_gen = [](std::vector<int> quots, std::size_t upto) {
        std::vector<int> cf;
        cf.push_back(quots[0] + 1);
        cf.insert(cf.end(), quots.begin() + 1, quots.end());
        CfBounds bounds = cf_bounds(cf);
        FiniteWord w = sturmian_prefix(quots, upto);
        long long ones = 0;
        for (std::size_t l = 1; l <= upto; ++l) {
            ones += w[l - 1];
            auto fl = certified_floor(static_cast<long long>(l), bounds);
            REQUIRE(fl.has_value());
            bool in_law = ones == *fl || ones == *fl + 1;
            CHECK(in_law);
        }
    };
    std::vector<int> fib(30, 1);
    check_gen(fib, 256);
    std::vector<int> q5{5};
    q5.insert(q5.end(), 30, 1);
    check_gen(q5, 256);
    check_gen({2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3}, 200);
}

TEST_CASE("sturmian letters follow the mechanical formula", "[property]") {
    std::vector<int> quots{5};
    quots.insert(quots.end(), 30, 1);
    std::vector<int> cf{6};
    cf.insert(cf.end(), 30, 1);
    CfBounds bounds = cf_bounds(cf);
    FiniteWord w = sturmian_prefix(quots, 300);
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto hi = certified_floor(static_cast<long long>(i) + 2, bounds);
        auto lo = certified_floor(static_cast<long long>(i) + 1, bounds);
        REQUIRE(hi.has_value());
        REQUIRE(lo.has_value());
        CHECK(static_cast<long long>(w[i]) == *hi - *lo);
    }
}

TEST_CASE("word comparison and factor extraction") {
    FiniteWord w = tw(3, "012021");
    CHECK(w.factor(1, 3).to_string() == "120");
    CHECK_THROWS_AS(w.factor(4, 3), std::out_of_range);
    CHECK(tw(3, "01") < tw(3, "02"));
    CHECK(tw(3, "01") < tw(3, "010"));
    CHECK(w.reversed().to_string() == "120210");
}

#include <catch_amalgamated.hpp>

#include <random>

#include "orbitwords/powers.hpp"

using namespace orbitwords;

namespace {

FiniteWord tw(int k, const std::string& digits) { return FiniteWord::from_digits(Alphabet(k), digits); }

FiniteWord random_word(std::mt19937& rng, int k, std::size_t len) {
    std::vector<Letter> ls(len);
    for (auto& x : ls) x = static_cast<Letter>(rng() % k);
    return FiniteWord(Alphabet(k), std::move(ls));
}

// Independent detectors used as ground truth for the scanner.
bool brute_square(const FiniteWord& w) {
    for (std::size_t n = 1; 2 * n <= w.size(); ++n) {
        for (std::size_t j = 0; j + 2 * n <= w.size(); ++j) {
            bool eq = true;
            for (std::size_t t = 0; t < n && eq; ++t) eq = w[j + t] == w[j + n + t];
            if (eq) return true;
        }
    }
    return false;
}

bool brute_rotation_square(const FiniteWord& w) {
    for (std::size_t n = 1; 2 * n <= w.size(); ++n) {
        for (std::size_t j = 0; j + 2 * n <= w.size(); ++j) {
            for (std::size_t s = 0; s < n; ++s) {
                bool eq = true;
                for (std::size_t t = 0; t < n && eq; ++t) eq = w[j + (t + s) % n] == w[j + n + t];
                if (eq) return true;
            }
        }
    }
    return false;
}

bool brute_antisquare(const FiniteWord& w) {  // binary only
    for (std::size_t n = 1; 2 * n <= w.size(); ++n) {
        for (std::size_t j = 0; j + 2 * n <= w.size(); ++j) {
            bool eq = true;
            for (std::size_t t = 0; t < n && eq; ++t) eq = w[j + t] == (1 - w[j + n + t]);
            if (eq) return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("find_powers examples") {
    // 01|10 is a reflection square.
    auto occs = find_powers(tw(2, "0110"), PowerQuery::reflection_square(Alphabet(2)));
    REQUIRE_FALSE(occs.empty());
    CHECK(occs.front().start == 0);
    CHECK(occs.front().block_len == 2);
    CHECK(occs.front().witnesses.front().h == HWitness::Reverse);

    // vtm starts 01...: a Caesar square of half-length 1 with the +1 shift.
    FiniteWord v = prefix(builtin_vtm(), 64);
    auto caesar = find_powers(v, PowerQuery::caesar_square(Alphabet(3)));
    REQUIRE_FALSE(caesar.empty());
    CHECK(caesar.front().start == 0);
    CHECK(caesar.front().block_len == 1);
    CHECK(caesar.front().witnesses.front().g.cycle_notation() == "(0 1 2)");

    // t=0 e=1 a=2 m=3: "teammate" = team|mate is an abelian square.
    auto ab = find_powers(tw(4, "01233201"), PowerQuery::abelian_square(Alphabet(4), 4));
    REQUIRE_FALSE(ab.empty());
    CHECK(ab.front().start == 0);
    CHECK(ab.front().block_len == 4);

    // (012)^2 is a plain square.
    auto sq = find_powers(tw(3, "012012"), PowerQuery::square(Alphabet(3)));
    REQUIRE_FALSE(sq.empty());
    CHECK(sq.front().start == 0);
    CHECK(sq.front().block_len == 3);
}

TEST_CASE("occurrences come out in scan order and re-verify", "[property]") {
    std::mt19937 rng(5);
    std::vector<PowerQuery> queries = {
        PowerQuery::square(Alphabet(3)),          PowerQuery::caesar_square(Alphabet(3)),
        PowerQuery::abelian_square(Alphabet(3)),  PowerQuery::rotation_square(Alphabet(3)),
        PowerQuery::reflection_square(Alphabet(3)),
    };
    for (int trial = 0; trial < 120; ++trial) {
        FiniteWord w = random_word(rng, 3, 4 + rng() % 17);
        const PowerQuery& q = queries[rng() % queries.size()];
        auto occs = find_powers(w, q);
        for (std::size_t i = 0; i < occs.size(); ++i) {
            CHECK(reverify(w, occs[i]));
            if (i) {
                bool ordered = occs[i - 1].start < occs[i].start ||
                               (occs[i - 1].start == occs[i].start && occs[i - 1].block_len < occs[i].block_len);
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("cubes via the generic scanner") {
    PowerQuery q = PowerQuery::square(Alphabet(2));
    q.r = 3;
    auto occs = find_powers(tw(2, "010101"), q);
    REQUIRE(occs.size() == 1);
    CHECK(occs.front().block_len == 2);
    CHECK(occs.front().witnesses.size() == 3);  // pairs (0,1), (0,2), (1,2)
    CHECK(reverify(tw(2, "010101"), occs.front()));
}

TEST_CASE("avoidance scans over vtm at unit scale") {
    GeneratorSpec vtm = builtin_vtm();
    CHECK(verify_avoidance(vtm, PowerQuery::square(Alphabet(3)), 2000).clean);
    CHECK(verify_avoidance(vtm, PowerQuery::caesar_square(Alphabet(3), 6), 2000).clean);
    CHECK(verify_avoidance(vtm, PowerQuery::reflection_square(Alphabet(3)), 2000).clean);
    CHECK(verify_avoidance(vtm, PowerQuery::first_last_square(Alphabet(3), ElementFilter::NontrivialOnly), 2000)
              .clean);

    // A find: pd has squares everywhere.
    AvoidanceReport rep = verify_avoidance(builtin_pd(), PowerQuery::square(Alphabet(2)), 64);
    CHECK_FALSE(rep.clean);
    REQUIRE(rep.first_violation.has_value());
    CHECK(reverify(prefix(builtin_pd(), 64), *rep.first_violation));
}

TEST_CASE("caesar spectrum") {
    auto p = caesar_spectrum(builtin_period012(), 100);
    CHECK(p.count(1) == 1);

    auto pd = caesar_spectrum(builtin_pd(), 1000, 8);
    CHECK_FALSE(pd.empty());

    // vtm admits Caesar squares of half-lengths 1, 2 and 5 and no others.
    auto v = caesar_spectrum(builtin_vtm(), 4096);
    CHECK(v == std::set<std::size_t>{1, 2, 5});
}

TEST_CASE("caesar square half-lengths agree with the orbit route", "[property]") {
    // Cross-check the scanner against same_orbit on extracted blocks.
    FiniteWord w = prefix(builtin_vtm(), 256);
    ActionPair caesar{AlphabetGroup::cyclic(Alphabet(3)), PositionFamily::trivial()};
    std::set<std::size_t> by_orbit;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t j = 0; j + 2 * n <= w.size(); ++j) {
            if (same_orbit(w.factor(j, n), w.factor(j + n, n), caesar)) {
                by_orbit.insert(n);
                break;
            }
        }
    }
    CHECK(by_orbit == caesar_spectrum(builtin_vtm(), 256, 8));
}

TEST_CASE("swap02 squares of vtm exist exactly at the powers of 2 below 64") {
    AlphabetPerm g = AlphabetPerm::parse_cycles(Alphabet(3), "(0 2)");
    auto found = s3_square_half_lengths(builtin_vtm(), g, 64, 1 << 14);
    CHECK(found == std::set<std::size_t>{1, 2, 4, 8, 16, 32, 64});
}

TEST_CASE("swap02 square of half-length 1 is witnessed by 02 or 20") {
    FiniteWord w = prefix(builtin_vtm(), 16);
    bool seen = false;
    for (std::size_t j = 0; j + 2 <= w.size() && !seen; ++j) {
        seen = (w[j] == 0 && w[j + 1] == 2) || (w[j] == 2 && w[j + 1] == 0);
    }
    CHECK(seen);
}

TEST_CASE("mesosome equivalence on random ternary words", "[property]") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 2000; ++trial) {
        FiniteWord w = random_word(rng, 3, 2 + rng() % 39);
        bool sq = brute_square(w);
        bool rot = brute_rotation_square(w);
        CHECK(sq == rot);
        // Scanner agrees with both brute-force detectors.
        CHECK(sq == !find_powers(w, PowerQuery::square(Alphabet(3))).empty());
        CHECK(rot == !find_powers(w, PowerQuery::rotation_square(Alphabet(3))).empty());
    }
}

TEST_CASE("binary caesar squares are squares or antisquares", "[property]") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 2000; ++trial) {
        FiniteWord w = random_word(rng, 2, 2 + rng() % 23);
        bool caesar = !find_powers(w, PowerQuery::caesar_square(Alphabet(2))).empty();
        CHECK(caesar == (brute_square(w) || brute_antisquare(w)));
    }
}

TEST_CASE("transitive alphabet groups make every short word a power") {
    // All 9 ternary words of length 2 are Caesar squares of half-length 1.
    for (Letter a = 0; a < 3; ++a) {
        for (Letter b = 0; b < 3; ++b) {
            FiniteWord w(Alphabet(3), {a, b});
            CHECK_FALSE(find_powers(w, PowerQuery::caesar_square(Alphabet(3))).empty());
        }
    }
}

TEST_CASE("avoiding a power under a group implies avoiding it under subgroups", "[property]") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        FiniteWord w = random_word(rng, 3, 4 + rng() % 21);
        PowerQuery big = PowerQuery::caesar_square(Alphabet(3));
        big.family = (trial % 2) ? PositionFamilyKind::FullSymmetric : PositionFamilyKind::Rotation;
        PowerQuery small = big;
        small.group = AlphabetGroup::trivial(Alphabet(3));
        PowerQuery smaller = small;
        smaller.family = PositionFamilyKind::Trivial;
        bool big_clean = find_powers(w, big).empty();
        if (big_clean) {
            CHECK(find_powers(w, small).empty());
            CHECK(find_powers(w, smaller).empty());
        }
    }
}

TEST_CASE("element filters") {
    // 00 is a square; under NontrivialOnly with the first-last family the
    // only possible witness at n=1 is the identity, so it is filtered out.
    FiniteWord w = tw(2, "00");
    CHECK_FALSE(find_powers(w, PowerQuery::first_last_square(Alphabet(2), ElementFilter::All)).empty());
    CHECK(find_powers(w, PowerQuery::first_last_square(Alphabet(2), ElementFilter::NontrivialOnly)).empty());

    // 0101: a plain square, hence a rotation square via shift 0 only.
    PowerQuery rot = PowerQuery::rotation_square(Alphabet(2));
    CHECK_FALSE(find_powers(tw(2, "0101"), rot).empty());
    rot.filter = ElementFilter::NontrivialOnly;
    CHECK(find_powers(tw(2, "0101"), rot).empty());

    // Specific element: only the named permutation may witness.
    PowerQuery spec = PowerQuery::caesar_square(Alphabet(3));
    spec.filter = ElementFilter::Specific;
    spec.specific = AlphabetPerm::parse_cycles(Alphabet(3), "(0 1 2)");
    CHECK_FALSE(find_powers(tw(3, "01"), spec).empty());   // 1 = (0 1 2) . 0
    CHECK(find_powers(tw(3, "02"), spec).empty());         // needs the other shift
}

TEST_CASE("abelian square with nontrivial-only filter") {
    // 0110 = 01|10: distinct permuted blocks, fine under NontrivialOnly.
    PowerQuery q = PowerQuery::abelian_square(Alphabet(2), 2);
    q.filter = ElementFilter::NontrivialOnly;
    q.n_max = 2;
    CHECK_FALSE(find_powers(tw(2, "0110"), q).empty());
    // 0101 = 01|01 with all-distinct letters per block: only the identity
    // position map fixes the block, so it is filtered out at n=2.
    q.n_min = 2;
    CHECK(find_powers(tw(2, "0101"), q).empty());
    // 001001 = 001|001 has a repeated letter: a nontrivial stabilizer exists.
    PowerQuery q3 = PowerQuery::abelian_square(Alphabet(2), 3);
    q3.filter = ElementFilter::NontrivialOnly;
    CHECK_FALSE(find_powers(tw(2, "001001"), q3).empty());
}

namespace {

// Fully independent pair relation: enumerate the alphabet group elements as
// raw mappings and the position moves of each symbolic family explicitly.
bool naive_pair_related(const std::vector<Letter>& x, const std::vector<Letter>& y,
                        const std::vector<std::vector<Letter>>& gmaps, PositionFamilyKind family) {
    const std::size_t n = x.size();
    std::vector<Letter> gx(n);
    for (const auto& g : gmaps) {
        for (std::size_t i = 0; i < n; ++i) gx[i] = g[x[i]];
        switch (family) {
            case PositionFamilyKind::Trivial:
                if (gx == y) return true;
                break;
            case PositionFamilyKind::FullSymmetric: {
                auto a = gx;
                auto b = y;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a == b) return true;
                break;
            }
            case PositionFamilyKind::Rotation: {
                for (std::size_t s = 0; s < n; ++s) {
                    bool eq = true;
                    for (std::size_t t = 0; t < n && eq; ++t) eq = gx[(t + s) % n] == y[t];
                    if (eq) return true;
                }
                break;
            }
            case PositionFamilyKind::Reversal: {
                if (gx == y) return true;
                std::vector<Letter> rev(gx.rbegin(), gx.rend());
                if (rev == y) return true;
                break;
            }
            case PositionFamilyKind::FirstLastSwap: {
                if (gx == y) return true;
                auto sw = gx;
                if (sw.size() >= 2) std::swap(sw.front(), sw.back());
                if (sw == y) return true;
                break;
            }
            default:
                break;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("scanner agrees with explicit (g,h) enumeration", "[oracle]") {
    std::mt19937 rng(59);
    struct GroupDef {
        AlphabetGroup group;
        std::vector<std::vector<Letter>> maps;
    };
    auto make_groups = [&](int k) {
        std::vector<GroupDef> out;
        for (const AlphabetGroup& g :
             {AlphabetGroup::trivial(Alphabet(k)), AlphabetGroup::cyclic(Alphabet(k)),
              AlphabetGroup::symmetric(Alphabet(k))}) {
            GroupDef def{g, {}};
            for (const AlphabetPerm& e : g.elements()) def.maps.push_back(e.mapping());
            out.push_back(std::move(def));
        }
        return out;
    };
    std::vector<PositionFamilyKind> kinds = {PositionFamilyKind::Trivial, PositionFamilyKind::FullSymmetric,
                                             PositionFamilyKind::Rotation, PositionFamilyKind::Reversal,
                                             PositionFamilyKind::FirstLastSwap};
    for (int trial = 0; trial < 600; ++trial) {
        int k = 2 + static_cast<int>(rng() % 2);
        auto groups = make_groups(k);
        const GroupDef& gd = groups[rng() % groups.size()];
        PositionFamilyKind kind = kinds[rng() % kinds.size()];
        int r = 2 + static_cast<int>(rng() % 2);
        FiniteWord w = random_word(rng, k, static_cast<std::size_t>(r) + rng() % 15);

        PowerQuery q;
        q.r = r;
        q.group = gd.group;
        q.family = kind;
        auto occs = find_powers(w, q);
        std::set<std::pair<std::size_t, std::size_t>> got;
        for (const auto& o : occs) got.insert({o.start, o.block_len});

        std::set<std::pair<std::size_t, std::size_t>> expected;
        const auto& ls = w.letters();
        for (std::size_t start = 0; start + static_cast<std::size_t>(r) <= w.size(); ++start) {
            for (std::size_t n = 1; start + static_cast<std::size_t>(r) * n <= w.size(); ++n) {
                bool all = true;
                for (int i = 0; i < r && all; ++i) {
                    for (int j = i + 1; j < r && all; ++j) {
                        std::vector<Letter> x(ls.begin() + start + i * n, ls.begin() + start + (i + 1) * n);
                        std::vector<Letter> y(ls.begin() + start + j * n, ls.begin() + start + (j + 1) * n);
                        all = naive_pair_related(x, y, gd.maps, kind);
                    }
                }
                if (all) expected.insert({start, n});
            }
        }
        REQUIRE(got == expected);
    }
}

TEST_CASE("query validation") {
    PowerQuery q = PowerQuery::square(Alphabet(3));
    q.r = 1;
    CHECK_THROWS_AS(find_powers(tw(3, "012"), q), std::invalid_argument);
    q = PowerQuery::square(Alphabet(3));
    q.n_min = 0;
    CHECK_THROWS_AS(find_powers(tw(3, "012"), q), std::invalid_argument);
    CHECK_THROWS_AS(find_powers(tw(2, "01"), PowerQuery::square(Alphabet(3))), std::invalid_argument);
}

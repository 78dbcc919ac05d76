#include "doctest.h"

#include "rrc/generators.hpp"
#include "rrc/monomial_ideal.hpp"
#include "rrc/rng.hpp"

using namespace rrc;

namespace {

MonomialIdeal quartic() { return MonomialIdeal::make(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}}); }

// Brute-force colon by membership over a box: x^m * b subset of a for every
// generator b. Independent of the colon implementation.
bool colon_oracle_member(const MonomialIdeal& a, const MonomialIdeal& b, const ExpVec& m) {
    for (const auto& g : b.gens())
        if (!a.contains(exp_add(m, g))) return false;
    return true;
}

MonomialIdeal colon_oracle(const MonomialIdeal& a, const MonomialIdeal& b, long long box) {
    std::vector<ExpVec> hits;
    for (long long x = 0; x <= box; ++x)
        for (long long y = 0; y <= box; ++y)
            if (colon_oracle_member(a, b, {x, y})) hits.push_back({x, y});
    return MonomialIdeal::make(2, std::move(hits));
}

}  // namespace

TEST_CASE("minimalize produces antichains") {
    auto i = MonomialIdeal::make(2, {{2, 0}, {3, 1}, {0, 2}});
    CHECK(i == MonomialIdeal::make(2, {{2, 0}, {0, 2}}));  // (3,1) dominated

    CHECK(quartic().gens().size() == 4);  // already minimal

    auto dedup = MonomialIdeal::make(2, {{1, 1}, {1, 1}});
    CHECK(dedup == MonomialIdeal::principal(2, {1, 1}));

    CHECK_THROWS_AS(MonomialIdeal::make(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(MonomialIdeal::make(2, {{1, -1}}), std::invalid_argument);

    // idempotent: re-making from the canonical generators changes nothing
    auto again = MonomialIdeal::make(2, quartic().gens());
    CHECK(again == quartic());
}

TEST_CASE("membership") {
    CHECK_FALSE(quartic().contains({2, 2}));
    CHECK(quartic().contains({4, 4}));

    auto unit = MonomialIdeal::unit(2);
    CHECK(unit.contains({0, 0}));
    CHECK(unit.contains({5, 3}));

    auto sq = MonomialIdeal::make(2, {{2, 0}, {0, 2}});
    CHECK_FALSE(sq.contains({1, 1}));

    CHECK_THROWS_AS(sq.contains({1, 1, 1}), std::invalid_argument);
}

TEST_CASE("products and powers") {
    // the quartic ideal squared, as listed generator by generator
    auto j2 = power(quartic(), 2);
    auto expected = MonomialIdeal::make(
        2, {{8, 0}, {7, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 5}, {2, 6}, {1, 7}, {0, 8}});
    CHECK(j2 == expected);
    CHECK(j2 == multiply(quartic(), quartic()));

    CHECK(power(MonomialIdeal::principal(2, {1, 0}), 5) ==
          MonomialIdeal::principal(2, {5, 0}));

    auto m = MonomialIdeal::make(2, {{1, 0}, {0, 1}});
    CHECK(multiply(m, m) == MonomialIdeal::make(2, {{2, 0}, {1, 1}, {0, 2}}));

    CHECK_THROWS_AS(power(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(multiply(m, MonomialIdeal::unit(3)), std::invalid_argument);
}

TEST_CASE("colon matches the membership oracle") {
    auto sq = MonomialIdeal::make(2, {{2, 0}, {0, 2}});
    auto x = MonomialIdeal::principal(2, {1, 0});
    auto q = colon(sq, x);
    CHECK(q == MonomialIdeal::make(2, {{1, 0}, {0, 2}}));
    CHECK(q == colon_oracle(sq, x, 6));

    auto j = quartic();
    auto c = colon(power(j, 2), j);
    CHECK(c.contains({2, 2}));
    CHECK(c == colon_oracle(power(j, 2), j, 12));

    CHECK(colon(j, j).contains({0, 0}));           // 1 in (I : I)
    CHECK(colon(j, MonomialIdeal::unit(2)) == j);  // colon by the unit
}

TEST_CASE("intersection") {
    auto a = MonomialIdeal::principal(2, {2, 0});
    auto b = MonomialIdeal::principal(2, {0, 2});
    CHECK(intersect(a, b) == MonomialIdeal::principal(2, {2, 2}));

    auto j = quartic();
    CHECK(intersect(j, j) == j);

    // membership in the intersection is the conjunction of memberships
    auto m = MonomialIdeal::make(2, {{1, 0}, {0, 1}});
    auto sq = MonomialIdeal::make(2, {{2, 0}, {0, 2}});
    auto isect = intersect(m, sq);
    CHECK(isect == MonomialIdeal::make(2, {{2, 0}, {0, 2}}));
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        ExpVec p{rng.int_in(0, 4), rng.int_in(0, 4)};
        CHECK(isect.contains(p) == (m.contains(p) && sq.contains(p)));
    }
}

TEST_CASE("three variables take the generic paths") {
    auto i = MonomialIdeal::make(3, {{1, 1, 1}});
    auto xy = MonomialIdeal::principal(3, {1, 1, 0});
    CHECK(colon(i, xy) == MonomialIdeal::principal(3, {0, 0, 1}));
    CHECK(intersect(MonomialIdeal::principal(3, {2, 0, 0}),
                    MonomialIdeal::principal(3, {0, 0, 3})) ==
          MonomialIdeal::principal(3, {2, 0, 3}));
    CHECK(multiply(i, i) == MonomialIdeal::principal(3, {2, 2, 2}));
}

TEST_CASE("algebraic properties on random ideals") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.seed = 5;
    for (int t = 0; t < 60; ++t) {
        auto a = gen_monomial_ideal(cfg, static_cast<std::uint64_t>(3 * t));
        auto b = gen_monomial_ideal(cfg, static_cast<std::uint64_t>(3 * t + 1));
        auto c = gen_monomial_ideal(cfg, static_cast<std::uint64_t>(3 * t + 2));

        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));

        // every generator product lands in the product ideal
        auto ab = multiply(a, b);
        for (const auto& g : a.gens())
            for (const auto& h : b.gens()) CHECK(ab.contains(exp_add(g, h)));

        // colon(a,b)*b inside a; a inside colon(a*b, b)
        auto q = colon(a, b);
        CHECK(subset_of(multiply(q, b), a));
        CHECK(subset_of(a, colon(ab, b)));

        // intersection is a lower bound
        auto isect = intersect(a, b);
        CHECK(subset_of(isect, a));
        CHECK(subset_of(isect, b));
    }
}

TEST_CASE("power cache agrees with direct powers") {
    PowerCache pc(quartic());
    for (int k = 1; k <= 6; ++k) CHECK(pc.get(k) == power(quartic(), k));
    CHECK_THROWS_AS(pc.get(0), std::invalid_argument);
}

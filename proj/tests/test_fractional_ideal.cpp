#include "doctest.h"

#include "rrc/fractional_ideal.hpp"
#include "rrc/generators.hpp"

using namespace rrc;

namespace {

// Laurent-box oracle for (a : b): u belongs iff u + g lands in a for every
// generator g of b (as Laurent vectors).
bool laurent_colon_member(const FractionalMonomialIdeal& a, const FractionalMonomialIdeal& b,
                          const ExpVec& u) {
    for (const auto& g : b.numerator().gens()) {
        ExpVec w(u.size());
        for (std::size_t i = 0; i < u.size(); ++i)
            w[i] = u[i] + g[i] - b.denominator()[i];
        if (!a.contains(w)) return false;
    }
    return true;
}

void check_colon_against_box(const FractionalMonomialIdeal& a,
                             const FractionalMonomialIdeal& b, long long box) {
    auto q = frac_colon(a, b);
    for (long long x = -box; x <= box; ++x)
        for (long long y = -box; y <= box; ++y) {
            ExpVec u{x, y};
            CHECK(q.contains(u) == laurent_colon_member(a, b, u));
        }
}

}  // namespace

TEST_CASE("canonical form strips common variables") {
    auto f = FractionalMonomialIdeal::make({2, 1}, MonomialIdeal::make(2, {{3, 1}, {2, 2}}));
    // x^2*y divides out of x^3*y, x^2*y^2 only up to min over generators
    CHECK(f.denominator() == ExpVec{0, 0});
    CHECK(f.numerator() == MonomialIdeal::make(2, {{1, 0}, {0, 1}}));

    // negative shift components multiply into the numerator
    auto g = FractionalMonomialIdeal::make({-1, 2}, MonomialIdeal::make(2, {{0, 2}}));
    CHECK(g.denominator() == ExpVec{0, 0});
    CHECK(g.numerator() == MonomialIdeal::principal(2, {1, 0}));
}

TEST_CASE("fractional multiply adds shifts") {
    auto i = MonomialIdeal::make(2, {{2, 0}, {1, 1}});
    auto j = MonomialIdeal::make(2, {{0, 3}});
    auto a = FractionalMonomialIdeal::make({1, 0}, i);
    auto b = FractionalMonomialIdeal::make({0, 2}, j);
    CHECK(frac_multiply(a, b) == FractionalMonomialIdeal::make({1, 2}, multiply(i, j)));
}

TEST_CASE("fractional colon against the Laurent box oracle") {
    auto principal = FractionalMonomialIdeal::from_integral(MonomialIdeal::principal(2, {3, 2}));
    CHECK(frac_colon(principal, principal).is_unit());

    auto m = FractionalMonomialIdeal::from_integral(MonomialIdeal::make(2, {{1, 0}, {0, 1}}));
    CHECK(frac_colon(m, m).is_unit());
    check_colon_against_box(m, m, 4);

    auto mixed = FractionalMonomialIdeal::make({1, 1}, MonomialIdeal::make(2, {{3, 0}, {0, 2}}));
    check_colon_against_box(mixed, m, 4);
    check_colon_against_box(m, mixed, 4);
}

TEST_CASE("endomorphism rings of the named ideals are trivial") {
    CHECK(endomorphism_ring(MonomialIdeal::principal(2, {5, 1})).is_unit());

    auto sq = MonomialIdeal::make(2, {{2, 0}, {0, 2}});
    CHECK(endomorphism_ring(sq).is_unit());
    // box oracle confirmation over [-6,6]^2
    auto f = FractionalMonomialIdeal::from_integral(sq);
    for (long long x = -6; x <= 6; ++x)
        for (long long y = -6; y <= 6; ++y)
            CHECK(endomorphism_ring(sq).contains({x, y}) == laurent_colon_member(f, f, {x, y}));

    auto j = MonomialIdeal::make(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
    CHECK(endomorphism_ring(j).is_unit());
}

TEST_CASE("fractional operations restrict to the integral ones") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.seed = 9;
    for (int t = 0; t < 40; ++t) {
        auto a = gen_monomial_ideal(cfg, static_cast<std::uint64_t>(2 * t));
        auto b = gen_monomial_ideal(cfg, static_cast<std::uint64_t>(2 * t + 1));
        auto fa = FractionalMonomialIdeal::from_integral(a);
        auto fb = FractionalMonomialIdeal::from_integral(b);

        CHECK(frac_multiply(fa, fb) == FractionalMonomialIdeal::from_integral(multiply(a, b)));
        CHECK(frac_intersect(fa, fb) ==
              FractionalMonomialIdeal::from_integral(intersect(a, b)));
        // the fractional colon may genuinely leave the ring, but its
        // restriction to non-negative exponents is the ideal colon
        auto fq = frac_colon(fa, fb);
        auto iq = colon(a, b);
        for (long long x = 0; x <= 10; ++x)
            for (long long y = 0; y <= 10; ++y) CHECK(fq.contains({x, y}) == iq.contains({x, y}));
    }
}

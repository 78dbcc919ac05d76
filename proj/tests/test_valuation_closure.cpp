#include "doctest.h"

#include "rrc/generators.hpp"
#include "rrc/valuation_closure.hpp"

using namespace rrc;

namespace {

const ValueGroup Z({Component::discrete});
const ValueGroup Q({Component::dense});
const ValueGroup ZZ({Component::discrete, Component::discrete});
const ValueGroup ZQ({Component::discrete, Component::dense});
const ValueGroup QZ({Component::dense, Component::discrete});

CutIdeal cut(const ValueGroup& g, CutKind k, std::vector<Rational> rho) {
    int m = static_cast<int>(rho.size());
    return CutIdeal::make(g, k, m, std::move(rho));
}

}  // namespace

TEST_CASE("closed-form closure") {
    // the shifted maximal ideal of a dense rank-one group gains its boundary
    CHECK(rr_closed_form(cut(Q, CutKind::gt, {Rational(1)})) ==
          cut(Q, CutKind::ge, {Rational(1)}));
    // idempotent primes close to the whole ring
    CHECK(rr_closed_form(maximal_cut(Q)) == unit_cut(Q));
    CHECK(rr_closed_form(prime_cut(QZ, 1)) == unit_cut(QZ));
    // non-idempotent primes are already closed
    auto p = cut(ZZ, CutKind::ge, {Rational(1)});
    CHECK(rr_closed_form(p) == p);
}

TEST_CASE("chain closure agrees with the closed form") {
    CHECK(rr_by_chain(cut(Q, CutKind::gt, {Rational(1)}), 3) ==
          cut(Q, CutKind::ge, {Rational(1)}));
    auto p5 = cut(Z, CutKind::ge, {Rational(5)});
    CHECK(rr_by_chain(p5, 3) == p5);
    CHECK(rr_by_chain(prime_cut(QZ, 1), 3) == unit_cut(QZ));

    GeneratorConfig cfg = GeneratorConfig::defaults();
    for (const auto& g : cfg.valuation.groups)
        for (const auto& c : grid_cuts(cfg, g, true))
            CHECK(rr_closed_form(c) == rr_by_chain(c, 4));
}

TEST_CASE("generalized closure on fractional cuts") {
    // hat of an idempotent prime is the localization, strictly above V
    auto hat_p = rr_hat(prime_cut(QZ, 1));
    CHECK(hat_p == cut(QZ, CutKind::ge, {Rational(0)}));
    CHECK(cut_cmp(unit_cut(QZ), hat_p) == std::strong_ordering::less);

    CHECK(rr_hat(cut(Q, CutKind::gt, {Rational(1)})) == cut(Q, CutKind::ge, {Rational(1)}));

    // closure commutes with shifts
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.seed = 15;
    for (const auto& g : cfg.valuation.groups) {
        for (int t = 0; t < 30; ++t) {
            CutIdeal i = gen_cut_ideal(cfg, g, static_cast<std::uint64_t>(t), false);
            LexVector a = gen_group_element(cfg, g, static_cast<std::uint64_t>(t));
            CHECK(rr_hat(cut_shift(i, a)) == cut_shift(rr_hat(i), a));
        }
    }

    // tilde is hat meet the ring, on every integral grid cut
    for (const auto& g : cfg.valuation.groups)
        for (const auto& c : grid_cuts(cfg, g, true))
            CHECK(rr_closed_form(c) == cut_meet(rr_hat(c), unit_cut(g)));
}

TEST_CASE("v-closure and divisoriality") {
    CHECK(v_closure(cut(Q, CutKind::gt, {Rational(1)})) == cut(Q, CutKind::ge, {Rational(1)}));
    CHECK_FALSE(is_divisorial(cut(Q, CutKind::gt, {Rational(1)})));

    // the idempotent level-1 prime of lex(Q,Z) is divisorial, though hat moves it
    auto p = prime_cut(QZ, 1);
    CHECK(v_closure(p) == p);
    CHECK(is_divisorial(p));
    CHECK(rr_hat(p) != p);

    // discrete rank one: everything is divisorial
    GeneratorConfig cfg = GeneratorConfig::defaults();
    for (const auto& c : grid_cuts(cfg, Z, false)) CHECK(is_divisorial(c));
}

TEST_CASE("endomorphism rings grow under closure") {
    CHECK(check_endo_inclusion(cut(Q, CutKind::gt, {Rational(1)})) == true);
    CHECK(check_endo_inclusion(cut(ZZ, CutKind::ge, {Rational(1), Rational(0)})) == true);
    CHECK(check_endo_inclusion(cut(ZQ, CutKind::gt, {Rational(1), Rational(0)})) == true);
    // precondition: closure must be proper
    CHECK_FALSE(check_endo_inclusion(maximal_cut(Q)).has_value());

    GeneratorConfig cfg = GeneratorConfig::defaults();
    for (const auto& g : cfg.valuation.groups)
        for (const auto& c : grid_cuts(cfg, g, true)) {
            auto verdict = check_endo_inclusion(c);
            if (verdict) CHECK(*verdict);
        }
}

TEST_CASE("closure idempotence and the unit-closure classification") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    for (const auto& g : cfg.valuation.groups) {
        for (const auto& c : grid_cuts(cfg, g, true)) {
            CutIdeal once = rr_closed_form(c);
            CHECK(rr_closed_form(once) == once);
            CHECK((once == unit_cut(g)) == (is_prime(c).has_value() && is_idempotent(c)));
        }
    }
}

TEST_CASE("star axioms hold exactly on groups without nonmaximal idempotent primes") {
    for (const ValueGroup* g : {&Z, &ZZ, &ZQ}) {
        StarAxiomReport rep = check_star_axioms(*g, 60, 42);
        CHECK(rep.e1_pass);
        CHECK(rep.e2_pass);
        CHECK(rep.e3_pass);
        // where the closure is a star operation it is the v-operation
        GeneratorConfig cfg = GeneratorConfig::defaults();
        for (const auto& c : grid_cuts(cfg, *g, false)) CHECK(rr_hat(c) == v_closure(c));
    }

    StarAxiomReport rep = check_star_axioms(QZ, 60, 42);
    CHECK(rep.e1_pass);
    CHECK(rep.e3_pass);
    CHECK_FALSE(rep.e2_pass);
    REQUIRE(rep.e2_witness.has_value());
    // the targeted witness: the idempotent prime inside the principal cut aV
    CHECK(rep.e2_witness->first == prime_cut(QZ, 1));
    CHECK(rep.e2_witness->second ==
          CutIdeal::make(QZ, CutKind::ge, 2, {Rational(0), Rational(1)}));
    CHECK(cut_subset(rep.e2_witness->first, rep.e2_witness->second));
    CHECK_FALSE(cut_subset(rr_hat(rep.e2_witness->first), rr_hat(rep.e2_witness->second)));
}

TEST_CASE("strongly discrete groups close nothing") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    for (const ValueGroup* g : {&Z, &ZZ})
        for (const auto& c : grid_cuts(cfg, *g, true)) CHECK(rr_closed_form(c) == c);
}

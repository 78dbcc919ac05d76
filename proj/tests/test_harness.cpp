#include "doctest.h"

#include "rrc/generators.hpp"
#include "rrc/suite.hpp"

using namespace rrc;

TEST_CASE("generator streams are reproducible") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.seed = 1;
    auto a = gen_monomial_ideal(cfg, 0);
    auto b = gen_monomial_ideal(cfg, 0);
    CHECK(a == b);
    CHECK(a != gen_monomial_ideal(cfg, 1));

    GeneratorConfig other = cfg;
    other.seed = 2;
    CHECK(a != gen_monomial_ideal(other, 0));
}

TEST_CASE("m-primary bias forces pure powers") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.monomial.m_primary_bias = Rational(1);
    for (int t = 0; t < 50; ++t) {
        auto i = gen_monomial_ideal(cfg, static_cast<std::uint64_t>(t));
        bool has_x = false, has_y = false;
        for (const auto& g : i.gens()) {
            if (g[1] == 0) has_x = true;
            if (g[0] == 0) has_y = true;
        }
        CHECK(has_x);
        CHECK(has_y);
    }
}

TEST_CASE("principal generator draws single monomials") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    for (int t = 0; t < 30; ++t)
        CHECK(gen_principal_ideal(cfg, static_cast<std::uint64_t>(t)).is_principal());
}

TEST_CASE("grid enumeration is canonical and deduplicated") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    ValueGroup qz({Component::dense, Component::discrete});
    auto all = grid_cuts(cfg, qz, false);
    auto proper = grid_cuts(cfg, qz, true);
    CHECK(all.size() > proper.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
    for (const auto& c : proper) {
        CHECK(is_integral_cut(c));
        CHECK(c != unit_cut(qz));
    }
}

TEST_CASE("config validation") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.monomial.m_primary_bias = Rational(3, 2);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = GeneratorConfig::defaults();
    cfg.cases = -1;
    CHECK_THROWS_AS(run_paper_suite(cfg), std::invalid_argument);
}

TEST_CASE("suite reports are byte-identical apart from timing") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.cases = 10;
    SuiteReport a = run_paper_suite(cfg);
    SuiteReport b = run_paper_suite(cfg);
    CHECK(normalized_report_json(a).dump() == normalized_report_json(b).dump());
    CHECK(a.pass);
}

TEST_CASE("zero random cases still runs the named witnesses") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.cases = 0;
    SuiteReport rep = run_paper_suite(cfg);
    CHECK(rep.pass);
    bool saw_witness = false;
    for (const auto& c : rep.checks)
        if (c.kind == "witness") {
            CHECK(c.cases > 0);
            saw_witness = true;
        }
    CHECK(saw_witness);
}

TEST_CASE("expected-failure accounting needs its witness") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.cases = 10;
    cfg.valuation.groups = {ValueGroup({Component::dense, Component::discrete})};
    SuiteReport rep = run_paper_suite(cfg);
    CHECK(rep.pass);
    for (const auto& c : rep.checks) {
        if (c.kind != "expected-failure") continue;
        CHECK(c.pass);
        CHECK_FALSE(c.witness.empty());
    }
}

TEST_CASE("suite failures carry replayable counterexamples") {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.cases = 5;
    SuiteReport rep = run_paper_suite(cfg);
    for (const auto& c : rep.checks)
        if (!c.pass) CHECK_FALSE(c.counterexample.empty());
}

#include "doctest.h"

#include "rrc/generators.hpp"
#include "rrc/ideal_text.hpp"

using namespace rrc;

TEST_CASE("variable lists") {
    CHECK(parse_var_list("x,y") == std::vector<std::string>{"x", "y"});
    CHECK(parse_var_list(" a , b_2 ") == std::vector<std::string>{"a", "b_2"});
    CHECK_THROWS_AS(parse_var_list("x,x"), ParseError);
    CHECK_THROWS_AS(parse_var_list(""), ParseError);
    CHECK_THROWS_AS(parse_var_list("x,,y"), ParseError);
}

TEST_CASE("monomial ideal grammar") {
    auto vars = parse_var_list("x,y");
    CHECK(parse_poly_ideal(vars, "x^4, x^3*y, x*y^3, y^4") ==
          MonomialIdeal::make(2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}}));

    CHECK(parse_poly_ideal({"x"}, "x^0") == MonomialIdeal::unit(1));
    CHECK(parse_poly_ideal(vars, "1") == MonomialIdeal::unit(2));

    // juxtaposition multiplies
    CHECK(parse_poly_ideal(vars, "x^2 y") == MonomialIdeal::principal(2, {2, 1}));
    CHECK(parse_poly_ideal(vars, "x x y") == MonomialIdeal::principal(2, {2, 1}));
    CHECK(parse_poly_ideal(vars, "x^2*y") == MonomialIdeal::principal(2, {2, 1}));
}

TEST_CASE("parse errors carry positions inside the offending token") {
    auto vars = parse_var_list("x,y");
    try {
        parse_poly_ideal(vars, "x^2, z*y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 6);  // the unknown variable z
    }
    try {
        parse_poly_ideal(vars, "x^-2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.col == 3);  // the minus sign
    }
    try {
        parse_poly_ideal(vars, "x,\n y^2,");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_poly_ideal(vars, ""), ParseError);
    CHECK_THROWS_AS(parse_poly_ideal(vars, "   "), ParseError);
    CHECK_THROWS_AS(parse_poly_ideal(vars, "2*x"), ParseError);
}

TEST_CASE("groups") {
    ValueGroup qz = parse_group("lex(Q,Z)");
    CHECK(qz.rank() == 2);
    CHECK(qz.component(1) == Component::dense);
    CHECK(qz.component(2) == Component::discrete);
    CHECK(format_group(qz) == "lex(Q,Z)");
    CHECK_THROWS_AS(parse_group("lex()"), ParseError);
    CHECK_THROWS_AS(parse_group("lex(R)"), ParseError);
    CHECK_THROWS_AS(parse_group("prod(Z)"), ParseError);
}

TEST_CASE("cut grammar") {
    ValueGroup q = parse_group("lex(Q)");
    CutIdeal i = parse_cut(q, "gt m=1 rho=1");
    CHECK(i == CutIdeal::make(q, CutKind::gt, 1, {Rational(1)}));
    CHECK(format_cut(i) == "gt m=1 rho=1");

    ValueGroup zz = parse_group("lex(Z,Z)");
    CHECK(parse_cut(zz, "gt m=1 rho=0") == CutIdeal::make(zz, CutKind::ge, 1, {Rational(1)}));

    ValueGroup qz = parse_group("lex(Q,Z)");
    CutIdeal p = parse_cut(qz, "gt m=1 rho=0");
    CHECK(is_prime(p).has_value());
    CHECK(is_idempotent(p));

    CHECK(parse_cut(qz, "ge m=2 rho=-1/2,3") ==
          CutIdeal::make(qz, CutKind::ge, 2, {Rational(-1, 2), Rational(3)}));

    CHECK_THROWS_AS(parse_cut(qz, "ge m=2 rho=1"), ParseError);       // wrong arity
    CHECK_THROWS_AS(parse_cut(qz, "ge m=3 rho=1,2,3"), ParseError);   // m out of range
    CHECK_THROWS_AS(parse_cut(qz, "eq m=1 rho=1"), ParseError);
    CHECK_THROWS_AS(parse_cut(qz, "ge m=1 rho=1 extra"), ParseError);
}

TEST_CASE("printing round-trips") {
    auto vars = parse_var_list("x,y");
    GeneratorConfig cfg = GeneratorConfig::defaults();
    cfg.seed = 77;
    for (int t = 0; t < 100; ++t) {
        auto i = gen_monomial_ideal(cfg, static_cast<std::uint64_t>(t));
        CHECK(parse_poly_ideal(vars, format_poly_ideal(vars, i)) == i);
    }
    CHECK(parse_poly_ideal(vars, format_poly_ideal(vars, MonomialIdeal::unit(2))) ==
          MonomialIdeal::unit(2));

    for (const auto& g : cfg.valuation.groups) {
        CHECK(parse_group(format_group(g)) == g);
        for (int t = 0; t < 50; ++t) {
            CutIdeal c = gen_cut_ideal(cfg, g, static_cast<std::uint64_t>(t), false);
            CHECK(parse_cut(g, format_cut(c)) == c);
        }
    }
}

TEST_CASE("canonical generator order matches the printed form") {
    auto vars = parse_var_list("x,y");
    auto j = MonomialIdeal::make(2, {{0, 4}, {1, 3}, {3, 1}, {4, 0}, {2, 2}});
    CHECK(format_poly_ideal(vars, j) == "x^4, x^3*y, x^2*y^2, x*y^3, y^4");
    auto mixed = MonomialIdeal::make(2, {{0, 2}, {1, 0}});
    CHECK(format_poly_ideal(vars, mixed) == "x, y^2");
}

TEST_CASE("default names and replay fragments") {
    CHECK(default_var_names(2) == std::vector<std::string>{"x", "y"});
    CHECK(default_var_names(4) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
    auto vars = default_var_names(2);
    auto i = MonomialIdeal::make(2, {{2, 0}, {0, 2}});
    CHECK(replay_poly(vars, i) == "--vars x,y --ideal \"x^2, y^2\"");
    ValueGroup q({Component::dense});
    CHECK(replay_val(maximal_cut(q)) == "--group \"lex(Q)\" --ideal \"gt m=1 rho=0\"");
}

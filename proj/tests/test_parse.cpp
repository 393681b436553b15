#include <catch2/catch_amalgamated.hpp>

#include "nlag/parse.hpp"
#include "support/generators.hpp"

using namespace nlag;

TEST_CASE("derivation-style expressions parse to canonical form") {
    const Polynomial p = parse("C1*xdot*x + C2*(xdot*t + x)");
    CHECK(p.terms().size() == 3);
    CHECK(p == Polynomial::variable(Symbol::C1) * Polynomial::variable(Symbol::xdot) *
                       Polynomial::variable(Symbol::x) +
                   Polynomial::variable(Symbol::C2) *
                       (Polynomial::variable(Symbol::xdot) * Polynomial::variable(Symbol::t) +
                        Polynomial::variable(Symbol::x)));

    CHECK(parse("0").is_zero());
    CHECK(parse("0").terms().empty());

    CHECK(parse("1/2*C0*xdot^2") ==
          Rational(1, 2) * Polynomial::variable(Symbol::C0) *
              pow(Polynomial::variable(Symbol::xdot), 2));
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse("  C1 * xdot\t*x+C2* ( xdot * t + x ) ") ==
          parse("C1*xdot*x + C2*(xdot*t + x)"));
    CHECK(parse("3 / 4") == Polynomial::constant(Rational(3, 4)));
}

TEST_CASE("rational literals and exponents") {
    CHECK(parse("3/4") == Polynomial::constant(Rational(3, 4)));
    CHECK(parse("2^3") == Polynomial::constant(8));
    CHECK(parse("1/2^2") == Polynomial::constant(Rational(1, 4)));
    CHECK(parse("x^0") == Polynomial::one());
    CHECK_THROWS_AS(parse("1/0"), ParseError);
}

TEST_CASE("unary minus negates the whole factor") {
    CHECK(parse("-x^2") == -pow(Polynomial::variable(Symbol::x), 2));
    CHECK(parse("(-x)^2") == pow(Polynomial::variable(Symbol::x), 2));
    CHECK(parse("--x") == Polynomial::variable(Symbol::x));
    CHECK(parse("-1/2*x") == Rational(-1, 2) * Polynomial::variable(Symbol::x));
    CHECK(parse("t - -x") == parse("t + x"));
}

TEST_CASE("errors carry positions") {
    try {
        parse("C1*xdot + y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 11);
        CHECK(std::string(e.what()).find("unknown symbol 'y'") != std::string::npos);
    }

    try {
        parse("C1 xdot");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4); // implicit multiplication rejected
    }

    CHECK_THROWS_AS(parse("C1*"), ParseError);
    CHECK_THROWS_AS(parse("(x + t"), ParseError);
    CHECK_THROWS_AS(parse("x +"), ParseError);
    CHECK_THROWS_AS(parse("x^x"), ParseError);
    CHECK_THROWS_AS(parse("x?"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("3/x"), ParseError);
}

TEST_CASE("second-derivative symbols are rejected in expressions") {
    CHECK_THROWS_AS(parse("xddot"), ParseError);
    CHECK_THROWS_AS(parse("C0*xpddot"), ParseError);
    ParseOptions allow;
    allow.allow_second_derivatives = true;
    CHECK(parse("C0*xddot", allow) ==
          Polynomial::variable(Symbol::C0) * Polynomial::variable(Symbol::xddot));
}

TEST_CASE("exponent over cap") {
    CHECK_THROWS_AS(parse("x^9"), ParseError);
    CHECK_THROWS_AS(parse("x^999999999999"), ParseError);
    ParseOptions cap12;
    cap12.degree_cap = 12;
    CHECK(parse("x^9", cap12) == pow(Polynomial::variable(Symbol::x), 9, 12));
    // the cap also applies to products
    CHECK_THROWS_AS(parse("x^5*x^5"), ParseError);
}

TEST_CASE("round trip: parse(print(p)) == p") {
    Rng rng(505);
    static const std::vector<Symbol> pool = {
        Symbol::C0, Symbol::C2, Symbol::C5,    Symbol::Cconst, Symbol::v0,
        Symbol::x0, Symbol::t,  Symbol::x,     Symbol::xdot,   Symbol::xp,
        Symbol::xpdot,
    };
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = testgen::random_poly(rng, pool, 6, 4, 16, 16);
        CHECK(parse(to_string(p)) == p);
    }
    // negative unit leading coefficients in particular
    CHECK(parse(to_string(parse("-x^2 - xdot"))) == parse("-x^2 - xdot"));
}

#include <catch2/catch_amalgamated.hpp>

#include "nlag/galilean.hpp"
#include "nlag/parse.hpp"
#include "support/generators.hpp"

using namespace nlag;
using testgen::random_lagrangian;

TEST_CASE("boost of the standard Lagrangian expands the square") {
    // oracle: substitute xdot -> xpdot + v0 by hand and expand the binomial
    const Polynomial expected = Rational(1, 2) * Polynomial::variable(Symbol::C0) *
                                pow(parse("xpdot + v0"), 2);
    CHECK(apply_boost(parse("1/2*C0*xdot^2"), BoostContext::symbolic()) == expected);
    CHECK(expected == parse("1/2*C0*xpdot^2 + C0*xpdot*v0 + 1/2*C0*v0^2"));
}

TEST_CASE("boost basics") {
    const BoostContext ctx = BoostContext::symbolic();
    CHECK(apply_boost(parse("t"), ctx) == parse("t")); // time is absolute
    CHECK(apply_boost(parse("x"), BoostContext::with_velocity(Rational(0))) == parse("xp"));
    CHECK(apply_boost(parse("x"), ctx) == parse("xp + v0*t"));
    CHECK(apply_boost(parse("xp"), ctx.inverse()) == parse("x - v0*t"));
}

TEST_CASE("boost input validation") {
    CHECK_THROWS_AS(apply_boost(parse("x*xp"), BoostContext::symbolic()), FrameError);
    CHECK_THROWS_AS(apply_boost(parse("xp"), BoostContext::symbolic()), FrameError);
    CHECK_THROWS_AS(apply_boost(parse("x"), BoostContext::symbolic().inverse()), FrameError);
    CHECK_THROWS_AS(BoostContext::with_velocity(parse("v0*t")), InvariantError);
    CHECK_THROWS_AS(BoostContext::with_velocity(parse("x")), InvariantError);
}

TEST_CASE("boost round trip is the identity") {
    Rng rng(808);
    const BoostContext ctx = BoostContext::symbolic();
    for (int i = 0; i < 50; ++i) {
        const Polynomial L = random_lagrangian(rng, 5, 3);
        CHECK(apply_boost(apply_boost(L, ctx), ctx.inverse()) == L);
    }
}

TEST_CASE("boost group law for concrete velocities") {
    const Rational v1(3, 2), v2(-2, 5);
    const Polynomial L = parse("1/2*C0*xdot^2 + C1*xdot*x + C4*xdot");
    const Polynomial once = apply_boost(L, BoostContext::with_velocity(v1));
    const Polynomial twice =
        apply_boost(swap_frames(once), BoostContext::with_velocity(v2));
    CHECK(twice == apply_boost(L, BoostContext::with_velocity(v1 + v2)));
}

TEST_CASE("the E-L operator is boost-equivariant") {
    const BoostContext ctx = BoostContext::symbolic();
    // acceleration maps to primed acceleration: the equation of motion is
    // frame-invariant.
    CHECK(euler_lagrange(apply_boost(parse("1/2*C0*xdot^2"), ctx)) ==
          Polynomial::variable(Symbol::C0) * Polynomial::variable(Symbol::xpddot));

    Rng rng(909);
    for (int i = 0; i < 50; ++i) {
        const Polynomial L = random_lagrangian(rng, 5, 3);
        CHECK(euler_lagrange(apply_boost(L, ctx)) ==
              apply_boost(euler_lagrange(L), ctx));
    }
}

TEST_CASE("decompose reproduces the induced gauge of the standard Lagrangian") {
    const BoostDecomposition dec =
        decompose(parse("1/2*C0*xdot^2"), BoostContext::symbolic());
    CHECK(dec.same_form == parse("1/2*C0*xpdot^2"));
    CHECK(dec.induced_null == parse("C0*xpdot*v0 + 1/2*C0*v0^2"));
    CHECK(dec.induced_gauge.phi() == parse("C0*(xp + 1/2*v0*t)*v0"));
}

TEST_CASE("decompose reproduces the induced gauge of the null family") {
    const BoostDecomposition dec = decompose(
        parse("C1*xdot*x + C2*(xdot*t + x) + C4*xdot + C6"), BoostContext::symbolic());
    CHECK(dec.same_form == parse("C1*xpdot*xp + C2*(xpdot*t + xp) + C4*xpdot + C6"));
    CHECK(dec.induced_gauge.phi() ==
          parse("(C1*(xp + 1/2*v0*t) + C2*t + C4)*v0*t"));
}

TEST_CASE("decompose corner cases") {
    CHECK(decompose(parse("C6"), BoostContext::symbolic()).induced_gauge.is_zero());

    // zero boost: nothing is induced
    Rng rng(1010);
    for (int i = 0; i < 30; ++i) {
        const Polynomial L = random_lagrangian(rng, 5, 3);
        const BoostDecomposition dec =
            decompose(L, BoostContext::with_velocity(Rational(0)));
        CHECK(dec.induced_null.is_zero());
        CHECK(dec.induced_gauge.is_zero());
        CHECK(dec.transformed == dec.same_form);
    }
}

TEST_CASE("decomposition exactness on the quadratic-plus-affine family") {
    Rng rng(1111);
    const BoostContext ctx = BoostContext::symbolic();
    for (int i = 0; i < 60; ++i) {
        const Polynomial L = testgen::random_ansatz(rng);
        const BoostDecomposition dec = decompose(L, ctx);
        CHECK(dec.same_form == swap_frames(L));
        CHECK(dec.same_form + total_time_derivative(dec.induced_gauge.phi()) ==
              dec.transformed);
        CHECK(is_null(dec.induced_null).null);
    }
}

TEST_CASE("decompose rejects remainders that are not null") {
    // A position-dependent kinetic coefficient makes the boost remainder
    // quadratic in the velocity, which no gauge function can absorb.
    CHECK_THROWS_AS(decompose(parse("x*xdot^2"), BoostContext::symbolic()),
                    NotNullError);
}

// Acceptance suite: exercises the full derivation end to end and prints one
// pass/fail line per criterion. Exit code 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "nlag/nlag.hpp"
#include "support/run_cli.hpp"

using namespace nlag;
using nlag::testsupport::run_cli;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, double millis) {
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.1f ms)\n", ok ? "PASS" : "FAIL", id,
                title.c_str(), millis);
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

Rational draw_value(Rng& rng, int max_abs = 2) {
    const int den = rng.uniform_int(1, 8);
    return Rational(rng.uniform_int(-max_abs * den, max_abs * den), den);
}

Rational draw_nonzero(Rng& rng, int max_abs = 2) {
    Rational r = draw_value(rng, max_abs);
    while (r == 0) r = draw_value(rng, max_abs);
    return r;
}

Path random_path(Rng& rng, int degree, double scale) {
    std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = rng.uniform(-scale, scale);
    return Path(std::move(coeffs));
}

// 1. The combined ansatz is nullable exactly under C3 = 0, C5 = C2.
void criterion_null_conditions() {
    const auto start = Clock::now();
    const Polynomial ansatz =
        parse("C1*xdot*x + C2*xdot*t + C3*x*t + C4*xdot + C5*x + C6");
    const ConstraintSet cs = null_conditions(ansatz);
    bool ok = cs.consistent && cs.equations.size() == 2 && cs.solved.size() == 2 &&
              cs.solved.at(Symbol::C3).is_zero() &&
              cs.solved.at(Symbol::C5) == Polynomial::variable(Symbol::C2);

    const auto cli = run_cli(
        "null 'C1*xdot*x + C2*xdot*t + C3*x*t + C4*xdot + C5*x + C6'");
    ok = ok && cli.exit_code == 0 && contains(cli.output, "C3 = 0") &&
         contains(cli.output, "C5 = C2");

    const double elapsed = ms_since(start);
    report(1, "null conditions reproduce C3 = 0 and C5 = C2", ok && elapsed < 1000.0,
           elapsed);
}

// 2. The gauge of the null family and its three partial gauges, exactly.
void criterion_gauge_function() {
    const auto start = Clock::now();
    const Polynomial L_n = parse("C1*xdot*x + C2*(xdot*t + x) + C4*xdot + C6");
    bool ok = gauge_from_null(L_n).phi() ==
              parse("1/2*C1*x^2 + C2*x*t + C4*x + C6*t");
    ok = ok && gauge_from_null(parse("C1*xdot*x")).phi() == parse("1/2*C1*x^2");
    ok = ok && gauge_from_null(parse("C2*(xdot*t + x)")).phi() == parse("C2*x*t");
    ok = ok && gauge_from_null(parse("C4*xdot + C6")).phi() == parse("C4*x + C6*t");
    report(2, "gauge function of the null family, exact", ok, ms_since(start));
}

// 3. The two boost-induced gauges, exactly.
void criterion_induced_gauges() {
    const auto start = Clock::now();
    const BoostContext ctx = BoostContext::symbolic();
    bool ok = decompose(parse("1/2*C0*xdot^2"), ctx).induced_gauge.phi() ==
              parse("C0*(xp + 1/2*v0*t)*v0");
    ok = ok &&
         decompose(parse("C1*xdot*x + C2*(xdot*t + x) + C4*xdot + C6"), ctx)
                 .induced_gauge.phi() ==
             parse("(C1*(xp + 1/2*v0*t) + C2*t + C4)*v0*t");
    report(3, "boost-induced gauges of the standard and null parts, exact", ok,
           ms_since(start));
}

// 4. The constancy solve yields the three solved constants, exactly.
void criterion_constant_solve() {
    const auto start = Clock::now();
    const BoostContext ctx = BoostContext::symbolic();
    const Polynomial combined =
        parse("1/2*C0*xdot^2 + C1*xdot*x + C2*(xdot*t + x) + C4*xdot + C6");
    const Polynomial on_shell = on_shell_substitute(
        decompose(combined, ctx).induced_gauge, OnShellSolution::primed(ctx));
    const ConstraintSet cs = solve_constancy(on_shell);
    const bool ok = cs.consistent &&
                    cs.solved.at(Symbol::C2) == parse("-C1*(u0 - 1/2*v0)") &&
                    cs.solved.at(Symbol::C4) ==
                        parse("-C0*(u0 - 1/2*v0) - C1*x0") &&
                    cs.solved.at(Symbol::Cconst) == parse("C0*v0*x0");
    report(4, "constancy condition solves C2, C4 and C, exact", ok, ms_since(start));
}

// 5. The constrained family is invariant for >= 100 random bindings; the
//    standard Lagrangian alone fails for every nonzero boost velocity.
void criterion_end_to_end_invariance() {
    const auto start = Clock::now();
    Rng rng(51);
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        InvarianceOptions opt;
        opt.c0 = draw_value(rng);
        opt.c1 = draw_value(rng);
        opt.c6 = draw_value(rng);
        opt.u0 = draw_value(rng);
        opt.x0 = draw_value(rng);
        opt.v0 = draw_nonzero(rng);
        const InvarianceSolution inv = build_invariant_lagrangian(opt);
        const BoostContext ctx = BoostContext::with_velocity(*opt.v0);
        const OnShellSolution sol = OnShellSolution::primed(
            ctx, Polynomial::constant(*opt.u0), Polynomial::constant(*opt.x0));
        const InvarianceReport rep = verify_invariance(inv.invariant_L, ctx, sol);
        ok = ok && rep.passed &&
             rep.residual_constant ==
                 Polynomial::constant(*opt.c0 * *opt.v0 * *opt.x0);
    }
    const Polynomial L_s = parse("1/2*C0*xdot^2");
    for (int i = 0; i < 100; ++i) {
        const BoostContext ctx = BoostContext::with_velocity(draw_nonzero(rng, 4));
        const InvarianceReport rep =
            verify_invariance(L_s, ctx, OnShellSolution::primed(ctx));
        ok = ok && !rep.passed;
    }
    const double elapsed = ms_since(start);
    report(5, "end-to-end invariance: 100 bindings pass, bare standard fails",
           ok && elapsed < 10000.0, elapsed);
}

// 6. Null action equals the gauge boundary difference on arbitrary paths,
//    and is path independent between shared endpoints. Tolerance 1e-12.
void criterion_null_action() {
    const auto start = Clock::now();
    Rng rng(61);
    bool ok = true;
    const Polynomial L_n = parse("C1*xdot*x + C2*(xdot*t + x) + C4*xdot + C6");
    const GaugeFunction phi = gauge_from_null(L_n);
    for (int i = 0; i < 100; ++i) {
        BindingSet b;
        for (Symbol s : {Symbol::C1, Symbol::C2, Symbol::C4, Symbol::C6}) {
            b[s] = to_double(draw_value(rng));
        }
        const Path path = random_path(rng, 4, 1.0);
        const double t0 = rng.uniform(-1.0, -0.1);
        const double t1 = t0 + rng.uniform(0.3, 1.2);
        const CheckResult res = check_null_action(L_n, phi, path, b, t0, t1, 1e-12);
        ok = ok && res.passed;

        // second path, different interior, same endpoint positions: pick the
        // cubic part freely and fit the affine part to the endpoints
        const double p0 = path.position(t0), p1 = path.position(t1);
        const double c2 = rng.uniform(-1.0, 1.0);
        const double c3 = rng.uniform(-1.0, 1.0);
        const double r0 = c2 * t0 * t0 + c3 * t0 * t0 * t0;
        const double r1 = c2 * t1 * t1 + c3 * t1 * t1 * t1;
        const double a1 = ((p1 - r1) - (p0 - r0)) / (t1 - t0);
        const double a0 = (p0 - r0) - a1 * t0;
        const Path other({a0, a1, c2, c3});
        const double s_a = action(L_n, path, b, t0, t1);
        const double s_b = action(L_n, other, b, t0, t1);
        ok = ok && std::abs(s_a - s_b) <= 1e-12;
    }
    report(6, "null action: gauge boundary identity and path independence at 1e-12",
           ok, ms_since(start));
}

// 7. The equation of motion survives: symbolic residual C0*xddot and a
//    finite-difference cross-check within 1e-6 (h = 1e-5).
void criterion_equation_of_motion() {
    const auto start = Clock::now();
    const InvarianceSolution inv = build_invariant_lagrangian();
    bool ok = euler_lagrange(inv.invariant_L) ==
              Polynomial::variable(Symbol::C0) * Polynomial::variable(Symbol::xddot);

    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        InvarianceOptions opt;
        opt.c0 = draw_value(rng);
        opt.c1 = draw_value(rng);
        opt.c6 = draw_value(rng);
        opt.u0 = draw_value(rng, 1);
        opt.x0 = draw_value(rng, 1);
        opt.v0 = draw_nonzero(rng);
        const InvarianceSolution instance = build_invariant_lagrangian(opt);
        const Path path = random_path(rng, 4, 1.0);
        const CheckResult fd = fd_check_el(instance.invariant_L, path, {}, -0.5, 0.5,
                                           9, 1e-5, 1e-6);
        ok = ok && fd.passed;
    }
    report(7, "equation of motion: C0*xddot exactly, finite differences within 1e-6",
           ok, ms_since(start));
}

// 8. Boost action identity within 1e-12 on 100 random numeric instances.
void criterion_boost_action() {
    const auto start = Clock::now();
    Rng rng(81);
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        InvarianceOptions opt;
        opt.c0 = draw_value(rng);
        opt.c1 = draw_value(rng);
        opt.c6 = draw_value(rng);
        opt.u0 = draw_value(rng, 1);
        opt.x0 = draw_value(rng, 1);
        opt.v0 = draw_nonzero(rng);
        const InvarianceSolution inv = build_invariant_lagrangian(opt);
        const BoostContext ctx = BoostContext::with_velocity(*opt.v0);
        const Path path = random_path(rng, 3, 1.0);
        const CheckResult res =
            check_boost_action(inv.invariant_L, ctx, path, {}, -0.5, 0.5, 1e-12);
        ok = ok && res.passed;
    }
    report(8, "boost action identity within 1e-12 on 100 instances", ok,
           ms_since(start));
}

// 9. The scripted full derivation exits 0 in under 5 seconds.
void criterion_full_derivation() {
    const auto start = Clock::now();
    const auto cli = run_cli("paper");
    const double elapsed = ms_since(start);
    const bool ok = cli.exit_code == 0 &&
                    contains(cli.output, "all 17 checks passed") && elapsed < 5000.0;
    report(9, "scripted derivation runs clean end to end", ok, elapsed);
}

} // namespace

int main() {
    criterion_null_conditions();
    criterion_gauge_function();
    criterion_induced_gauges();
    criterion_constant_solve();
    criterion_end_to_end_invariance();
    criterion_null_action();
    criterion_equation_of_motion();
    criterion_boost_action();
    criterion_full_derivation();
    if (failures == 0) {
        std::printf("acceptance: 9/9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}

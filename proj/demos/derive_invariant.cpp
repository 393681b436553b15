// Library walkthrough: from the free-particle Lagrangian to its Galilean
// invariant completion, with every identity checked along the way.

#include <cassert>
#include <iostream>

#include "nlag/nlag.hpp"

using namespace nlag;

int main() {
    const Polynomial L_s = parse("1/2*C0*xdot^2");
    std::cout << "standard Lagrangian   : " << L_s << "\n";
    std::cout << "equation of motion    : " << euler_lagrange(L_s) << " = 0\n\n";

    // which low-order terms can be added without touching the dynamics?
    const Polynomial ansatz =
        parse("C1*xdot*x + C2*xdot*t + C3*x*t + C4*xdot + C5*x + C6");
    const ConstraintSet conditions = null_conditions(ansatz);
    std::cout << "null conditions on the ansatz:\n";
    for (const auto& [s, value] : conditions.solved) {
        std::cout << "  " << name(s) << " = " << value << "\n";
    }

    const Polynomial L_n = conditions.apply(ansatz);
    const GaugeFunction phi = gauge_from_null(L_n);
    std::cout << "null Lagrangian       : " << L_n << "\n";
    std::cout << "its gauge function    : " << phi.phi() << "\n\n";

    // boost the combined Lagrangian and demand a constant residual gauge
    const InvarianceSolution inv = build_invariant_lagrangian();
    std::cout << "boost-induced gauge   : " << inv.induced_gauge.phi() << "\n";
    std::cout << "along the solution    : " << inv.on_shell_gauge << "\n";
    for (const auto& [s, value] : inv.constraints.solved) {
        std::cout << "  " << (s == Symbol::Cconst ? "C" : std::string(name(s)))
                  << " = " << value << "\n";
    }
    std::cout << "invariant Lagrangian  : " << inv.invariant_L << "\n";

    const BoostContext ctx = BoostContext::symbolic();
    const InvarianceReport report =
        verify_invariance(inv.invariant_L, ctx, OnShellSolution::primed(ctx));
    assert(report.passed);
    std::cout << "invariance check      : " << (report.passed ? "pass" : "fail")
              << " (gauge settles to " << report.residual_constant << ")\n";
    return report.passed ? 0 : 1;
}

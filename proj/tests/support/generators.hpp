#pragma once

// Seeded generators shared by the property-style tests. All randomness goes
// through nlag::Rng so runs are reproducible bit for bit.

#include <vector>

#include "nlag/nlag.hpp"

namespace nlag::testgen {

/// Random canonical polynomial over the given symbol pool.
inline Polynomial random_poly(Rng& rng, const std::vector<Symbol>& pool, int max_terms,
                              int max_degree, int max_num = 8, int max_den = 8) {
    std::vector<Monomial> terms;
    const int n = rng.uniform_int(0, max_terms);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        m.coeff = rng.small_rational(max_num, max_den);
        const int budget = rng.uniform_int(0, max_degree);
        for (int d = 0; d < budget; ++d) {
            const int pick = rng.uniform_int(0, static_cast<int>(pool.size()) - 1);
            ++m.exps[index_of(pool[static_cast<std::size_t>(pick)])];
        }
        terms.push_back(std::move(m));
    }
    return Polynomial::from_terms(std::move(terms));
}

/// Random Lagrangian-shaped polynomial (no second derivatives).
inline Polynomial random_lagrangian(Rng& rng, int max_terms = 5, int max_degree = 3) {
    static const std::vector<Symbol> pool = {
        Symbol::C0, Symbol::C1, Symbol::C6, Symbol::v0, Symbol::u0,
        Symbol::t,  Symbol::x,  Symbol::xdot,
    };
    return random_poly(rng, pool, max_terms, max_degree);
}

/// Random gauge-shaped polynomial in (x, t) with constant coefficients.
inline Polynomial random_gauge_poly(Rng& rng, int max_terms = 5, int max_degree = 4) {
    static const std::vector<Symbol> pool = {
        Symbol::C1, Symbol::C2, Symbol::C4, Symbol::C6, Symbol::t, Symbol::x,
    };
    return random_poly(rng, pool, max_terms, max_degree);
}

/// Random member of the boost-decomposable family: a constant-coefficient
/// kinetic term plus the general ansatz affine in the velocity.
inline Polynomial random_ansatz(Rng& rng, int max_num = 8, int max_den = 8) {
    const Polynomial x = Polynomial::variable(Symbol::x);
    const Polynomial v = Polynomial::variable(Symbol::xdot);
    const Polynomial t = Polynomial::variable(Symbol::t);
    auto c = [&] { return Polynomial::constant(rng.small_rational(max_num, max_den)); };
    return c() * v * v + c() * v * x + c() * v * t + c() * x * t + c() * v +
           c() * x + c() * t + c();
}

/// Random path with coefficients in [-scale, scale].
inline Path random_path(Rng& rng, int max_degree = 4, double scale = 1.0,
                        Frame frame = Frame::unprimed) {
    const int deg = rng.uniform_int(0, max_degree);
    std::vector<double> coeffs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : coeffs) c = rng.uniform(-scale, scale);
    return Path(std::move(coeffs), frame);
}

/// Random rational bounded by |value| <= max_abs, denominator <= max_den.
inline Rational bounded_rational(Rng& rng, int max_abs = 2, int max_den = 8) {
    const int den = rng.uniform_int(1, max_den);
    return Rational(rng.uniform_int(-max_abs * den, max_abs * den), den);
}

/// Random nonzero rational in [-2, 2].
inline Rational small_value(Rng& rng) {
    Rational r = bounded_rational(rng);
    while (r == 0) r = bounded_rational(rng);
    return r;
}

} // namespace nlag::testgen

#pragma once

/*
 * numeric.hpp
 * -----------
 * Independent floating-point verification of the symbolic identities:
 * trajectory evaluation, Gauss-Legendre quadrature of actions, and
 * finite-difference cross-checks of the Euler-Lagrange operator.
 *
 * Quadrature is fixed at order 20: the integrands in scope are polynomials
 * of degree well below 2*20 - 1 = 39, so the rule is exact up to rounding.
 * The default tolerance 1e-12 is rounding headroom on unit-scale inputs,
 * not method error.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nlag/errors.hpp"
#include "nlag/galilean.hpp"
#include "nlag/polynomial.hpp"
#include "nlag/symbol.hpp"

namespace nlag {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr double kDefaultFdStep = 1e-5;

/// A concrete trajectory t -> x(t) as a univariate polynomial, degree <= 6.
class Path {
public:
    explicit Path(std::vector<double> coeffs, Frame frame = Frame::unprimed)
        : coeffs_(std::move(coeffs)), frame_(frame) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
        if (coeffs_.size() > 7) {
            throw InvariantError("path degree exceeds 6");
        }
        for (double c : coeffs_) {
            if (!std::isfinite(c)) throw InvariantError("path coefficient not finite");
        }
        if (frame_ != Frame::unprimed && frame_ != Frame::primed) {
            throw InvariantError("path frame must be unprimed or primed");
        }
    }

    static Path affine(double velocity, double position, Frame frame = Frame::unprimed) {
        return Path({position, velocity}, frame);
    }

    const std::vector<double>& coeffs() const { return coeffs_; }
    Frame frame() const { return frame_; }

    double position(double t) const { return horner(coeffs_, t); }

    double velocity(double t) const {
        std::vector<double> d = derivative(coeffs_);
        return horner(d, t);
    }

    double acceleration(double t) const {
        std::vector<double> d = derivative(derivative(coeffs_));
        return horner(d, t);
    }

    /// The image of this (unprimed) path in the boosted frame: x' = x - v t.
    Path boosted(double v) const {
        if (frame_ != Frame::unprimed) {
            throw FrameError("boosted() expects an unprimed-frame path");
        }
        std::vector<double> c = coeffs_;
        if (c.size() < 2) c.push_back(0.0);
        c[1] -= v;
        return Path(std::move(c), Frame::primed);
    }

private:
    static double horner(const std::vector<double>& c, double t) {
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
        return acc;
    }

    static std::vector<double> derivative(const std::vector<double>& c) {
        std::vector<double> d;
        for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
        if (d.empty()) d.push_back(0.0);
        return d;
    }

    std::vector<double> coeffs_;
    Frame frame_;
};

/// Numeric values for constants and parameters.
using BindingSet = std::map<Symbol, double>;

namespace detail {

inline double int_pow(double base, int e) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

struct GaussLegendre {
    std::array<double, 20> nodes{};
    std::array<double, 20> weights{};
};

/// Order-20 nodes/weights on [-1, 1], by Newton iteration on P_20. Only half
/// the roots are computed; the rest are mirrored so the rule is exactly
/// symmetric.
inline const GaussLegendre& gauss_legendre_20() {
    static const GaussLegendre rule = [] {
        GaussLegendre r;
        constexpr int n = 20;
        const double pi = std::acos(-1.0);
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 64; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            r.nodes[i] = x;
            r.weights[i] = w;
            r.nodes[n - 1 - i] = -x;
            r.weights[n - 1 - i] = w;
        }
        return r;
    }();
    return rule;
}

} // namespace detail

/// Value of a polynomial at time t along a concrete path. The path supplies
/// position, velocity and acceleration (analytically); every other non-time
/// symbol must come from the bindings.
inline double eval_on_path(const Polynomial& p, const Path& path,
                           const BindingSet& bindings, double t) {
    const FrameSymbols syms = frame_symbols(path.frame());
    double total = 0.0;
    for (const auto& m : p.terms()) {
        double value = to_double(m.coeff);
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            const int e = m.exps[i];
            if (e == 0) continue;
            const Symbol s = symbol_at(i);
            double sv;
            if (s == Symbol::t) {
                sv = t;
            } else if (s == syms.position) {
                sv = path.position(t);
            } else if (s == syms.velocity) {
                sv = path.velocity(t);
            } else if (s == syms.acceleration) {
                sv = path.acceleration(t);
            } else if (kind(s) == SymbolKind::dynamic) {
                throw FrameError("symbol '" + std::string(name(s)) +
                                 "' does not belong to the path frame");
            } else if (auto it = bindings.find(s); it != bindings.end()) {
                sv = it->second;
            } else {
                throw UnboundSymbolError("unbound symbol '" + std::string(name(s)) + "'");
            }
            value *= detail::int_pow(sv, e);
        }
        total += value;
    }
    return total;
}

/// Value of a polynomial free of dynamic symbols and t.
inline double eval_constant(const Polynomial& p, const BindingSet& bindings) {
    if (frame_of(p) != Frame::none || p.contains(Symbol::t)) {
        throw Error("expected a constant expression");
    }
    return eval_on_path(p, Path({0.0}), bindings, 0.0);
}

/// Action integral of L along the path over [t0, t1].
inline double action(const Polynomial& L, const Path& path, const BindingSet& bindings,
                     double t0, double t1) {
    if (!(t0 < t1)) throw Error("action requires t0 < t1");
    const auto& rule = detail::gauss_legendre_20();
    const double half = 0.5 * (t1 - t0);
    const double mid = 0.5 * (t0 + t1);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * eval_on_path(L, path, bindings, mid + half * rule.nodes[i]);
    }
    return half * sum;
}

struct CheckResult {
    bool passed;
    double residual;
    double tolerance;
};

/// |integral of L_n - (Phi(t1) - Phi(t0))| <= tol. Holds for arbitrary paths,
/// not only solutions: the defining behavioral property of a null Lagrangian.
inline CheckResult check_null_action(const Polynomial& L_n, const GaugeFunction& phi,
                                     const Path& path, const BindingSet& bindings,
                                     double t0, double t1,
                                     double tol = kDefaultTolerance) {
    const double lhs = action(L_n, path, bindings, t0, t1);
    const double rhs = eval_on_path(phi.phi(), path, bindings, t1) -
                       eval_on_path(phi.phi(), path, bindings, t0);
    const double residual = std::abs(lhs - rhs);
    return {residual <= tol, residual, tol};
}

/// Checks the boosted-action identity S' = S_sameform + delta Phi_G along the
/// boosted image of `path`. The boost velocity comes from the context when
/// concrete, otherwise from the bindings.
inline CheckResult check_boost_action(const Polynomial& L, const BoostContext& ctx,
                                      const Path& path, const BindingSet& bindings,
                                      double t0, double t1,
                                      double tol = kDefaultTolerance) {
    const double v = eval_constant(ctx.velocity(), bindings);
    const Path boosted_path = path.boosted(v);
    const BoostDecomposition dec = decompose(L, ctx);
    const double transformed_action = action(dec.transformed, boosted_path, bindings, t0, t1);
    const double same_form_action = action(dec.same_form, boosted_path, bindings, t0, t1);
    const double gauge_delta =
        eval_on_path(dec.induced_gauge.phi(), boosted_path, bindings, t1) -
        eval_on_path(dec.induced_gauge.phi(), boosted_path, bindings, t0);
    const double residual = std::abs(transformed_action - same_form_action - gauge_delta);
    return {residual <= tol, residual, tol};
}

/// Compares the symbolic Euler-Lagrange residual against a central
/// finite-difference derivative of dL/dv along the path, at `samples` evenly
/// spaced times in [t0, t1].
inline CheckResult fd_check_el(const Polynomial& L, const Path& path,
                               const BindingSet& bindings, double t0, double t1,
                               int samples = 9, double h = kDefaultFdStep,
                               double tol = 1e-6) {
    if (!(h > 0)) throw Error("finite-difference step must be positive");
    if (samples < 1) throw Error("need at least one sample time");
    const FrameSymbols syms = frame_symbols(path.frame());
    const Polynomial dLdv = partial(L, syms.velocity);
    const Polynomial dLdx = partial(L, syms.position);
    const Polynomial el = euler_lagrange(L);
    double max_dev = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = samples == 1
                             ? 0.5 * (t0 + t1)
                             : t0 + (t1 - t0) * static_cast<double>(i) / (samples - 1);
        const double fd = (eval_on_path(dLdv, path, bindings, t + h) -
                           eval_on_path(dLdv, path, bindings, t - h)) /
                          (2.0 * h);
        const double numeric_el = fd - eval_on_path(dLdx, path, bindings, t);
        const double symbolic_el = eval_on_path(el, path, bindings, t);
        max_dev = std::max(max_dev, std::abs(numeric_el - symbolic_el));
    }
    return {max_dev <= tol, max_dev, tol};
}

/// Deterministic generator for randomized property runs. splitmix64 core, so
/// sequences are identical across platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        if (hi < lo) throw Error("uniform_int: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
        std::uint64_t r = next_u64();
        while (r >= limit) r = next_u64();
        return lo + static_cast<int>(r % span);
    }

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    /// Small exact rational with |numerator| <= max_num, denominator <= max_den.
    Rational small_rational(int max_num = 16, int max_den = 16) {
        return Rational(uniform_int(-max_num, max_num), uniform_int(1, max_den));
    }

    Rational nonzero_rational(int max_num = 16, int max_den = 16) {
        Rational r = small_rational(max_num, max_den);
        while (r == 0) r = small_rational(max_num, max_den);
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace nlag

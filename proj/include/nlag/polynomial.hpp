#pragma once

/*
 * polynomial.hpp
 * --------------
 * Canonical multivariate polynomials with exact rational coefficients over
 * the fixed symbol alphabet. Every Lagrangian, gauge function and
 * Euler-Lagrange residual in the library is one of these.
 *
 * Canonical form: terms sorted in descending graded-lexicographic order over
 * the Symbol enumeration, fully combined, no zero coefficients. The zero
 * polynomial is the empty term sequence. Structural equality therefore
 * coincides with mathematical equality.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "nlag/errors.hpp"
#include "nlag/rational.hpp"
#include "nlag/symbol.hpp"

namespace nlag {

/// Monomial total degrees above this are rejected. Everything in scope has
/// degree <= 5; the cap bounds blow-up from malformed input.
inline constexpr int kDefaultDegreeCap = 8;

using Exponents = std::array<std::uint8_t, kSymbolCount>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

/// Graded-lex: compare total degree first, then the exponent vector in the
/// fixed symbol order (higher exponent on an earlier symbol ranks higher).
inline bool graded_lex_less(const Exponents& a, const Exponents& b) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct Monomial {
    Rational coeff;
    Exponents exps{};

    int degree() const { return total_degree(exps); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.coeff == b.coeff && a.exps == b.exps;
    }
};

class Polynomial {
public:
    /// The zero polynomial.
    Polynomial() = default;

    static Polynomial zero() { return Polynomial{}; }

    static Polynomial constant(Rational c) {
        Polynomial p;
        if (c != 0) p.terms_.push_back(Monomial{std::move(c), Exponents{}});
        return p;
    }

    static Polynomial one() { return constant(1); }

    static Polynomial variable(Symbol s) {
        Polynomial p;
        Exponents e{};
        e[index_of(s)] = 1;
        p.terms_.push_back(Monomial{Rational(1), e});
        return p;
    }

    /// Builds the canonical form from arbitrary terms: combines duplicates,
    /// drops zeros, sorts, and enforces the degree cap.
    static Polynomial from_terms(std::vector<Monomial> terms,
                                 int degree_cap = kDefaultDegreeCap) {
        std::map<Exponents, Rational> combined;
        for (auto& m : terms) {
            if (m.coeff == 0) continue;
            combined[m.exps] += m.coeff;
        }
        Polynomial p;
        for (auto& [exps, coeff] : combined) {
            if (coeff == 0) continue;
            if (total_degree(exps) > degree_cap) {
                throw DegreeCapError("monomial degree " +
                                     std::to_string(total_degree(exps)) +
                                     " exceeds cap " + std::to_string(degree_cap));
            }
            p.terms_.push_back(Monomial{std::move(coeff), exps});
        }
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Monomial& a, const Monomial& b) {
                      return graded_lex_less(b.exps, a.exps);
                  });
        return p;
    }

    const std::vector<Monomial>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& m : terms_) d = std::max(d, m.degree());
        return d;
    }

    int degree_in(Symbol s) const {
        int d = 0;
        for (const auto& m : terms_) d = std::max<int>(d, m.exps[index_of(s)]);
        return d;
    }

    bool contains(Symbol s) const { return degree_in(s) > 0; }

    /// The coefficient of s^power, with s removed, as a polynomial in the
    /// remaining symbols.
    Polynomial coefficient_in(Symbol s, int power) const {
        std::vector<Monomial> out;
        for (const auto& m : terms_) {
            if (m.exps[index_of(s)] != power) continue;
            Monomial r = m;
            r.exps[index_of(s)] = 0;
            out.push_back(std::move(r));
        }
        return from_terms(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& m : p.terms_) m.coeff = -m.coeff;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Monomial> terms = a.terms_;
        terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
        // Addition cannot raise any monomial degree, so no cap can trip here.
        return from_terms(std::move(terms), kMaxDegree);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        return mul(a, b);
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        return Polynomial::constant(c) * p;
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& c) {
        return c * p;
    }

    /// Product with an explicit degree cap; operator* uses the default cap.
    static Polynomial mul(const Polynomial& a, const Polynomial& b,
                          int degree_cap = kDefaultDegreeCap) {
        std::vector<Monomial> terms;
        terms.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ma : a.terms_) {
            for (const auto& mb : b.terms_) {
                Monomial m;
                int degree = 0;
                for (std::size_t i = 0; i < kSymbolCount; ++i) {
                    const int e = ma.exps[i] + mb.exps[i];
                    degree += e;
                    m.exps[i] = static_cast<std::uint8_t>(e);
                }
                // checked before the narrowing cast could wrap
                if (degree > degree_cap) {
                    throw DegreeCapError("monomial degree " + std::to_string(degree) +
                                         " exceeds cap " + std::to_string(degree_cap));
                }
                m.coeff = ma.coeff * mb.coeff;
                terms.push_back(std::move(m));
            }
        }
        return from_terms(std::move(terms), degree_cap);
    }

private:
    // uint8_t exponents cannot reach this, so it acts as "no cap".
    static constexpr int kMaxDegree = 255 * static_cast<int>(kSymbolCount);

    std::vector<Monomial> terms_;
};

inline Polynomial pow(const Polynomial& base, int exponent,
                      int degree_cap = kDefaultDegreeCap) {
    if (exponent < 0) throw Error("negative exponent");
    Polynomial result = Polynomial::one();
    for (int i = 0; i < exponent; ++i) result = Polynomial::mul(result, base, degree_cap);
    return result;
}

/// Replaces every occurrence of `s` by `replacement`; result is canonical.
inline Polynomial substitute(const Polynomial& p, Symbol s,
                             const Polynomial& replacement,
                             int degree_cap = kDefaultDegreeCap) {
    std::vector<Polynomial> repl_powers = {Polynomial::one()};
    Polynomial result;
    for (const auto& m : p.terms()) {
        const int e = m.exps[index_of(s)];
        while (static_cast<int>(repl_powers.size()) <= e) {
            repl_powers.push_back(
                Polynomial::mul(repl_powers.back(), replacement, degree_cap));
        }
        Monomial rest = m;
        rest.exps[index_of(s)] = 0;
        Polynomial base = Polynomial::from_terms({rest}, degree_cap);
        result = result + Polynomial::mul(base, repl_powers[e], degree_cap);
    }
    return result;
}

/// Simultaneous substitution of several symbols.
inline Polynomial substitute_all(const Polynomial& p,
                                 const std::map<Symbol, Polynomial>& repl,
                                 int degree_cap = kDefaultDegreeCap) {
    Polynomial result;
    for (const auto& m : p.terms()) {
        Monomial rest;
        rest.coeff = m.coeff;
        Polynomial factor = Polynomial::one();
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            const int e = m.exps[i];
            if (e == 0) continue;
            auto it = repl.find(symbol_at(i));
            if (it == repl.end()) {
                rest.exps[i] = static_cast<std::uint8_t>(e);
            } else {
                factor = Polynomial::mul(factor, pow(it->second, e, degree_cap),
                                         degree_cap);
            }
        }
        Polynomial base = Polynomial::from_terms({rest}, degree_cap);
        result = result + Polynomial::mul(base, factor, degree_cap);
    }
    return result;
}

/// Formal partial derivative; all other symbols are independent.
inline Polynomial partial(const Polynomial& p, Symbol s) {
    std::vector<Monomial> out;
    for (const auto& m : p.terms()) {
        const int e = m.exps[index_of(s)];
        if (e == 0) continue;
        Monomial d = m;
        d.coeff *= e;
        d.exps[index_of(s)] = static_cast<std::uint8_t>(e - 1);
        out.push_back(std::move(d));
    }
    return Polynomial::from_terms(std::move(out));
}

/// Term-wise antiderivative in `s` (no integration constant).
inline Polynomial antiderivative(const Polynomial& p, Symbol s,
                                 int degree_cap = kDefaultDegreeCap) {
    std::vector<Monomial> out;
    for (const auto& m : p.terms()) {
        const int e = m.exps[index_of(s)];
        if (m.degree() + 1 > degree_cap || e >= 255) {
            throw DegreeCapError("antiderivative exceeds degree cap " +
                                 std::to_string(degree_cap));
        }
        Monomial a = m;
        a.coeff /= e + 1;
        a.exps[index_of(s)] = static_cast<std::uint8_t>(e + 1);
        out.push_back(std::move(a));
    }
    return Polynomial::from_terms(std::move(out), degree_cap);
}

/// Which frame's dynamic symbols appear in p.
inline Frame frame_of(const Polynomial& p) {
    bool unprimed = false, primed = false;
    for (const auto& m : p.terms()) {
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            if (m.exps[i] == 0) continue;
            if (is_unprimed_dynamic(symbol_at(i))) unprimed = true;
            if (is_primed_dynamic(symbol_at(i))) primed = true;
        }
    }
    if (unprimed && primed) return Frame::mixed;
    if (unprimed) return Frame::unprimed;
    if (primed) return Frame::primed;
    return Frame::none;
}

/// Pure re-symboling x <-> xp, xdot <-> xpdot, xddot <-> xpddot. Applies the
/// swap in both directions; constants, parameters and t are untouched.
inline Polynomial swap_frames(const Polynomial& p) {
    std::vector<Monomial> out;
    out.reserve(p.terms().size());
    for (const auto& m : p.terms()) {
        Monomial r;
        r.coeff = m.coeff;
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            r.exps[index_of(other_frame(symbol_at(i)))] = m.exps[i];
        }
        out.push_back(std::move(r));
    }
    return Polynomial::from_terms(std::move(out));
}

/// Total derivative along a trajectory:
///   D(p) = dp/dt + dp/dx xdot + dp/dxdot xddot  (+ primed analogues).
/// Introduces a second-derivative symbol only if p depends on a velocity.
inline Polynomial total_time_derivative(const Polynomial& p) {
    if (p.contains(Symbol::xddot) || p.contains(Symbol::xpddot)) {
        throw Error("total time derivative undefined for expressions "
                    "containing a second-derivative symbol");
    }
    Polynomial d = partial(p, Symbol::t);
    d = d + partial(p, Symbol::x) * Polynomial::variable(Symbol::xdot);
    d = d + partial(p, Symbol::xdot) * Polynomial::variable(Symbol::xddot);
    d = d + partial(p, Symbol::xp) * Polynomial::variable(Symbol::xpdot);
    d = d + partial(p, Symbol::xpdot) * Polynomial::variable(Symbol::xpddot);
    return d;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& m : p.terms()) {
        const bool negative = m.coeff < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = negative ? Rational(-m.coeff) : m.coeff;
        std::string body;
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            const int e = m.exps[i];
            if (e == 0) continue;
            if (!body.empty()) body += "*";
            body += name(symbol_at(i));
            if (e > 1) {
                body += "^";
                body += std::to_string(e);
            }
        }
        if (body.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += body;
        } else {
            out += to_string(mag) + "*" + body;
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << to_string(p);
}

} // namespace nlag

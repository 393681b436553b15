#pragma once

/*
 * galilean.hpp
 * ------------
 * The one-dimensional Galilean boost x' = x - v0 t, t' = t, applied to
 * Lagrangians by substituting the inverse map (x = x' + v0 t, v = v' + v0),
 * and the decomposition of a boosted Lagrangian into a same-form part plus
 * an induced null remainder with its gauge function.
 */

#include <utility>

#include "nlag/errors.hpp"
#include "nlag/polynomial.hpp"
#include "nlag/symbol.hpp"
#include "nlag/variational.hpp"

namespace nlag {

enum class BoostDirection { to_primed, to_unprimed };

/// The relative frame velocity (symbolic v0 by default, or any expression in
/// parameters and constants) plus the direction of the transformation.
class BoostContext {
public:
    static BoostContext symbolic(BoostDirection dir = BoostDirection::to_primed) {
        return BoostContext(Polynomial::variable(Symbol::v0), dir);
    }

    static BoostContext with_velocity(Rational v,
                                      BoostDirection dir = BoostDirection::to_primed) {
        return BoostContext(Polynomial::constant(std::move(v)), dir);
    }

    static BoostContext with_velocity(Polynomial v,
                                      BoostDirection dir = BoostDirection::to_primed) {
        return BoostContext(std::move(v), dir);
    }

    const Polynomial& velocity() const { return velocity_; }
    BoostDirection direction() const { return direction_; }

    BoostContext inverse() const {
        return BoostContext(velocity_, direction_ == BoostDirection::to_primed
                                           ? BoostDirection::to_unprimed
                                           : BoostDirection::to_primed);
    }

private:
    BoostContext(Polynomial velocity, BoostDirection dir)
        : velocity_(std::move(velocity)), direction_(dir) {
        if (frame_of(velocity_) != Frame::none || velocity_.contains(Symbol::t)) {
            throw InvariantError("boost velocity must be free of dynamic symbols and t");
        }
    }

    Polynomial velocity_;
    BoostDirection direction_;
};

/// Substitutes the inverse Galilean map into L: for the unprimed -> primed
/// direction, x -> x' + v t, v -> v' + v (and the second derivative maps to
/// its primed twin, since acceleration is boost-invariant). Time is absolute.
inline Polynomial apply_boost(const Polynomial& L, const BoostContext& ctx,
                              int degree_cap = kDefaultDegreeCap) {
    const Frame frame = frame_of(L);
    if (frame == Frame::mixed) {
        throw FrameError("cannot boost a mixed-frame expression");
    }
    const Polynomial& v = ctx.velocity();
    const Polynomial vt = v * Polynomial::variable(Symbol::t);
    std::map<Symbol, Polynomial> repl;
    if (ctx.direction() == BoostDirection::to_primed) {
        if (frame == Frame::primed) {
            throw FrameError("expected an unprimed-frame expression");
        }
        repl[Symbol::x] = Polynomial::variable(Symbol::xp) + vt;
        repl[Symbol::xdot] = Polynomial::variable(Symbol::xpdot) + v;
        repl[Symbol::xddot] = Polynomial::variable(Symbol::xpddot);
    } else {
        if (frame == Frame::unprimed) {
            throw FrameError("expected a primed-frame expression");
        }
        repl[Symbol::xp] = Polynomial::variable(Symbol::x) - vt;
        repl[Symbol::xpdot] = Polynomial::variable(Symbol::xdot) - v;
        repl[Symbol::xpddot] = Polynomial::variable(Symbol::xddot);
    }
    return substitute_all(L, repl, degree_cap);
}

/// boosted(L) split as: same-form image of L (pure re-symboling) plus a null
/// remainder, which must be expressible as the total derivative of a gauge.
struct BoostDecomposition {
    Polynomial transformed;   // apply_boost(L)
    Polynomial same_form;     // L with its symbols renamed to the target frame
    Polynomial induced_null;  // transformed - same_form
    GaugeFunction induced_gauge;
};

inline BoostDecomposition decompose(const Polynomial& L, const BoostContext& ctx,
                                    int degree_cap = kDefaultDegreeCap) {
    if (L.contains(Symbol::xddot) || L.contains(Symbol::xpddot)) {
        throw Error("Lagrangian contains a second-derivative symbol");
    }
    BoostDecomposition d;
    d.transformed = apply_boost(L, ctx, degree_cap);
    d.same_form = swap_frames(L);
    d.induced_null = d.transformed - d.same_form;
    if (NullCheck check = is_null(d.induced_null); !check.null) {
        throw NotNullError(
            "boost remainder is not a null Lagrangian; Euler-Lagrange residual is " +
            to_string(check.residual));
    }
    d.induced_gauge = gauge_from_null(d.induced_null);
    return d;
}

} // namespace nlag

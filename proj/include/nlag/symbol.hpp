#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace nlag {

/// The closed algebra alphabet. The enumerator order IS the canonical symbol
/// order used by the monomial ordering and the printer: constants first, then
/// parameters, time, and the dynamic variables of both frames.
enum class Symbol : std::uint8_t {
    C0, C1, C2, C3, C4, C5, C6,
    Cconst, // reserved for the constant produced by the constancy solve
    v0, u0, x0,
    t,
    x, xdot, xddot,
    xp, xpdot, xpddot,
};

inline constexpr std::size_t kSymbolCount = 18;

enum class SymbolKind : std::uint8_t { constant, parameter, time, dynamic };

enum class Frame : std::uint8_t { none, unprimed, primed, mixed };

inline constexpr std::size_t index_of(Symbol s) { return static_cast<std::size_t>(s); }

inline constexpr Symbol symbol_at(std::size_t i) { return static_cast<Symbol>(i); }

inline constexpr SymbolKind kind(Symbol s) {
    switch (s) {
        case Symbol::C0: case Symbol::C1: case Symbol::C2: case Symbol::C3:
        case Symbol::C4: case Symbol::C5: case Symbol::C6: case Symbol::Cconst:
            return SymbolKind::constant;
        case Symbol::v0: case Symbol::u0: case Symbol::x0:
            return SymbolKind::parameter;
        case Symbol::t:
            return SymbolKind::time;
        default:
            return SymbolKind::dynamic;
    }
}

inline constexpr std::string_view name(Symbol s) {
    constexpr std::array<std::string_view, kSymbolCount> names = {
        "C0", "C1", "C2", "C3", "C4", "C5", "C6", "Cconst",
        "v0", "u0", "x0", "t", "x", "xdot", "xddot", "xp", "xpdot", "xpddot",
    };
    return names[index_of(s)];
}

inline std::optional<Symbol> symbol_from_name(std::string_view token) {
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (name(symbol_at(i)) == token) return symbol_at(i);
    }
    return std::nullopt;
}

/// Second time derivatives may appear only in Euler-Lagrange residuals.
inline constexpr bool is_second_derivative(Symbol s) {
    return s == Symbol::xddot || s == Symbol::xpddot;
}

inline constexpr bool is_unprimed_dynamic(Symbol s) {
    return s == Symbol::x || s == Symbol::xdot || s == Symbol::xddot;
}

inline constexpr bool is_primed_dynamic(Symbol s) {
    return s == Symbol::xp || s == Symbol::xpdot || s == Symbol::xpddot;
}

/// Maps a dynamic symbol to its counterpart in the other frame; identity on
/// everything else (t, parameters, constants are frame-neutral).
inline constexpr Symbol other_frame(Symbol s) {
    switch (s) {
        case Symbol::x: return Symbol::xp;
        case Symbol::xdot: return Symbol::xpdot;
        case Symbol::xddot: return Symbol::xpddot;
        case Symbol::xp: return Symbol::x;
        case Symbol::xpdot: return Symbol::xdot;
        case Symbol::xpddot: return Symbol::xddot;
        default: return s;
    }
}

struct FrameSymbols {
    Symbol position;
    Symbol velocity;
    Symbol acceleration;
};

inline constexpr FrameSymbols frame_symbols(Frame f) {
    if (f == Frame::primed) return {Symbol::xp, Symbol::xpdot, Symbol::xpddot};
    return {Symbol::x, Symbol::xdot, Symbol::xddot};
}

} // namespace nlag

#pragma once

/*
 * parse.hpp
 * ---------
 * Recursive-descent parser for the expression grammar:
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := '-' factor | base ('^' INT)?
 *   base   := RATIONAL | SYMBOL | '(' expr ')'
 *   RATIONAL := INT ('/' INT)?
 *
 * Whitespace is insignificant. Implicit multiplication is rejected.
 * Unary minus negates the whole factor, so "-x^2" means -(x^2).
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nlag/errors.hpp"
#include "nlag/polynomial.hpp"
#include "nlag/rational.hpp"
#include "nlag/symbol.hpp"

namespace nlag {

struct ParseOptions {
    int degree_cap = kDefaultDegreeCap;
    /// Second-derivative symbols are rejected by default: they belong to
    /// Euler-Lagrange residuals, never to user-supplied Lagrangians.
    bool allow_second_derivatives = false;
};

namespace detail {

enum class TokKind { end, plus, minus, star, slash, caret, lparen, rparen, integer, symbol };

struct Token {
    TokKind kind;
    std::size_t pos; // 1-based character position
    std::string text;
    Symbol symbol{};
};

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t pos = i + 1;
        switch (c) {
            case '+': out.push_back({TokKind::plus, pos, "+"}); ++i; continue;
            case '-': out.push_back({TokKind::minus, pos, "-"}); ++i; continue;
            case '*': out.push_back({TokKind::star, pos, "*"}); ++i; continue;
            case '/': out.push_back({TokKind::slash, pos, "/"}); ++i; continue;
            case '^': out.push_back({TokKind::caret, pos, "^"}); ++i; continue;
            case '(': out.push_back({TokKind::lparen, pos, "("}); ++i; continue;
            case ')': out.push_back({TokKind::rparen, pos, ")"}); ++i; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                digits += text[i++];
            }
            out.push_back({TokKind::integer, pos, digits});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                word += text[i++];
            }
            Token tok{TokKind::symbol, pos, word};
            auto sym = symbol_from_name(word);
            if (!sym) throw ParseError("unknown symbol '" + word + "'", pos);
            tok.symbol = *sym;
            out.push_back(tok);
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({TokKind::end, text.size() + 1, ""});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, ParseOptions options)
        : tokens_(std::move(tokens)), options_(options) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        if (peek().kind != TokKind::end) {
            throw ParseError("expected '*', '+', '-' or end of input (implicit "
                             "multiplication is not supported)",
                             peek().pos);
        }
        return p;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    const Token& advance() { return tokens_[cursor_++]; }
    bool accept(TokKind k) {
        if (peek().kind == k) {
            ++cursor_;
            return true;
        }
        return false;
    }

    Polynomial parse_expr() {
        Polynomial p = parse_term();
        while (true) {
            if (accept(TokKind::plus)) {
                p = p + parse_term();
            } else if (accept(TokKind::minus)) {
                p = p - parse_term();
            } else {
                return p;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (peek().kind == TokKind::star) {
            const std::size_t pos = peek().pos;
            advance();
            try {
                p = Polynomial::mul(p, parse_factor(), options_.degree_cap);
            } catch (const DegreeCapError& e) {
                throw ParseError(e.what(), pos);
            }
        }
        return p;
    }

    Polynomial parse_factor() {
        if (accept(TokKind::minus)) return -parse_factor();
        Polynomial base = parse_base();
        if (peek().kind == TokKind::caret) {
            const std::size_t pos = peek().pos;
            advance();
            const Token& tok = peek();
            if (tok.kind != TokKind::integer) {
                throw ParseError("expected integer exponent after '^'", tok.pos);
            }
            advance();
            const int exponent = small_int(tok, options_.degree_cap);
            try {
                base = pow(base, exponent, options_.degree_cap);
            } catch (const DegreeCapError& e) {
                throw ParseError(e.what(), pos);
            }
        }
        return base;
    }

    Polynomial parse_base() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokKind::integer: {
                advance();
                Integer num{tok.text};
                if (accept(TokKind::slash)) {
                    const Token& den_tok = peek();
                    if (den_tok.kind != TokKind::integer) {
                        throw ParseError("expected integer after '/'", den_tok.pos);
                    }
                    advance();
                    Integer den{den_tok.text};
                    if (den == 0) {
                        throw ParseError("zero denominator in rational literal",
                                         den_tok.pos);
                    }
                    return Polynomial::constant(Rational(num, den));
                }
                return Polynomial::constant(Rational(num));
            }
            case TokKind::symbol: {
                advance();
                if (is_second_derivative(tok.symbol) && !options_.allow_second_derivatives) {
                    throw ParseError("second-derivative symbol '" + tok.text +
                                     "' is not allowed in expressions",
                                     tok.pos);
                }
                return Polynomial::variable(tok.symbol);
            }
            case TokKind::lparen: {
                advance();
                Polynomial inner = parse_expr();
                if (!accept(TokKind::rparen)) {
                    throw ParseError("expected ')'", peek().pos);
                }
                return inner;
            }
            case TokKind::end:
                throw ParseError("unexpected end of input", tok.pos);
            default:
                throw ParseError("expected a rational, symbol or '('", tok.pos);
        }
    }

    int small_int(const Token& tok, int cap) const {
        if (tok.text.size() > 6) {
            throw ParseError("exponent " + tok.text + " exceeds degree cap " +
                             std::to_string(cap),
                             tok.pos);
        }
        const int value = std::stoi(tok.text);
        if (value > cap) {
            throw ParseError("exponent " + tok.text + " exceeds degree cap " +
                             std::to_string(cap),
                             tok.pos);
        }
        return value;
    }

    std::vector<Token> tokens_;
    ParseOptions options_;
    std::size_t cursor_ = 0;
};

} // namespace detail

/// Parses an expression into canonical form. parse(to_string(p)) == p for
/// every canonical p without second-derivative symbols.
inline Polynomial parse(std::string_view text, ParseOptions options = {}) {
    detail::Parser parser(detail::lex(text), options);
    return parser.run();
}

} // namespace nlag

#pragma once

/// Polynomial expressions in T over Q:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor | factor)*     juxtaposition multiplies
///   factor := unary ('^' natural)?
///   unary  := '-' unary | atom
///   atom   := natural | 'T' | '(' expr ')'
/// Division is only by nonzero constants, so "1/5*T" is accepted and "1/T" is not.

#include <cctype>
#include <string>
#include <string_view>

#include "adic/polynomial.hpp"

namespace adic {

namespace detail {

class expr_parser {
public:
    explicit expr_parser(std::string_view src) : src_(src) {}

    polynomial parse() {
        polynomial p = expr();
        skip();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw error(errc::parse_error, "in '" + std::string(src_) + "' at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    polynomial expr() {
        polynomial p = term();
        while (true) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else return p;
        }
    }

    static bool starts_atom(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'T' || c == '('; }

    polynomial term() {
        polynomial p = factor();
        while (true) {
            if (accept('*')) p *= factor();
            else if (accept('/')) {
                polynomial d = factor();
                if (d.is_zero()) fail("division by zero");
                if (!d.is_constant()) fail("division by a non-constant");
                p *= rational(1) / d.coeff(0);
            } else if (starts_atom(peek())) p *= factor();
            else return p;
        }
    }

    polynomial factor() {
        polynomial base = unary();
        if (accept('^')) {
            const std::size_t start = pos_;
            skip();
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
            if (digits.empty() || digits.size() > 4) {
                pos_ = start;
                fail("exponent must be a natural number below 10000");
            }
            base = base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return atom();
    }

    polynomial atom() {
        const char c = peek();
        if (c == 'T') {
            ++pos_;
            return poly_var();
        }
        if (c == '(') {
            ++pos_;
            polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
            return polynomial(rational(integer(digits)));
        }
        fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline polynomial parse_polynomial(std::string_view text) { return detail::expr_parser(text).parse(); }

} // namespace adic

/*
   Copyright 2026 the mzk authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MZK_PARSE_HPP
#define MZK_PARSE_HPP

#include <cctype>
#include <string>

#include "errors.hpp"
#include "gaussian.hpp"
#include "laurent.hpp"

namespace mzk {

namespace detail {

/// Recursive-descent parser over Laurent polynomial expressions:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/' | juxtaposition) unary)*
///   unary := ('+' | '-')* power
///   power := atom ('^' ('+'|'-')? digits)?
///   atom  := digits | 'i' | 'X' | '(' expr ')'
/// Division requires a nonzero constant divisor; negative powers require a
/// single-term base.
struct expr_parser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void bail(const std::string& what) const {
        fail(errc::parse_error, what + " at position " + std::to_string(pos));
    }

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool starts_atom() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'X' || c == '(';
    }

    bigint digits() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) bail("expected digits");
        return bigint(text.substr(start, pos - start));
    }

    long long exponent() {
        skip();
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = text[pos++] == '-';
        bigint e = digits();
        if (e > 1000000) bail("exponent too large");
        long long v = static_cast<long long>(e);
        return negative ? -v : v;
    }

    laurent atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return laurent(gaussian_rational(rational(digits())));
        if (c == 'i') {
            ++pos;
            return laurent(gaussian_rational(rational(0), rational(1)));
        }
        if (c == 'X') {
            ++pos;
            return laurent::monomial(1);
        }
        if (c == '(') {
            ++pos;
            laurent inner = expr();
            if (peek() != ')') bail("expected ')'");
            ++pos;
            return inner;
        }
        bail("expected a number, 'i', 'X', or '('");
    }

    laurent power() {
        laurent base = atom();
        if (peek() != '^') return base;
        ++pos;
        long long e = exponent();
        if (e >= 0 && base.terms().size() != 1) return base.pow(static_cast<unsigned long>(e));
        if (base.terms().size() != 1) bail("negative power of a non-monomial");
        auto [n, c] = *base.terms().begin();
        gaussian_rational one(rational(1)), coef = one;
        for (long long t = 0; t < (e < 0 ? -e : e); ++t) coef = coef * c;
        if (e < 0) coef = one / coef;
        return laurent::monomial(n * e, coef);
    }

    laurent unary() {
        bool negative = false;
        while (peek() == '+' || peek() == '-')
            if (text[pos++] == '-') negative = !negative;
        laurent base = power();
        return negative ? laurent() - base : base;
    }

    laurent term() {
        laurent acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos;
                laurent rhs = unary();
                if (rhs.is_zero()) bail("division by zero");
                if (rhs.terms().size() != 1 || rhs.terms().begin()->first != 0)
                    bail("division by a non-constant");
                acc = acc * laurent(gaussian_rational(rational(1)) / rhs.terms().begin()->second);
            } else if (starts_atom()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    laurent expr() {
        laurent acc = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos;
            laurent rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
    }
};

}  // namespace detail

inline laurent parse_laurent(const std::string& text) {
    detail::expr_parser P{text};
    if (P.peek() == '\0') P.bail("empty expression");
    laurent f = P.expr();
    if (P.peek() != '\0') P.bail("unexpected trailing input");
    return f;
}

}  // namespace mzk

#endif

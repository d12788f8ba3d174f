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

#ifndef MZK_GAUSSIAN_HPP
#define MZK_GAUSSIAN_HPP

#include <string>

#include "rational.hpp"

namespace mzk {

/// Element of Q(i): the exact coefficient field for every computation that
/// does not extract roots. Plain value type, field operations throughout.
struct gaussian_rational {
    rational re;
    rational im;

    gaussian_rational() = default;
    gaussian_rational(rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    gaussian_rational(rational r, rational i) : re(std::move(r)), im(std::move(i)) {}
    gaussian_rational(int n) : re(n) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const gaussian_rational& a, const gaussian_rational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const gaussian_rational& a, const gaussian_rational& b) { return !(a == b); }

    gaussian_rational operator-() const { return {-re, -im}; }

    friend gaussian_rational operator+(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend gaussian_rational operator-(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend gaussian_rational operator*(const gaussian_rational& a, const gaussian_rational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend gaussian_rational operator/(const gaussian_rational& a, const gaussian_rational& b) {
        if (b.is_zero()) fail(errc::invalid_value, "division by zero in Q(i)");
        rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    gaussian_rational& operator+=(const gaussian_rational& o) { return *this = *this + o; }
    gaussian_rational& operator-=(const gaussian_rational& o) { return *this = *this - o; }
    gaussian_rational& operator*=(const gaussian_rational& o) { return *this = *this * o; }
    gaussian_rational& operator/=(const gaussian_rational& o) { return *this = *this / o; }

    gaussian_rational conj() const { return {re, -im}; }

    gaussian_rational pow(unsigned long m) const {
        gaussian_rational acc(1), base = *this;
        while (m != 0) {
            if (m & 1) acc *= base;
            base *= base;
            m >>= 1;
        }
        return acc;
    }
};

inline gaussian_rational gq_i() { return {rational(0), rational(1)}; }

inline gaussian_rational conj(const gaussian_rational& g) { return g.conj(); }

/// "a", "bi" or "a+bi" with exact rational parts, e.g. "3", "-1/2i", "1+2i".
inline std::string to_string(const gaussian_rational& g) {
    if (g.im == 0) return to_string(g.re);
    std::string im = to_string(g.im) + "i";
    if (g.im == 1) im = "i";
    if (g.im == -1) im = "-i";
    if (g.re == 0) return im;
    if (g.im > 0) return to_string(g.re) + "+" + im;
    return to_string(g.re) + im;
}

}  // namespace mzk

#endif

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

#ifndef MZK_BIGCOMPLEX_HPP
#define MZK_BIGCOMPLEX_HPP

#include <string>
#include <utility>

#include "bigfloat.hpp"
#include "gaussian.hpp"

namespace mzk {

/// Complex numbers over big_float. std::complex is not usable with MPFR
/// numbers, so the handful of operations we need live here.
struct big_complex {
    big_float re;
    big_float im;

    big_complex() : re(0), im(0) {}
    big_complex(big_float r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    big_complex(big_float r, big_float i) : re(std::move(r)), im(std::move(i)) {}
    big_complex(int n) : re(n), im(0) {}  // NOLINT(google-explicit-constructor)

    friend big_complex operator+(const big_complex& a, const big_complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend big_complex operator-(const big_complex& a, const big_complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    big_complex operator-() const { return {-re, -im}; }
    friend big_complex operator*(const big_complex& a, const big_complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend big_complex operator/(const big_complex& a, const big_complex& b) {
        big_float n = b.re * b.re + b.im * b.im;
        if (n == 0) fail(errc::invalid_value, "division by exact complex zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    big_complex& operator+=(const big_complex& o) { return *this = *this + o; }
    big_complex& operator-=(const big_complex& o) { return *this = *this - o; }
    big_complex& operator*=(const big_complex& o) { return *this = *this * o; }
    big_complex& operator/=(const big_complex& o) { return *this = *this / o; }

    big_complex conj() const { return {re, -im}; }
};

inline big_complex conj(const big_complex& z) { return z.conj(); }

inline big_float abs(const big_complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

/// Argument in (-pi, pi]; 0 for the zero value.
inline big_float arg(const big_complex& z) {
    if (z.im == 0 && z.re == 0) return big_float(0);
    return atan2(z.im, z.re);
}

inline bool is_zero_within(const big_complex& z, const big_float& scale = big_float(1)) {
    return is_zero_within(abs(z), scale);
}

inline big_complex pow(const big_complex& z, unsigned long m) {
    big_complex acc(1), base = z;
    while (m != 0) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    return acc;
}

inline big_complex to_big_complex(const gaussian_rational& g) {
    return {to_big_float(g.re), to_big_float(g.im)};
}

inline std::string to_string(const big_complex& z, unsigned digits = 0) {
    if (digits == 0) digits = big_float::default_precision();
    return "(" + z.re.str(digits) + ", " + z.im.str(digits) + ")";
}

}  // namespace mzk

#endif

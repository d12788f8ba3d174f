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

#ifndef MZK_SERIES_HPP
#define MZK_SERIES_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigcomplex.hpp"
#include "bigfloat.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace mzk {

inline constexpr long ramification_cap = 64;

/// Truncated Puiseux series sum_k coeffs[k] * t^((e0+k)/p), known modulo
/// t^((e0+size)/p).  Exponents below e0/p are known to be zero; exponents at
/// or beyond the horizon (e0+size)/p are unknown.  An empty coefficient
/// vector is the zero series known up to its horizon e0/p.
struct puiseux_series {
    long p = 1;
    long e0 = 0;
    std::vector<big_complex> coeffs;

    /// Exclusive guaranteed order, as an exact rational.
    long horizon_num() const { return e0 + static_cast<long>(coeffs.size()); }
    rational horizon() const { return make_rational(horizon_num(), p); }

    bool known_zero() const {
        for (const auto& c : coeffs)
            if (!is_zero_within(c)) return false;
        return true;
    }

    /// Coefficient at exponent numerator k (over ramification p); zero below
    /// the window, unknown entries must not be queried.
    const big_complex& at_num(long k) const {
        static const big_complex zero{};
        if (k < e0 || k >= horizon_num()) return zero;
        return coeffs[static_cast<std::size_t>(k - e0)];
    }

    /// Coefficient at exact exponent q; q must be representable over p.
    big_complex at(const rational& q) const {
        rational scaled = q * p;
        if (rat_den(scaled) != 1)
            fail(errc::invalid_value, "exponent " + to_string(q) + " not on the t^(1/p) lattice");
        long k = static_cast<long>(rat_num(scaled));
        if (k >= horizon_num())
            fail(errc::invalid_value, "exponent " + to_string(q) + " beyond the guaranteed order");
        return at_num(k);
    }
};

namespace series {

/// c * t^(num/den), known through (but excluding) exponent horizon.
inline puiseux_series monomial(const big_complex& c, long num, long den, const rational& horizon) {
    if (den < 1) fail(errc::invalid_value, "ramification must be >= 1");
    puiseux_series s;
    s.p = den;
    s.e0 = num;
    rational h = horizon * den;
    if (rat_den(h) != 1) fail(errc::invalid_value, "horizon not on the t^(1/p) lattice");
    long hn = static_cast<long>(rat_num(h));
    if (hn <= num) fail(errc::invalid_value, "horizon at or below the monomial exponent");
    s.coeffs.assign(static_cast<std::size_t>(hn - num), big_complex{});
    s.coeffs[0] = c;
    return s;
}

inline puiseux_series constant(const big_complex& c, const rational& horizon) {
    return monomial(c, 0, 1, horizon);
}

inline puiseux_series zero(const rational& horizon) {
    puiseux_series s;
    rational h = horizon;
    s.p = static_cast<long>(rat_den(h));
    s.e0 = static_cast<long>(rat_num(h));
    return s;
}

/// Same series over ramification p*m.  Coefficients off the coarse lattice
/// are exactly zero for an element of k((t^(1/p))), so the horizon scales.
inline puiseux_series stretch(const puiseux_series& a, long m) {
    if (m == 1) return a;
    puiseux_series r;
    r.p = a.p * m;
    r.e0 = a.e0 * m;
    r.coeffs.assign(a.coeffs.size() * static_cast<std::size_t>(m), big_complex{});
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        r.coeffs[k * static_cast<std::size_t>(m)] = a.coeffs[k];
    return r;
}

inline long common_ramification(long pa, long pb) {
    long g = std::gcd(pa, pb);
    long l = pa / g * pb;
    if (l > ramification_cap)
        fail(errc::ramification_overflow,
             "ramification " + std::to_string(l) + " exceeds cap " + std::to_string(ramification_cap));
    return l;
}

inline void align(puiseux_series& a, puiseux_series& b) {
    long l = common_ramification(a.p, b.p);
    a = stretch(a, l / a.p);
    b = stretch(b, l / b.p);
}

/// Leading exponent of the first coefficient that is nonzero within
/// tolerance; nullopt when the series is zero through its horizon.
inline std::optional<rational> valuation(const puiseux_series& a) {
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        if (!is_zero_within(a.coeffs[k]))
            return make_rational(a.e0 + static_cast<long>(k), a.p);
    return std::nullopt;
}

/// Drops leading coefficients that are zero within tolerance; the horizon is
/// unchanged.
inline puiseux_series normalized(const puiseux_series& a) {
    std::size_t k = 0;
    while (k < a.coeffs.size() && is_zero_within(a.coeffs[k])) ++k;
    if (k == 0) return a;
    puiseux_series r;
    r.p = a.p;
    r.e0 = a.e0 + static_cast<long>(k);
    r.coeffs.assign(a.coeffs.begin() + static_cast<std::ptrdiff_t>(k), a.coeffs.end());
    return r;
}

}  // namespace series

inline puiseux_series operator+(puiseux_series a, puiseux_series b) {
    series::align(a, b);
    puiseux_series r;
    r.p = a.p;
    long h = std::min(a.horizon_num(), b.horizon_num());
    r.e0 = std::min(a.e0, b.e0);
    if (r.e0 > h) r.e0 = h;
    r.coeffs.assign(static_cast<std::size_t>(h - r.e0), big_complex{});
    for (long k = r.e0; k < h; ++k)
        r.coeffs[static_cast<std::size_t>(k - r.e0)] = a.at_num(k) + b.at_num(k);
    return r;
}

inline puiseux_series operator-(const puiseux_series& a) {
    puiseux_series r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

inline puiseux_series operator-(const puiseux_series& a, const puiseux_series& b) {
    return a + (-b);
}

inline puiseux_series operator*(const puiseux_series& A, const puiseux_series& B) {
    puiseux_series a = A, b = B;
    series::align(a, b);
    puiseux_series r;
    r.p = a.p;
    r.e0 = a.e0 + b.e0;
    long h = std::min(a.horizon_num() + b.e0, b.horizon_num() + a.e0);
    r.coeffs.assign(static_cast<std::size_t>(std::max(h - r.e0, 0L)), big_complex{});
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].re == 0 && a.coeffs[i].im == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size() && i + j < r.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

inline puiseux_series operator*(const big_complex& s, const puiseux_series& a) {
    puiseux_series r = a;
    for (auto& c : r.coeffs) c = s * c;
    return r;
}

/// 1/b for b nonzero within tolerance; the quotient keeps b's coefficient
/// count, shifted to valuation -val(b).
inline puiseux_series inverse(const puiseux_series& b0) {
    puiseux_series b = series::normalized(b0);
    if (b.coeffs.empty() || is_zero_within(b.coeffs[0]))
        fail(errc::division_by_zero_series, "inverse of a series that is zero to its horizon");
    puiseux_series r;
    r.p = b.p;
    r.e0 = -b.e0;
    r.coeffs.assign(b.coeffs.size(), big_complex{});
    // (sum b_k u^k)^-1 with b_0 the leading coefficient, u the uniformizer.
    r.coeffs[0] = big_complex(big_float(1)) / b.coeffs[0];
    for (std::size_t k = 1; k < r.coeffs.size(); ++k) {
        big_complex acc{};
        for (std::size_t j = 1; j <= k; ++j) acc += b.coeffs[j] * r.coeffs[k - j];
        r.coeffs[k] = -acc / b.coeffs[0];
    }
    return r;
}

inline puiseux_series operator/(const puiseux_series& a, const puiseux_series& b) {
    return a * inverse(b);
}

inline puiseux_series pow(const puiseux_series& a, long m) {
    if (m < 0) return pow(inverse(a), -m);
    rational h = a.horizon();
    if (h < 0) h = -h;
    // The accumulator starts as an exact 1 with a horizon generous enough
    // never to be the binding minimum in the multiply chain; rounding up
    // keeps it on the integer lattice.
    rational hh = h * rational(m + 1) + rational(1);
    bigint hc = (rat_num(hh) + rat_den(hh) - 1) / rat_den(hh);
    puiseux_series acc =
        series::constant(big_complex(big_float(1)), rational(static_cast<long>(hc)));
    puiseux_series base = a;
    while (m != 0) {
        if (m & 1) acc = acc * base;
        m >>= 1;
        if (m != 0) base = base * base;
    }
    return acc;
}

/// Term-wise d/dt; the exponent lattice shifts down by 1.
inline puiseux_series derivative(const puiseux_series& a) {
    puiseux_series r;
    r.p = a.p;
    r.e0 = a.e0 - a.p;
    r.coeffs.assign(a.coeffs.size(), big_complex{});
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        long num = a.e0 + static_cast<long>(k);
        if (num == 0) continue;  // constant term
        r.coeffs[k] = big_complex(big_float(num) / a.p) * a.coeffs[k];
    }
    return r;
}

/// Evaluates at a positive real t (used for finite-difference checks).
inline big_complex eval(const puiseux_series& a, const big_float& t) {
    if (t <= 0) fail(errc::invalid_value, "series evaluation needs t > 0");
    big_float u = a.p == 1 ? t : pow(t, big_float(1) / a.p);
    big_complex acc{};
    for (std::size_t k = a.coeffs.size(); k-- > 0;) acc = acc * big_complex(u) + a.coeffs[k];
    big_float lead = pow(u, big_float(a.e0));
    return big_complex(lead) * acc;
}

/// Largest pairwise coefficient deviation over the shared known window.
inline big_float max_deviation(const puiseux_series& A, const puiseux_series& B) {
    puiseux_series a = A, b = B;
    series::align(a, b);
    long lo = std::min(a.e0, b.e0);
    long h = std::min(a.horizon_num(), b.horizon_num());
    big_float worst(0);
    for (long k = lo; k < h; ++k) {
        big_float d = abs(a.at_num(k) - b.at_num(k));
        if (d > worst) worst = d;
    }
    return worst;
}

inline std::string to_string(const puiseux_series& a, unsigned digits = 8) {
    std::string out;
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
        if (is_zero_within(a.coeffs[k])) continue;
        if (!out.empty()) out += " + ";
        long num = a.e0 + static_cast<long>(k);
        out += to_string(a.coeffs[k], digits);
        if (num != 0) {
            out += "*t^(" + std::to_string(num);
            out += a.p == 1 ? ")" : "/" + std::to_string(a.p) + ")";
        }
    }
    if (out.empty()) out = "0";
    out += " + O(t^" + to_string(a.horizon()) + ")";
    return out;
}

}  // namespace mzk

#endif

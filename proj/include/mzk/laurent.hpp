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

#ifndef MZK_LAURENT_HPP
#define MZK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "errors.hpp"
#include "gaussian.hpp"

namespace mzk {

template <typename C>
concept ring_coefficient = requires(C a, C b) {
    { C(0) };
    { C(1) };
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a == b } -> std::convertible_to<bool>;
};

enum class support_kind { zero, constant, positive_only, negative_only, mixed };

inline const char* to_string(support_kind k) {
    switch (k) {
        case support_kind::zero: return "zero";
        case support_kind::constant: return "constant";
        case support_kind::positive_only: return "positive_only";
        case support_kind::negative_only: return "negative_only";
        case support_kind::mixed: return "mixed";
    }
    return "?";
}

/// Sparse Laurent polynomial: exponent -> coefficient, zero coefficients
/// never stored, iteration in ascending exponent order.
template <ring_coefficient C>
class laurent_poly {
public:
    using coefficient_type = C;
    using exponent_type = std::int64_t;
    using term_map = std::map<exponent_type, C>;

    laurent_poly() = default;
    explicit laurent_poly(const C& constant) {
        if (!(constant == C(0))) terms_[0] = constant;
    }

    static laurent_poly monomial(exponent_type e, const C& coef = C(1)) {
        laurent_poly f;
        if (!(coef == C(0))) f.terms_[e] = coef;
        return f;
    }
    static laurent_poly variable() { return monomial(1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    /// Missing exponents read as zero.
    C coefficient(exponent_type e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void set_coefficient(exponent_type e, const C& c) {
        if (c == C(0))
            terms_.erase(e);
        else
            terms_[e] = c;
    }

    exponent_type deg_minus() const {
        if (terms_.empty()) fail(errc::degree_of_zero, "deg_- of the zero polynomial");
        return terms_.begin()->first;
    }
    exponent_type deg_plus() const {
        if (terms_.empty()) fail(errc::degree_of_zero, "deg_+ of the zero polynomial");
        return terms_.rbegin()->first;
    }
    std::pair<exponent_type, exponent_type> deg_bounds() const { return {deg_minus(), deg_plus()}; }

    support_kind support() const {
        if (terms_.empty()) return support_kind::zero;
        auto lo = deg_minus();
        auto hi = deg_plus();
        if (lo == 0 && hi == 0) return support_kind::constant;
        if (lo >= 0) return support_kind::positive_only;
        if (hi <= 0) return support_kind::negative_only;
        return support_kind::mixed;
    }

    friend bool operator==(const laurent_poly& a, const laurent_poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const laurent_poly& a, const laurent_poly& b) { return !(a == b); }

    laurent_poly operator-() const {
        laurent_poly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend laurent_poly operator+(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly r = a;
        for (const auto& [e, c] : b.terms_) {
            C s = r.coefficient(e) + c;
            r.set_coefficient(e, s);
        }
        return r;
    }
    friend laurent_poly operator-(const laurent_poly& a, const laurent_poly& b) { return a + (-b); }

    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
        laurent_poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                exponent_type e = ea + eb;
                C s = r.coefficient(e) + ca * cb;
                r.set_coefficient(e, s);
            }
        return r;
    }

    friend laurent_poly operator*(const C& s, const laurent_poly& f) {
        laurent_poly r;
        for (const auto& [e, c] : f.terms_) {
            C v = s * c;
            if (!(v == C(0))) r.terms_[e] = v;
        }
        return r;
    }

    laurent_poly& operator+=(const laurent_poly& o) { return *this = *this + o; }
    laurent_poly& operator-=(const laurent_poly& o) { return *this = *this - o; }
    laurent_poly& operator*=(const laurent_poly& o) { return *this = *this * o; }

    laurent_poly pow(unsigned long m) const {
        laurent_poly acc(C(1)), base = *this;
        while (m != 0) {
            if (m & 1) acc *= base;
            base *= base;
            m >>= 1;
        }
        return acc;
    }

    /// Formal derivative d/dX (exponents may be negative).
    laurent_poly derivative() const {
        laurent_poly r;
        for (const auto& [e, c] : terms_) {
            if (e == 0) continue;
            C v = mul_by_int(c, e);
            if (!(v == C(0))) r.terms_[e - 1] = v;
        }
        return r;
    }

private:
    static C mul_by_int(const C& c, exponent_type n) {
        // Exponents stay tiny in practice; build n*c by doubling.
        bool neg = n < 0;
        unsigned long long k = neg ? static_cast<unsigned long long>(-(n + 1)) + 1ULL
                                   : static_cast<unsigned long long>(n);
        C acc(0), base = c;
        while (k != 0) {
            if (k & 1) acc = acc + base;
            base = base + base;
            k >>= 1;
        }
        return neg ? -acc : acc;
    }

    term_map terms_;
};

using laurent = laurent_poly<gaussian_rational>;

/// Laurent monomial X^e as text, with coefficient.
template <ring_coefficient C>
std::string to_string(const laurent_poly<C>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        std::string coef = to_string(c);
        bool needs_parens = coef.find('+') != std::string::npos ||
                            coef.find('-', 1) != std::string::npos;
        if (!out.empty()) {
            if (!coef.empty() && coef[0] == '-' && !needs_parens) {
                out += " - ";
                coef = coef.substr(1);
            } else {
                out += " + ";
            }
        }
        if (needs_parens) coef = "(" + coef + ")";
        if (e == 0) {
            out += coef;
        } else {
            if (coef != "1") out += coef == "-1" ? "-" : coef;
            out += "X";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace mzk

#endif

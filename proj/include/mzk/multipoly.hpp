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

#ifndef MZK_MULTIPOLY_HPP
#define MZK_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gaussian.hpp"

namespace mzk {

/// Sparse polynomial in X_1..X_n with non-negative exponents, Gaussian
/// rational coefficients, zero coefficients never stored.
class multi_poly {
public:
    using exponents = std::vector<std::uint64_t>;
    using term_map = std::map<exponents, gaussian_rational>;

    explicit multi_poly(std::size_t arity) : arity_(arity) {
        if (arity_ < 1) fail(errc::invalid_value, "multi_poly needs arity >= 1");
    }

    static multi_poly monomial(std::size_t arity, exponents e,
                               gaussian_rational c = gaussian_rational(rational(1))) {
        multi_poly f(arity);
        f.set_coefficient(std::move(e), c);
        return f;
    }
    /// X_{i+1} as a polynomial of the given arity (i is zero-based).
    static multi_poly variable(std::size_t arity, std::size_t i) {
        if (i >= arity) fail(errc::invalid_value, "variable index out of range");
        exponents e(arity, 0);
        e[i] = 1;
        return monomial(arity, std::move(e));
    }
    static multi_poly one(std::size_t arity) {
        return monomial(arity, exponents(arity, 0));
    }

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const term_map& terms() const { return terms_; }

    gaussian_rational coefficient(const exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? gaussian_rational() : it->second;
    }

    void set_coefficient(exponents e, const gaussian_rational& c) {
        if (e.size() != arity_) fail(errc::invalid_value, "exponent vector length != arity");
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[std::move(e)] = c;
    }

    friend bool operator==(const multi_poly& a, const multi_poly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    friend multi_poly operator+(const multi_poly& a, const multi_poly& b) {
        check_arity(a, b);
        multi_poly r = a;
        for (const auto& [e, c] : b.terms_) r.set_coefficient(e, r.coefficient(e) + c);
        return r;
    }

    friend multi_poly operator*(const multi_poly& a, const multi_poly& b) {
        check_arity(a, b);
        multi_poly r(a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                exponents e(a.arity_);
                for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                gaussian_rational s = r.coefficient(e) + ca * cb;
                r.set_coefficient(std::move(e), s);
            }
        return r;
    }

    multi_poly pow(unsigned long m) const {
        multi_poly acc = one(arity_), base = *this;
        while (m != 0) {
            if (m & 1) acc = acc * base;
            base = base * base;
            m >>= 1;
        }
        return acc;
    }

private:
    static void check_arity(const multi_poly& a, const multi_poly& b) {
        if (a.arity_ != b.arity_) fail(errc::domain_mismatch, "arity mismatch");
    }

    std::size_t arity_;
    term_map terms_;
};

inline std::uint64_t total_degree(const multi_poly::exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t(0));
}

/// One conjunct of a rule's guard.
struct multi_constraint {
    enum class kind { exponent_eq, exponent_ge, total_degree_ge };
    kind k;
    std::size_t index = 0;  // coordinate, zero-based; unused for total_degree_ge
    std::uint64_t bound = 0;

    bool matches(const multi_poly::exponents& e) const {
        switch (k) {
            case kind::exponent_eq: return e[index] == bound;
            case kind::exponent_ge: return e[index] >= bound;
            case kind::total_degree_ge: return total_degree(e) >= bound;
        }
        return false;
    }
};

struct multi_rule {
    std::vector<multi_constraint> constraints;  // conjunction; empty matches everything
    gaussian_rational value;
};

/// Rule-table functional on k[X_1..X_n]: the value on a monomial is the value
/// of the first matching rule, or the default value when none matches.
class multi_rules {
public:
    multi_rules(std::size_t arity, std::vector<multi_rule> rules,
                gaussian_rational default_value = gaussian_rational())
        : arity_(arity), rules_(std::move(rules)), default_(std::move(default_value)) {
        if (arity_ < 1) fail(errc::invalid_value, "multi_rules needs arity >= 1");
        for (const auto& rule : rules_)
            for (const auto& con : rule.constraints)
                if (con.k != multi_constraint::kind::total_degree_ge && con.index >= arity_)
                    fail(errc::invalid_value, "constraint coordinate out of range");
    }

    std::size_t arity() const { return arity_; }
    const std::vector<multi_rule>& rules() const { return rules_; }
    const gaussian_rational& default_value() const { return default_; }

    gaussian_rational value_on_monomial(const multi_poly::exponents& e) const {
        if (e.size() != arity_) fail(errc::domain_mismatch, "exponent vector length != arity");
        for (const auto& rule : rules_) {
            bool all = true;
            for (const auto& con : rule.constraints)
                if (!con.matches(e)) {
                    all = false;
                    break;
                }
            if (all) return rule.value;
        }
        return default_;
    }

private:
    std::size_t arity_;
    std::vector<multi_rule> rules_;
    gaussian_rational default_;
};

inline gaussian_rational apply_multi(const multi_rules& Lm, const multi_poly& f) {
    if (Lm.arity() != f.arity()) fail(errc::domain_mismatch, "functional/polynomial arity mismatch");
    gaussian_rational acc;
    for (const auto& [e, c] : f.terms()) acc = acc + c * Lm.value_on_monomial(e);
    return acc;
}

/// The two-variable functional valuing a monomial X1^i X2^j at 1 when i = 1
/// or i = j = 0, and at 0 otherwise.
inline multi_rules counterexample_rules() {
    gaussian_rational one(rational(1));
    std::vector<multi_rule> rules;
    rules.push_back({{{multi_constraint::kind::exponent_eq, 0, 1}}, one});
    rules.push_back({{{multi_constraint::kind::exponent_eq, 0, 0},
                      {multi_constraint::kind::exponent_eq, 1, 0}},
                     one});
    return multi_rules(2, std::move(rules));
}

}  // namespace mzk

#endif

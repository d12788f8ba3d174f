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

#ifndef MZK_MZ_HPP
#define MZK_MZ_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "functional.hpp"
#include "laurent.hpp"
#include "multipoly.hpp"

namespace mzk {

enum class mz_reason { L1_nonzero, L1_zero_with_witness };

/// Witness that Ker L is not a Mathieu-Zhao space: f lies in the radical
/// (every power is annihilated) yet L(g f^m) != 0 for every m >= 1.
template <typename Poly>
struct mz_witness {
    Poly f;
    Poly g;
    long m = 1;
};

template <typename Poly>
struct mz_verdict {
    bool is_mz = false;
    mz_reason reason = mz_reason::L1_nonzero;
    std::optional<mz_witness<Poly>> witness;
};

/// Ker L is a Mathieu-Zhao space iff L(1) != 0; otherwise f = 1 together
/// with any monomial X^k valued nonzero by L witnesses the failure.
inline mz_verdict<laurent> decide_mz(const functional& L) {
    mz_verdict<laurent> v;
    v.is_mz = !L.value_at(0).is_zero();
    v.reason = v.is_mz ? mz_reason::L1_nonzero : mz_reason::L1_zero_with_witness;
    if (!v.is_mz) {
        for (const auto& [k, c] : L.window()) {
            if (c.is_zero()) continue;
            v.witness = mz_witness<laurent>{laurent(gaussian_rational(rational(1))),
                                            laurent::monomial(k), 1};
            break;
        }
    }
    return v;
}

enum class radical_status { in_radical, not_in_radical, inconclusive };

inline const char* to_string(radical_status s) {
    switch (s) {
        case radical_status::in_radical: return "InRadical";
        case radical_status::not_in_radical: return "NotInRadical";
        case radical_status::inconclusive: return "Inconclusive";
    }
    return "?";
}

struct radical_cert {
    radical_status status = radical_status::inconclusive;
    bool certified = false;           // degree certificate covers all remaining m
    long m = 0;                       // first m with L(f^m) != 0, when not_in_radical
    gaussian_rational value;          // L(f^m) at that m
    long m_max = 0;                   // scan bound, when inconclusive
    std::pair<long, long> checked_range{0, -1};  // inclusive m range evaluated
};

/// Decides whether every positive power of f is annihilated by L.
///
/// When all exponents of f have the same sign and are bounded away from 0
/// (deg_- >= 1 or deg_+ <= -1), exponents of f^m escape the window once
/// m >= N, so checking m = 1..N-1 decides the question.  Otherwise powers
/// can keep hitting the window and only a bounded scan is possible.
inline radical_cert radical_membership(const functional& L, const laurent& f, long m_max) {
    if (m_max < 1) fail(errc::invalid_value, "radical_membership needs mMax >= 1");
    radical_cert cert;
    if (f.is_zero()) {
        cert.status = radical_status::in_radical;
        cert.certified = true;
        return cert;
    }
    auto [lo, hi] = f.deg_bounds();
    bool escapes = (lo >= 1) || (hi <= -1);
    long scan_to = escapes ? static_cast<long>(L.window_size()) - 1 : m_max;
    laurent fm(gaussian_rational(rational(1)));
    cert.checked_range = {1, scan_to};
    for (long m = 1; m <= scan_to; ++m) {
        fm *= f;
        gaussian_rational v = apply(L, fm);
        if (!v.is_zero()) {
            cert.status = radical_status::not_in_radical;
            cert.m = m;
            cert.value = v;
            cert.checked_range = {1, m};
            return cert;
        }
    }
    if (escapes) {
        cert.status = radical_status::in_radical;
        cert.certified = true;
    } else {
        cert.status = radical_status::inconclusive;
        cert.m_max = m_max;
    }
    return cert;
}

enum class sr_side { positive, negative };

inline const char* to_string(sr_side s) { return s == sr_side::positive ? "positive" : "negative"; }

struct sr_bound_result {
    long bound = 0;  // M0: L(g f^m) = 0 for every m >= M0
    sr_side side = sr_side::positive;
    std::pair<long, long> verified_range{0, -1};
};

/// Bound M0 with L(g f^m) = 0 for all m >= M0, from the degree argument:
/// exponents of g f^m drift monotonically out of the window.
inline sr_bound_result sr_bound(const functional& L, const laurent& f, const laurent& g) {
    if (g.is_zero()) fail(errc::invalid_value, "sr_bound needs g != 0");
    if (f.is_zero()) fail(errc::unsupported_support, "sr_bound needs one-sided f, got zero");
    auto [flo, fhi] = f.deg_bounds();
    sr_bound_result r;
    long N = static_cast<long>(L.window_size());
    if (flo >= 1) {
        r.side = sr_side::positive;
        r.bound = N - static_cast<long>(g.deg_minus());
    } else if (fhi <= -1) {
        r.side = sr_side::negative;
        r.bound = N + static_cast<long>(g.deg_plus());
    } else {
        fail(errc::unsupported_support,
             "sr_bound needs f with deg_- >= 1 or deg_+ <= -1, got support class " +
                 std::string(to_string(f.support())));
    }
    long start = r.bound < 0 ? 0 : r.bound;
    laurent fm = f.pow(static_cast<unsigned long>(start));
    for (long m = start; m <= start + 4; ++m) {
        if (!apply(L, g * fm).is_zero())
            fail(errc::internal_contradiction,
                 "degree bound violated at m=" + std::to_string(m));
        fm *= f;
    }
    r.verified_range = {start, start + 4};
    return r;
}

struct radical_sample_report {
    laurent f;
    bool in_ideal_X = false;  // f in X k[X], i.e. zero constant term
    radical_cert cert;
    bool consistent = false;
};

struct radical_x_report {
    std::vector<radical_sample_report> samples;
    bool all_consistent = true;
    long inconclusive = 0;
};

/// Checks sampled polynomials against "the radical of Ker L is the ideal (X)"
/// for a polynomial functional with L(1) != 0.  Samples inside X k[X] are
/// certified members (exponents of f^m escape the window for m >= N); samples
/// with nonzero constant term are probed for a power outside Ker L.
inline radical_x_report verify_radical_is_X(const functional& L,
                                            const std::vector<laurent>& samples, long m_max) {
    if (L.domain() != domain_tag::poly)
        fail(errc::domain_mismatch, "verify_radical_is_X needs a polynomial functional");
    if (L.value_at(0).is_zero())
        fail(errc::invalid_value, "verify_radical_is_X needs L(1) != 0");
    radical_x_report report;
    long N = static_cast<long>(L.window_size());
    for (const auto& f : samples) {
        radical_sample_report entry;
        entry.f = f;
        entry.in_ideal_X = f.coefficient(0).is_zero();
        if (entry.in_ideal_X) {
            // Member of (X): for m >= N every exponent of f^m is >= N.
            // Spot-check the certificate on the first few covered powers.
            entry.cert.status = radical_status::in_radical;
            entry.cert.certified = true;
            if (!f.is_zero()) {
                laurent fm = f.pow(static_cast<unsigned long>(N));
                for (long m = N; m <= N + 2; ++m) {
                    if (!apply(L, fm).is_zero())
                        fail(errc::internal_contradiction,
                             "window escape violated at m=" + std::to_string(m));
                    fm *= f;
                }
                entry.cert.checked_range = {N, N + 2};
            }
            entry.consistent = true;
        } else {
            entry.cert = radical_membership(L, f, m_max);
            entry.consistent = entry.cert.status != radical_status::in_radical;
            if (entry.cert.status == radical_status::inconclusive) ++report.inconclusive;
        }
        report.all_consistent = report.all_consistent && entry.consistent;
        report.samples.push_back(std::move(entry));
    }
    return report;
}

namespace detail {

struct rule_span {
    bool satisfiable = true;
    bool degree_bounded = false;
    std::uint64_t max_degree = 0;
    multi_poly::exponents pinned;  // the unique matching monomial, when bounded
};

/// Over-approximates the set of monomials a rule guard can match.  The guard
/// bounds total degree from above only when every coordinate carries an
/// equality constraint; any free coordinate admits arbitrarily large degrees.
inline rule_span analyze_rule(const multi_rule& rule, std::size_t arity) {
    rule_span span;
    std::vector<std::optional<std::uint64_t>> eq(arity);
    std::vector<std::uint64_t> ge(arity, 0);
    std::uint64_t td_ge = 0;
    for (const auto& con : rule.constraints) {
        switch (con.k) {
            case multi_constraint::kind::exponent_eq:
                if (eq[con.index] && *eq[con.index] != con.bound) span.satisfiable = false;
                eq[con.index] = con.bound;
                break;
            case multi_constraint::kind::exponent_ge:
                if (con.bound > ge[con.index]) ge[con.index] = con.bound;
                break;
            case multi_constraint::kind::total_degree_ge:
                if (con.bound > td_ge) td_ge = con.bound;
                break;
        }
    }
    bool all_pinned = true;
    std::uint64_t degree = 0;
    span.pinned.assign(arity, 0);
    for (std::size_t i = 0; i < arity; ++i) {
        if (!eq[i]) {
            all_pinned = false;
            continue;
        }
        if (ge[i] > *eq[i]) span.satisfiable = false;
        span.pinned[i] = *eq[i];
        degree += *eq[i];
    }
    if (all_pinned) {
        span.degree_bounded = true;
        span.max_degree = degree;
        if (td_ge > degree) span.satisfiable = false;
    } else {
        span.pinned.clear();
    }
    return span;
}

}  // namespace detail

/// Structural certificate that every monomial of total degree >= N is valued
/// zero by the rule table.  Returns an explanation when uncertifiable.
inline std::optional<std::string> multi_hypothesis_violation(const multi_rules& Lm,
                                                             std::uint64_t N) {
    std::size_t idx = 0;
    for (const auto& rule : Lm.rules()) {
        ++idx;
        if (rule.value.is_zero()) continue;
        auto span = detail::analyze_rule(rule, Lm.arity());
        if (!span.satisfiable) continue;
        if (!span.degree_bounded)
            return "rule " + std::to_string(idx) +
                   " assigns a nonzero value to monomials of unbounded total degree";
        if (span.max_degree >= N)
            return "rule " + std::to_string(idx) + " assigns a nonzero value at total degree " +
                   std::to_string(span.max_degree) + " >= " + std::to_string(N);
    }
    if (!Lm.default_value().is_zero())
        return "nonzero default value matches monomials of every total degree";
    return std::nullopt;
}

/// Mathieu-Zhao decision for a rule-table functional on k[X_1..X_n] under the
/// hypothesis that every monomial of total degree >= N is annihilated.  The
/// hypothesis is certified structurally from the rule list first.
inline mz_verdict<multi_poly> decide_mz_multi(const multi_rules& Lm, std::uint64_t N) {
    if (auto why = multi_hypothesis_violation(Lm, N))
        fail(errc::hypothesis_not_satisfied, *why);
    mz_verdict<multi_poly> v;
    multi_poly::exponents zero(Lm.arity(), 0);
    v.is_mz = !Lm.value_on_monomial(zero).is_zero();
    v.reason = v.is_mz ? mz_reason::L1_nonzero : mz_reason::L1_zero_with_witness;
    if (!v.is_mz) {
        for (const auto& rule : Lm.rules()) {
            if (rule.value.is_zero()) continue;
            auto span = detail::analyze_rule(rule, Lm.arity());
            if (!span.satisfiable || !span.degree_bounded) continue;
            if (Lm.value_on_monomial(span.pinned).is_zero()) continue;  // shadowed
            v.witness = mz_witness<multi_poly>{multi_poly::one(Lm.arity()),
                                               multi_poly::monomial(Lm.arity(), span.pinned), 1};
            break;
        }
        if (!v.witness) fail(errc::invalid_value, "rule table values every monomial at zero");
    }
    return v;
}

struct multi_witness_result {
    multi_poly f;
    multi_poly g;
    std::vector<long> failing_m;  // every m in 1..mMax has L(g f^m) != 0
};

/// Searches candidate pairs for (f, g) with every power f^m annihilated but
/// no product g f^m annihilated, for m = 1..mMax.
inline std::optional<multi_witness_result> not_mz_witness_multi(
    const multi_rules& Lm, const std::vector<multi_poly>& f_candidates,
    const std::vector<multi_poly>& g_candidates, long m_max) {
    if (m_max < 1) return std::nullopt;
    for (const auto& f : f_candidates) {
        bool radical = true;
        {
            multi_poly fm = multi_poly::one(f.arity());
            for (long m = 1; m <= m_max; ++m) {
                fm = fm * f;
                if (!apply_multi(Lm, fm).is_zero()) {
                    radical = false;
                    break;
                }
            }
        }
        if (!radical) continue;
        for (const auto& g : g_candidates) {
            multi_poly fm = multi_poly::one(f.arity());
            std::vector<long> failing;
            bool all = true;
            for (long m = 1; m <= m_max; ++m) {
                fm = fm * f;
                if (apply_multi(Lm, g * fm).is_zero()) {
                    all = false;
                    break;
                }
                failing.push_back(m);
            }
            if (all) return multi_witness_result{f, g, std::move(failing)};
        }
    }
    return std::nullopt;
}

}  // namespace mzk

#endif

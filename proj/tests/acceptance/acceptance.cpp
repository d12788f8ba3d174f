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

// End-to-end acceptance checks.  Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero when any criterion fails.  Wherever a value
// has an independent derivation (multinomial expansion, Catalan recurrence,
// polynomial reconstruction), the oracle is computed here from scratch rather
// than trusted from the engine under test.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <mzk/mzk.hpp>

namespace {

using namespace mzk;
using clock_type = std::chrono::steady_clock;

int g_failures = 0;

struct criterion {
    std::string label;
    std::vector<std::string> problems;
    void check(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

void run(int number, const std::string& label, const std::function<void(criterion&)>& body) {
    criterion c;
    c.label = label;
    try {
        body(c);
    } catch (const error& e) {
        c.problems.push_back(std::string("unexpected error ") + errc_name(e.code()) + ": " +
                             e.what());
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("unexpected exception: ") + e.what());
    }
    if (c.problems.empty()) {
        std::cout << "PASS " << number << " " << label << "\n";
    } else {
        ++g_failures;
        std::cout << "FAIL " << number << " " << label << ": " << c.problems.front();
        if (c.problems.size() > 1)
            std::cout << " (and " << c.problems.size() - 1 << " more)";
        std::cout << "\n";
    }
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

rational random_rational(std::mt19937_64& rng, bool nonzero = false) {
    long num = static_cast<long>(rng() % 19) - 9;
    if (nonzero && num == 0) num = 1 + static_cast<long>(rng() % 9);
    long den = 1 + static_cast<long>(rng() % 4);
    return make_rational(bigint(num), bigint(den));
}

gaussian_rational random_gaussian(std::mt19937_64& rng, bool nonzero = false) {
    gaussian_rational g(random_rational(rng), random_rational(rng));
    if (nonzero && g.is_zero()) g = gaussian_rational(rational(1), random_rational(rng));
    return g;
}

big_float tol(const char* s) { return big_float(s); }

/// Multinomial oracle: the coefficient of X^0 in f^m, expanded term by term
/// with exact factorial multinomials.  Independent of laurent_poly::pow.
gaussian_rational constant_of_power_oracle(const laurent& f, long m) {
    std::vector<long> exps;
    std::vector<gaussian_rational> cofs;
    for (const auto& [e, c] : f.terms()) {
        exps.push_back(e);
        cofs.push_back(c);
    }
    std::vector<bigint> factorial(static_cast<std::size_t>(m) + 1);
    factorial[0] = 1;
    for (long i = 1; i <= m; ++i)
        factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i - 1)] * i;
    gaussian_rational total;
    std::vector<long> parts(exps.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i + 1 == parts.size()) {
            parts[i] = left;
            long degree = 0;
            for (std::size_t k = 0; k < parts.size(); ++k) degree += parts[k] * exps[k];
            if (degree != 0) return;
            bigint denom(1);
            for (long part : parts) denom *= factorial[static_cast<std::size_t>(part)];
            gaussian_rational term(
                make_rational(factorial[static_cast<std::size_t>(m)], denom));
            for (std::size_t k = 0; k < parts.size(); ++k)
                for (long rep = 0; rep < parts[k]; ++rep) term = term * cofs[k];
            total = total + term;
            return;
        }
        for (long take = 0; take <= left; ++take) {
            parts[i] = take;
            rec(i + 1, left - take);
        }
    };
    if (!exps.empty()) rec(0, m);
    return total;
}

/// Coefficient of t^(num/den) in a Puiseux series, zero when the slot is not
/// on the series lattice.
big_complex coeff_at(const puiseux_series& a, long num, long den = 1) {
    if ((num * a.p) % den != 0) return big_complex(0);
    long scaled = (num * a.p) / den;
    long idx = scaled - a.e0;
    if (idx < 0 || idx >= static_cast<long>(a.coeffs.size())) return big_complex(0);
    return a.coeffs[static_cast<std::size_t>(idx)];
}

functional random_functional(std::mt19937_64& rng, bool force_c0_zero) {
    domain_tag dom = (rng() & 1) ? domain_tag::laurent : domain_tag::poly;
    long N = force_c0_zero ? 2 + static_cast<long>(rng() % 7)
                           : 1 + static_cast<long>(rng() % 8);
    long lo = dom == domain_tag::poly ? 0 : -(N - 1);
    functional::window_map w;
    for (long n = lo; n <= N - 1; ++n)
        if (rng() % 3 == 0) w[n] = random_gaussian(rng);
    if (force_c0_zero)
        w.erase(0);
    else if (rng() % 2 == 0)
        w[0] = random_gaussian(rng, true);
    bool nontrivial = false;
    for (const auto& [n, c] : w) nontrivial = nontrivial || !c.is_zero();
    if (!nontrivial) {
        long n = force_c0_zero ? 1 + static_cast<long>(rng() % (N - 1)) : 0;
        w[n] = random_gaussian(rng, true);
    }
    return functional(dom, N, w);
}

// Criterion 1: the kernel verdict matches the constant-window criterion, and
// every negative verdict ships a witness that provably escapes the kernel.
void criterion_mz_decision(criterion& c) {
    auto t0 = clock_type::now();
    std::mt19937_64 rng(20260818);
    for (int i = 0; i < 200; ++i) {
        functional L = random_functional(rng, i % 2 == 1);
        gaussian_rational c0;
        for (const auto& [n, v] : L.window())
            if (n == 0) c0 = v;
        mz_verdict<laurent> v = decide_mz(L);
        c.check(v.is_mz == !c0.is_zero(), "verdict disagrees with c0 on instance " +
                                              std::to_string(i));
        if (!v.is_mz) {
            if (!v.witness) {
                c.check(false, "missing witness on instance " + std::to_string(i));
                continue;
            }
            laurent fm(gaussian_rational(rational(1)));
            for (long m = 1; m <= 20; ++m) {
                fm = fm * v.witness->f;
                c.check(!apply(L, v.witness->g * fm).is_zero(),
                        "witness annihilated at m = " + std::to_string(m));
            }
        }
    }
    double dt = seconds_since(t0);
    c.check(dt < 5.0, "runtime " + std::to_string(dt) + "s exceeds 5s");
}

// Criterion 2: first nonzero power of the constant-term functional, checked
// against the independent multinomial expansion.
void criterion_power_witnesses(criterion& c) {
    auto t0 = clock_type::now();
    functional L = constant_term_functional();
    laurent f1 = parse_laurent("X + X^-1");
    radical_cert r1 = radical_membership(L, f1, 64);
    c.check(r1.status == radical_status::not_in_radical, "X + X^-1 not flagged");
    c.check(r1.m == 2, "X + X^-1 witness m != 2");
    c.check(r1.value == constant_of_power_oracle(f1, 2), "X + X^-1 value vs oracle");

    laurent f2 = parse_laurent("X^2 + X^-3");
    radical_cert r2 = radical_membership(L, f2, 64);
    c.check(r2.status == radical_status::not_in_radical, "X^2 + X^-3 not flagged");
    c.check(r2.m == 5, "X^2 + X^-3 witness m != 5");
    c.check(r2.value == gaussian_rational(rational(10)), "X^2 + X^-3 value != 10");
    c.check(r2.value == constant_of_power_oracle(f2, 5), "X^2 + X^-3 value vs oracle");
    for (long m = 1; m < 5; ++m)
        c.check(constant_of_power_oracle(f2, m).is_zero(),
                "oracle nonzero below the witness at m = " + std::to_string(m));
    double dt = seconds_since(t0);
    c.check(dt < 1.0, "runtime " + std::to_string(dt) + "s exceeds 1s");
}

// Criterion 3: once f lives in X k[X], multiplying by g and raising past
// m = N - deg_- g lands outside the window, exactly.
void criterion_sr_bound(criterion& c) {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 50; ++i) {
        long N = 1 + static_cast<long>(rng() % 6);
        functional::window_map w;
        for (long n = -(N - 1); n <= N - 1; ++n)
            if (rng() % 2 == 0) w[n] = random_gaussian(rng);
        w[0] = random_gaussian(rng, true);
        functional L(domain_tag::laurent, N, w);

        laurent f;
        long fdeg = 1 + static_cast<long>(rng() % 4);
        for (long e = 1; e <= fdeg; ++e)
            if (e == fdeg || rng() % 2 == 0) f.set_coefficient(e, random_gaussian(rng, e == fdeg));
        laurent g;
        long glo = -3 + static_cast<long>(rng() % 4);
        g.set_coefficient(glo, random_gaussian(rng, true));
        for (long e = glo + 1; e <= glo + 3; ++e)
            if (rng() % 2 == 0) g.set_coefficient(e, random_gaussian(rng));

        long M0 = N - g.deg_minus();
        sr_bound_result sr = sr_bound(L, f, g);
        c.check(sr.bound == M0, "reported bound differs from N - deg_- g on instance " +
                                    std::to_string(i));
        laurent fm = f.pow(static_cast<unsigned long>(std::max<long>(M0, 0)));
        for (long m = std::max<long>(M0, 0); m <= M0 + 20; ++m) {
            c.check(apply(L, g * fm).is_zero(),
                    "L(g f^m) != 0 at m = " + std::to_string(m) + " on instance " +
                        std::to_string(i));
            fm = fm * f;
        }
    }
}

// Criterion 4: residues recombine to the numerator, exactly over Q(i).
void criterion_pfd_reconstruction(criterion& c) {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 50; ++i) {
        std::size_t n = 1 + rng() % 6;
        std::vector<gaussian_rational> roots;
        while (roots.size() < n) {
            gaussian_rational cand = random_gaussian(rng);
            bool fresh = true;
            for (const auto& r : roots) fresh = fresh && !(r == cand);
            if (fresh) roots.push_back(cand);
        }
        std::vector<gaussian_rational> V(1 + (n > 1 ? rng() % (n - 1) : 0));
        for (auto& v : V) v = random_gaussian(rng);
        if (V.back().is_zero()) V.back() = gaussian_rational(rational(1));
        gaussian_rational alpha = random_gaussian(rng, true);

        pfd_coefficients<gaussian_rational> A = pfd(V, roots, alpha);
        // Reconstruct sum_i A_i prod_{k != i} (X - a_k) coefficientwise.
        std::vector<gaussian_rational> sum(n, gaussian_rational());
        for (std::size_t idx = 0; idx < n; ++idx) {
            std::vector<gaussian_rational> prod{gaussian_rational(rational(1))};
            for (std::size_t k = 0; k < n; ++k) {
                if (k == idx) continue;
                std::vector<gaussian_rational> next(prod.size() + 1, gaussian_rational());
                for (std::size_t d = 0; d < prod.size(); ++d) {
                    next[d + 1] = next[d + 1] + prod[d];
                    next[d] = next[d] - prod[d] * roots[k];
                }
                prod = std::move(next);
            }
            for (std::size_t d = 0; d < prod.size(); ++d)
                sum[d] = sum[d] + A.a[idx] * prod[d];
        }
        for (std::size_t d = 0; d < n; ++d) {
            gaussian_rational want = d < V.size() ? V[d] / alpha : gaussian_rational();
            c.check(sum[d] == want, "coefficient " + std::to_string(d) +
                                        " mismatches on instance " + std::to_string(i));
        }
    }
}

// Criterion 5: the positive branch of U for f = X + X^-1 carries the Catalan
// numbers, reproduced here by the convolution recurrence.
void criterion_catalan_branch(criterion& c) {
    precision_guard guard(192);
    laurent f = parse_laurent("X + X^-1");
    u_construction U = build_U(f);
    branch_set B = factor_branches(U, rational(13));
    classify_branches(B, U);
    c.check(B.s_plus.size() == 1, "expected a single positive branch");
    if (B.s_plus.size() != 1) return;
    const puiseux_series& a = B.branches[B.s_plus[0]];

    std::vector<rational> catalan{rational(1)};
    for (int k = 0; k < 6; ++k) {
        rational next(0);
        for (int j = 0; j <= k; ++j)
            next = next + catalan[static_cast<std::size_t>(j)] *
                              catalan[static_cast<std::size_t>(k - j)];
        catalan.push_back(next);
    }
    big_float eps = tol("1e-20");
    for (int k = 0; k <= 5; ++k) {
        big_complex got = coeff_at(a, 2 * k + 1);
        big_complex want = to_big_complex(gaussian_rational(catalan[static_cast<std::size_t>(k)]));
        c.check(abs(got - want) <= eps, "z^" + std::to_string(2 * k + 1) + " coefficient");
        c.check(abs(coeff_at(a, 2 * k)) <= eps,
                "even coefficient z^" + std::to_string(2 * k) + " not negligible");
    }
}

// Criterion 6: the exact expansion, the residue route, and the closed form
// produce the same series.
void criterion_triple_agreement(criterion& c) {
    auto t0 = clock_type::now();
    precision_guard guard(192);
    std::mt19937_64 rng(7001);
    const long T = 12;
    big_float eps = tol("1e-18");
    std::vector<laurent> fs{parse_laurent("X + X^-1"), parse_laurent("X^2 + X^-1"),
                            parse_laurent("2X + 3X^-2")};
    std::vector<functional> ls;
    for (int i = 0; i < 5; ++i) {
        long N = 1 + static_cast<long>(rng() % 3);
        functional::window_map w;
        for (long n = -(N - 1); n <= N - 1; ++n)
            if (rng() % 2 == 0) w[n] = random_gaussian(rng);
        w[0] = random_gaussian(rng, true);
        ls.emplace_back(domain_tag::laurent, N, w);
    }
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
        for (std::size_t li = 0; li < ls.size(); ++li) {
            wz_series direct = wz_direct(ls[li], fs[fi], T);
            wz_series via_pfd = wz_via_pfd(ls[li], fs[fi], T);
            wz_series closed = wz_closed_form(ls[li], fs[fi], T);
            std::string tag = " at f" + std::to_string(fi) + " L" + std::to_string(li);
            c.check(static_cast<long>(direct.exact.size()) == T + 1,
                    "direct route not exact" + tag);
            c.check(via_pfd.certified >= T && closed.certified >= T,
                    "approximate routes not certified through T" + tag);
            for (long j = 0; j <= T; ++j) {
                auto ju = static_cast<std::size_t>(j);
                c.check(abs(direct.w[ju] - to_big_complex(direct.exact[ju])) <= tol("1e-40"),
                        "direct numeric column drifts from exact" + tag);
                c.check(abs(direct.w[ju] - via_pfd.w[ju]) <= eps,
                        "pfd deviates at j = " + std::to_string(j) + tag);
                c.check(abs(direct.w[ju] - closed.w[ju]) <= eps,
                        "closed form deviates at j = " + std::to_string(j) + tag);
            }
        }
    }
    double dt = seconds_since(t0);
    c.check(dt < 60.0, "runtime " + std::to_string(dt) + "s exceeds 60s");
}

// Criterion 7: branch counts by valuation sign match the support of f, and
// the branch product recovers alpha/beta.
void criterion_branch_structure(criterion& c) {
    precision_guard guard(192);
    std::mt19937_64 rng(90210);
    big_float eps = tol("1e-18");
    for (int i = 0; i < 10; ++i) {
        long s = 1 + static_cast<long>(rng() % 4);
        long r = 1 + static_cast<long>(rng() % 4);
        laurent f;
        f.set_coefficient(-s, random_gaussian(rng, true));
        f.set_coefficient(r, random_gaussian(rng, true));
        for (long e = -s + 1; e < r; ++e)
            if (rng() % 3 == 0) f.set_coefficient(e, random_gaussian(rng));
        u_construction U = build_U(f);
        branch_set B = factor_branches(U, rational(4));
        classify_branches(B, U);
        std::string tag = " on instance " + std::to_string(i);
        c.check(static_cast<long>(B.s_plus.size()) == s, "|S+| != s" + tag);
        c.check(static_cast<long>(B.s_minus.size()) == r, "|S-| != r" + tag);
        c.check(static_cast<long>(B.branches.size()) == U.n, "branch count != n" + tag);
        bool valuations_ok = true;
        for (const auto& v : B.valuations)
            valuations_ok = valuations_ok && v.has_value() && !(*v == rational(0));
        c.check(valuations_ok, "zero or unknown branch valuation" + tag);

        puiseux_series prod = B.branches[0];
        for (std::size_t k = 1; k < B.branches.size(); ++k) prod = prod * B.branches[k];
        big_complex expect =
            to_big_complex(U.alpha / U.beta) * big_complex(big_float(U.n % 2 == 0 ? 1 : -1));
        bool const_ok = true;
        for (std::size_t k = 0; k < prod.coeffs.size(); ++k) {
            long num = prod.e0 + static_cast<long>(k);
            big_complex want = num == 0 ? expect : big_complex(0);
            const_ok = const_ok && abs(prod.coeffs[k] - want) <= eps;
        }
        c.check(const_ok, "(-1)^n prod a_i != alpha/beta" + tag);
    }
}

// Criterion 8: every branch of X^s f(X) = 1/z at infinity has valuation zero,
// leads with a root of X^s f(X), and keeps the derivative margin above 1.
void criterion_at_infinity(criterion& c) {
    precision_guard guard(192);
    big_float eps = tol("1e-20");
    for (const char* expr : {"X + X^-1", "X^2 + X^-1", "2X + 3X^-2"}) {
        laurent f = parse_laurent(expr);
        long s = -f.deg_minus();
        branch_set B = branches_at_infinity(f, rational(8));
        std::string tag = std::string(" for ") + expr;
        // Dense coefficients of X^s f(X), low to high.
        std::vector<big_complex> poly(static_cast<std::size_t>(s + f.deg_plus()) + 1,
                                      big_complex(0));
        for (const auto& [e, coef] : f.terms())
            poly[static_cast<std::size_t>(e + s)] = to_big_complex(coef);
        for (std::size_t bi = 0; bi < B.branches.size(); ++bi) {
            const puiseux_series& a = B.branches[bi];
            auto v = series::valuation(a);
            c.check(v.has_value() && *v == rational(0),
                    "branch " + std::to_string(bi) + " valuation != 0" + tag);
            big_complex lead = coeff_at(a, 0);
            big_complex value(0);
            for (std::size_t d = poly.size(); d-- > 0;) value = value * lead + poly[d];
            c.check(abs(value) <= eps,
                    "leading coefficient of branch " + std::to_string(bi) +
                        " is not a root of X^s f" + tag);
            margin_report mr = infinity_margin(a, 0, 2);
            c.check(mr.margin + 1 > rational(1), "margin does not exceed 1" + tag);
            for (const margin_check& mc : mr.checks)
                c.check(mc.holds, "margin check fails at m = " + std::to_string(mc.m) + tag);
        }
    }
}

// Criterion 9: the four MZ subspaces of the four-element field.
void criterion_f4(criterion& c) {
    finite_algebra F4 = make_field_algebra(4);
    std::vector<subspace> mz = enumerate_mz(F4, scalar_tag::prime_field);
    std::vector<std::vector<long>> got;
    for (const subspace& S : mz) got.push_back(S.elements);
    std::vector<std::vector<long>> want{{0}, {0, 2}, {0, 3}, {0, 1, 2, 3}};
    c.check(got == want, "MZ subspace list differs from {0}, {0,x}, {0,x+1}, F4");
}

// Criterion 10: idempotent absorption matches the MZ verdict, the radical
// ideal equivalence holds, and ideals are always MZ.
void criterion_zhao(criterion& c) {
    std::vector<std::pair<std::string, finite_algebra>> algebras;
    algebras.emplace_back("F4", make_field_algebra(4));
    algebras.emplace_back("F2xF2", make_product_algebra(2));
    algebras.emplace_back("F2[x]/(x^2)", make_truncated_algebra(2, 2));
    algebras.emplace_back("F9", make_field_algebra(9));
    algebras.emplace_back("F3[x]/(x^2)", make_truncated_algebra(3, 2));
    for (const auto& [name, A] : algebras) {
        for (const subspace& M : enumerate_subspaces(A, scalar_tag::prime_field)) {
            zhao_report zr = zhao_check(A, M);
            c.check(zr.agree, "idempotent criterion disagrees in " + name);
            if (is_ideal_set(A, M.elements))
                c.check(zr.mz, "non-MZ ideal in " + name);
        }
        equiv_report eq = r_ideal_equiv_check(A);
        c.check(eq.all_hold(), "radical ideal equivalence fails in " + name);
    }
}

// Criterion 11: the bivariate rule table escapes the degree hypothesis, and
// the concrete witness pair (X2, X1) never vanishes.
void criterion_bivariate_counterexample(criterion& c) {
    multi_rules Lm = counterexample_rules();
    bool rejected = false;
    try {
        decide_mz_multi(Lm, 2);
    } catch (const error& e) {
        rejected = e.code() == errc::hypothesis_not_satisfied;
    }
    c.check(rejected, "hypothesis not rejected");

    std::vector<multi_poly> vars{multi_poly::variable(2, 0), multi_poly::variable(2, 1)};
    std::vector<multi_poly> gs = vars;
    gs.push_back(multi_poly::one(2));
    std::optional<multi_witness_result> w = not_mz_witness_multi(Lm, vars, gs, 100);
    c.check(w.has_value(), "no witness found");
    if (!w) return;
    c.check(w->f.terms() == multi_poly::variable(2, 1).terms(), "witness f is not X2");
    c.check(w->g.terms() == multi_poly::variable(2, 0).terms(), "witness g is not X1");
    c.check(w->failing_m.size() == 100, "witness does not cover m = 1..100");
    multi_poly x2m = multi_poly::one(2);
    for (long m = 1; m <= 100; ++m) {
        x2m = x2m * multi_poly::variable(2, 1);
        gaussian_rational val = apply_multi(Lm, multi_poly::variable(2, 0) * x2m);
        c.check(val == gaussian_rational(rational(1)),
                "L(X1 X2^m) != 1 at m = " + std::to_string(m));
    }
}

// Criterion 12: MZ verdicts agree across quotients by contained ideals.
void criterion_quotient(criterion& c) {
    std::mt19937_64 rng(555);
    std::vector<finite_algebra> algebras;
    algebras.push_back(make_field_algebra(4));
    algebras.push_back(make_product_algebra(2));
    algebras.push_back(make_truncated_algebra(2, 2));
    algebras.push_back(make_truncated_algebra(3, 2));
    algebras.push_back(make_truncated_algebra(2, 3));
    algebras.push_back(make_field_algebra(9));
    struct site {
        const finite_algebra* A;
        subspace I;
        subspace M;
    };
    std::vector<site> sites;
    for (const finite_algebra& A : algebras) {
        std::vector<subspace> subs = enumerate_subspaces(A, scalar_tag::prime_field);
        for (const subspace& I : subs) {
            if (!is_ideal_set(A, I.elements)) continue;
            for (const subspace& M : subs)
                if (std::includes(M.elements.begin(), M.elements.end(), I.elements.begin(),
                                  I.elements.end()))
                    sites.push_back({&A, I, M});
        }
    }
    c.check(sites.size() >= 20, "fewer than 20 candidate triples");
    for (int pick = 0; pick < 20 && !sites.empty(); ++pick) {
        const site& s = sites[rng() % sites.size()];
        quotient_report qr = quotient_mz_check(*s.A, s.I, s.M);
        c.check(qr.agree, "quotient verdict disagrees on a triple with q = " +
                              std::to_string(s.A->field().q()));
    }
}

}  // namespace

int main() {
    run(1, "mz decision on random functionals", criterion_mz_decision);
    run(2, "first nonzero power witnesses", criterion_power_witnesses);
    run(3, "strong radical vanishing bound", criterion_sr_bound);
    run(4, "partial fraction reconstruction", criterion_pfd_reconstruction);
    run(5, "catalan coefficients on the positive branch", criterion_catalan_branch);
    run(6, "triple route agreement for W(z)", criterion_triple_agreement);
    run(7, "branch counts and root product", criterion_branch_structure);
    run(8, "at-infinity valuations, roots, margins", criterion_at_infinity);
    run(9, "the four MZ subspaces of F4", criterion_f4);
    run(10, "idempotent and radical ideal equivalences", criterion_zhao);
    run(11, "bivariate counterexample witness", criterion_bivariate_counterexample);
    run(12, "quotient verdict agreement", criterion_quotient);
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}

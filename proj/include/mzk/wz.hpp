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

#ifndef MZK_WZ_HPP
#define MZK_WZ_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <mzk/errors.hpp>
#include <mzk/functional.hpp>
#include <mzk/laurent.hpp>
#include <mzk/pfd.hpp>
#include <mzk/puiseux.hpp>

namespace mzk {

enum class wz_route { direct, pfd, closed_form };

inline const char* to_string(wz_route r) {
    switch (r) {
        case wz_route::direct: return "direct";
        case wz_route::pfd: return "pfd";
        case wz_route::closed_form: return "closed_form";
    }
    return "?";
}

/// Coefficients of W(z) = sum_j L(f^j) z^j through z^T.  The direct route is
/// exact and mirrors into the numeric column; w[0] = L(1) on every route.
struct wz_series {
    wz_route route = wz_route::direct;
    std::vector<gaussian_rational> exact;  // direct route only, else empty
    std::vector<big_complex> w;            // w[j] for j = 0..T, all routes
    long certified = -1;                   // every j <= certified is certified
};

/// The slice |n| <= radius of a doubly infinite Laurent series, each entry a
/// series in z; entry(n) holds the coefficient of X^n.
struct bilateral_window {
    long radius = 0;
    std::vector<puiseux_series> c;  // 2*radius + 1 entries, index n + radius

    puiseux_series& entry(long n) { return c[static_cast<std::size_t>(n + radius)]; }
    const puiseux_series& entry(long n) const { return c[static_cast<std::size_t>(n + radius)]; }
};

/// Branch data reused across the series routes for one fixed f.
struct wz_context {
    u_construction U;
    branch_set B;
    rational order{0};  // branch certification order in z
};

inline wz_context make_wz_context(const laurent& f, const rational& order) {
    wz_context ctx;
    ctx.U = build_U(f);
    ctx.B = factor_branches(ctx.U, order);
    classify_branches(ctx.B, ctx.U);
    ctx.order = order;
    return ctx;
}

/// W(z) summed exactly, term by term.
inline wz_series wz_direct(const functional& L, const laurent& f, long T) {
    if (T < 0) fail(errc::invalid_value, "series order must be >= 0");
    wz_series W;
    W.route = wz_route::direct;
    laurent fj{gaussian_rational(rational(1))};
    for (long j = 0; j <= T; ++j) {
        gaussian_rational c = apply(L, fj);
        W.exact.push_back(c);
        W.w.push_back(to_big_complex(c));
        if (j < T) fj *= f;
    }
    W.certified = T;
    return W;
}

/// Geometric expansion of 1/(X - a) by the valuation sign of a: positive
/// valuation feeds the X^-1 tail (entry X^(-m-1) holds a^m), negative
/// valuation the X tail (entry X^m holds -a^(-m-1)).  Entries are truncated
/// to z-exponents below z_horizon.
inline bilateral_window expand_factor(const puiseux_series& a, long radius,
                                      const rational& z_horizon) {
    auto v = series::valuation(a);
    if (!v || *v == 0)
        fail(errc::zero_valuation_branch, "geometric expansion needs a sign-definite valuation");
    if (radius < 0) fail(errc::invalid_value, "window radius must be >= 0");
    bilateral_window w;
    w.radius = radius;
    w.c.assign(static_cast<std::size_t>(2 * radius + 1), puiseux_series{});
    for (long n = -radius; n <= radius; ++n) {
        bool live = *v > 0 ? n <= -1 : n >= 0;
        if (!live) {
            w.entry(n) = series::zero(z_horizon);
            continue;
        }
        puiseux_series e = pow(a, -n - 1);
        if (*v < 0) e = big_complex(big_float(-1)) * e;
        w.entry(n) = detail::truncate_to(e, z_horizon);
    }
    return w;
}

/// L extended to bilateral windows: sum_n c_n L(X^n), a series in z.
inline puiseux_series extended_L(const functional& L, const bilateral_window& w) {
    if (w.radius != L.window_size() - 1)
        fail(errc::domain_mismatch,
             "window radius " + std::to_string(w.radius) + " does not match N-1 = " +
                 std::to_string(L.window_size() - 1));
    puiseux_series acc;
    bool started = false;
    for (long n = -w.radius; n <= w.radius; ++n) {
        gaussian_rational ln = L.value_at(n);
        if (ln.is_zero()) continue;
        puiseux_series term = to_big_complex(ln) * w.entry(n);
        acc = started ? acc + term : term;
        started = true;
    }
    if (!started) fail(errc::internal_contradiction, "functional reads an empty window");
    return acc;
}

namespace detail {

/// Reads the integer z-slots 0..T out of a branch sum.  Fractional and
/// negative slots must vanish (W is a power series in z), and the window
/// must actually reach T.
inline wz_series read_integer_slots(const puiseux_series& sum, long T, wz_route route,
                                    const functional& L) {
    if (!(sum.horizon() > rational(T)))
        fail(errc::invalid_value, "series windows certify only exponents below " +
                                      to_string(sum.horizon()) + ", need " + std::to_string(T));
    big_float scale(1);
    for (const auto& c : sum.coeffs) scale = std::max(scale, abs(c));
    wz_series W;
    W.route = route;
    W.w.assign(static_cast<std::size_t>(T) + 1, big_complex{});
    for (std::size_t k = 0; k < sum.coeffs.size(); ++k) {
        long num = sum.e0 + static_cast<long>(k);
        bool integral = num % sum.p == 0;
        long j = integral ? num / sum.p : 0;
        if (integral && j >= 0) {
            if (j <= T) W.w[static_cast<std::size_t>(j)] = sum.coeffs[k];
            continue;
        }
        if (!is_zero_within(abs(sum.coeffs[k]), scale))
            fail(errc::internal_contradiction,
                 "branch sum keeps a coefficient at z-exponent " +
                     to_string(make_rational(num, sum.p)) + " outside the power series range");
    }
    big_complex l1 = to_big_complex(L.value_at(0));
    if (!is_zero_within(abs(W.w[0] - l1), scale + abs(l1)))
        fail(errc::internal_contradiction, "constant term disagrees with L(1)");
    W.certified = T;
    return W;
}

/// z as an exact series monomial with a window that never binds.
inline puiseux_series z_monomial(const rational& beyond) {
    bigint num = rat_num(beyond), den = rat_den(beyond);
    long h = static_cast<long>((num + den - 1) / den) + 2;
    return series::monomial(big_complex(big_float(1)), 1, 1, rational(std::max(h, 2L)));
}

}  // namespace detail

/// W(z) through the partial fraction decomposition of X^s/U: residues with
/// V = X^s, every root expanded geometrically into a bilateral window, the
/// extended functional applied per branch, and the results summed.  Each
/// residue is checked against -1/(z f'(a_i)) and disagreement is a hard
/// error.
inline wz_series wz_via_pfd(const functional& L, const wz_context& ctx, long T) {
    if (T < 0) fail(errc::invalid_value, "series order must be >= 0");
    const u_construction& U = ctx.U;
    const branch_set& B = ctx.B;
    rational deep = ctx.order * (U.n + 2) + rational(T + 4);

    std::vector<big_complex> V(static_cast<std::size_t>(U.s) + 1, big_complex{});
    V.back() = big_complex(big_float(1));
    puiseux_series alpha = to_big_complex(-U.beta) * detail::z_monomial(deep);
    pfd_coefficients<puiseux_series> A = pfd(V, B.branches, alpha);

    laurent fp = U.f.derivative();
    puiseux_series z = detail::z_monomial(deep);
    big_float mag(1);
    for (const auto& a : B.branches) mag = std::max(mag, detail::series_mag(a));
    for (std::size_t i = 0; i < B.branches.size(); ++i) {
        puiseux_series rhs =
            big_complex(big_float(-1)) * inverse(z * substitute(fp, B.branches[i]));
        if (!is_zero_within(max_deviation(A.a[i], rhs), mag + detail::series_mag(A.a[i])))
            fail(errc::internal_contradiction,
                 "residue " + std::to_string(i) + " disagrees with -1/(z f'(a))");
    }

    puiseux_series sum;
    bool started = false;
    // The residues carry negative valuations bounded by the degree span, so
    // the window entries keep that much headroom past T.
    rational window_h = rational(T + 2 + U.n);
    for (std::size_t i = 0; i < B.branches.size(); ++i) {
        bilateral_window w = expand_factor(B.branches[i], L.window_size() - 1, window_h);
        puiseux_series term = A.a[i] * extended_L(L, w);
        sum = started ? sum + term : term;
        started = true;
    }
    return detail::read_integer_slots(sum, T, wz_route::pfd, L);
}

/// W(z) from the classified branches directly:
///   sum_{i in S+} sum_{m=0}^{N-1} z a_i' a_i^m      L(X^-(m+1))
/// - sum_{i in S-} sum_{m=0}^{N-1} z a_i' a_i^-(m+1) L(X^m),
/// with f'(a_i) a_i' = -z^-2 checked per branch.
inline wz_series wz_closed_form(const functional& L, const wz_context& ctx, long T) {
    if (T < 0) fail(errc::invalid_value, "series order must be >= 0");
    const branch_set& B = ctx.B;
    long N = L.window_size();
    laurent fp = ctx.U.f.derivative();
    rational deep = ctx.order * (ctx.U.n + 2) + rational(T + 4);
    puiseux_series z = detail::z_monomial(deep);

    puiseux_series sum;
    bool started = false;
    auto add = [&](const puiseux_series& term) {
        sum = started ? sum + term : term;
        started = true;
    };
    for (std::size_t i = 0; i < B.branches.size(); ++i) {
        const puiseux_series& a = B.branches[i];
        puiseux_series da = derivative(a);
        puiseux_series cons =
            substitute(fp, a) * da + series::monomial(big_complex(big_float(1)), -2, 1, deep);
        if (auto cv = series::valuation(cons); cv && !(*cv > rational(T)))
            fail(errc::internal_contradiction,
                 "branch " + std::to_string(i) + " violates f'(a) a' = -1/z^2 at exponent " +
                     to_string(*cv));
        bool plus = *B.valuations[i] > 0;
        puiseux_series base = z * da;
        for (long m = 0; m < N; ++m) {
            gaussian_rational lv = plus ? L.value_at(-(m + 1)) : L.value_at(m);
            if (lv.is_zero()) continue;
            big_complex c = to_big_complex(plus ? lv : -lv);
            add(c * (base * pow(a, plus ? m : -(m + 1))));
        }
    }
    if (!started) {
        // Every term carried a zero functional value; W is then exactly 0
        // past the constant term, but w0 = L(1) = 0 too in that case.
        sum = series::zero(rational(T) + 1);
    }
    return detail::read_integer_slots(sum, T, wz_route::closed_form, L);
}

namespace detail {
/// Builds a context deep enough for the requested order, retrying once when
/// the window bookkeeping reports a shortfall.
template <class Compute>
wz_series wz_with_own_context(const laurent& f, long T, Compute&& compute) {
    rational order = rational(T + 2);
    // The residue pipeline costs roughly two windows per root on top of T.
    if (f.support() == support_kind::mixed)
        order = order + 2 * rational(f.deg_plus() - f.deg_minus());
    for (int attempt = 0;; ++attempt) {
        wz_context ctx = make_wz_context(f, order);
        try {
            return compute(ctx);
        } catch (const error& e) {
            if (e.code() != errc::invalid_value || attempt >= 1) throw;
            order = order + rational(T + 2);
        }
    }
}
}  // namespace detail

inline wz_series wz_via_pfd(const functional& L, const laurent& f, long T) {
    return detail::wz_with_own_context(
        f, T, [&](const wz_context& ctx) { return wz_via_pfd(L, ctx, T); });
}

inline wz_series wz_closed_form(const functional& L, const laurent& f, long T) {
    return detail::wz_with_own_context(
        f, T, [&](const wz_context& ctx) { return wz_closed_form(L, ctx, T); });
}

/// Smallest 1 <= j <= j_max with L(f^j) != 0, exactly; nullopt when every
/// such coefficient vanishes.
inline std::optional<long> first_nonzero_power(const functional& L, const laurent& f,
                                               long j_max = 64) {
    laurent fj = f;
    for (long j = 1; j <= j_max; ++j) {
        if (!apply(L, fj).is_zero()) return j;
        if (j < j_max) fj *= f;
    }
    return std::nullopt;
}

}  // namespace mzk

#endif

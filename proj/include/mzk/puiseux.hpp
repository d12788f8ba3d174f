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

#ifndef MZK_PUISEUX_HPP
#define MZK_PUISEUX_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "bigcomplex.hpp"
#include "bigfloat.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "polyroots.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace mzk {

/// Polynomial in X whose coefficients are truncated Puiseux series in t.
struct puiseux_polynomial {
    std::vector<puiseux_series> coeffs;  // coeffs[i] multiplies X^i

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Horner evaluation; horizons shrink conservatively through the arithmetic.
inline puiseux_series eval_poly(const puiseux_polynomial& F, const puiseux_series& x) {
    if (F.coeffs.empty()) fail(errc::invalid_value, "evaluating an empty polynomial");
    puiseux_series acc = F.coeffs.back();
    for (std::size_t i = F.coeffs.size() - 1; i-- > 0;) acc = acc * x + F.coeffs[i];
    return acc;
}

/// d/dX of a polynomial in X.
inline puiseux_polynomial derivative_poly(const puiseux_polynomial& F) {
    puiseux_polynomial d;
    for (std::size_t i = 1; i < F.coeffs.size(); ++i)
        d.coeffs.push_back(big_complex(big_float(static_cast<long>(i))) * F.coeffs[i]);
    return d;
}

/// One lower-hull edge of the Newton polygon.  Roots announced by the edge
/// have valuation -slope; their count is the horizontal extent.  The
/// characteristic polynomial collects the leading coefficients of the
/// supporting points, giving the candidate leading branch coefficients.
struct polygon_edge {
    rational slope;
    std::vector<std::pair<std::size_t, rational>> points;  // (i, val a_i) on the edge
    std::vector<big_complex> char_poly;

    std::size_t root_count() const { return points.back().first - points.front().first; }
};

/// Lower convex hull of {(i, val a_i)}; coefficients that vanish to their
/// horizon contribute no point.
inline std::vector<polygon_edge> newton_polygon(const puiseux_polynomial& F) {
    std::vector<std::pair<std::size_t, rational>> pts;
    for (std::size_t i = 0; i < F.coeffs.size(); ++i)
        if (auto v = series::valuation(F.coeffs[i])) pts.emplace_back(i, *v);
    if (pts.empty()) fail(errc::invalid_value, "newton polygon of a polynomial with no visible terms");

    std::vector<std::pair<std::size_t, rational>> hull;
    for (const auto& pt : pts) {
        // Keep the previous vertex only while the slopes strictly increase.
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            rational lhs = (b.second - a.second) * static_cast<long>(pt.first - b.first);
            rational rhs = (pt.second - b.second) * static_cast<long>(b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    std::vector<polygon_edge> edges;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const auto [i0, v0] = hull[k];
        const auto [i1, v1] = hull[k + 1];
        polygon_edge e;
        e.slope = (v1 - v0) / static_cast<long>(i1 - i0);
        e.char_poly.assign(i1 - i0 + 1, big_complex{});
        for (const auto& [i, v] : pts) {
            if (i < i0 || i > i1) continue;
            if (v != v0 + e.slope * static_cast<long>(i - i0)) continue;
            e.points.emplace_back(i, v);
            e.char_poly[i - i0] = F.coeffs[i].at(v);
        }
        edges.push_back(std::move(e));
    }
    return edges;
}

namespace detail {

/// Multiplies by t^q, refining the lattice as needed.
inline puiseux_series shift_tpow(const puiseux_series& a, const rational& q) {
    long d = static_cast<long>(rat_den(q));
    long l = series::common_ramification(a.p, d);
    puiseux_series r = series::stretch(a, l / a.p);
    r.e0 += static_cast<long>(rat_num(q)) * (l / d);
    return r;
}

/// Smallest lattice point of t^(1/den) at or above q, as a rational.
inline rational ceil_to_lattice(const rational& q, long den) {
    rational s = q * den;
    bigint n = rat_num(s), d = rat_den(s);
    bigint c = n >= 0 ? (n + d - 1) / d : n / d;
    return make_rational(c, bigint(den));
}

inline bigint binomial_count(std::size_t n, std::size_t k) {
    bigint acc(1);
    for (std::size_t j = 1; j <= k; ++j) {
        acc *= bigint(static_cast<long>(n - k + j));
        acc /= bigint(static_cast<long>(j));
    }
    return acc;
}

/// Drops unused lattice refinement so the reported ramification is the one
/// the exponents actually need.
inline puiseux_series reduce_ramification(const puiseux_series& a0) {
    puiseux_series a = series::normalized(a0);
    if (a.p == 1 || a.known_zero()) return a;
    long g = std::gcd(a.p, std::gcd(a.e0, a.horizon_num()));
    for (std::size_t k = 0; k < a.coeffs.size() && g > 1; ++k)
        if (!is_zero_within(a.coeffs[k])) g = std::gcd(g, a.e0 + static_cast<long>(k));
    if (g <= 1) return a;
    puiseux_series r;
    r.p = a.p / g;
    r.e0 = a.e0 / g;
    r.coeffs.assign(a.coeffs.size() / static_cast<std::size_t>(g), big_complex{});
    for (std::size_t k = 0; k < r.coeffs.size(); ++k)
        r.coeffs[k] = a.coeffs[k * static_cast<std::size_t>(g)];
    return r;
}

/// Claims zeros for the unknown tail up to horizon h.  Newton refinement
/// repairs any wrong claim on its way to a vanishing residual, and the
/// residual gate trims the branch back to what the residual certifies, so
/// the claim is checked rather than trusted.
inline puiseux_series pad_to(const puiseux_series& a, const rational& h) {
    if (!(a.horizon() < h)) return a;
    rational need = (h - a.horizon()) * a.p;
    bigint n = rat_num(need), d = rat_den(need);
    long extra = static_cast<long>((n + d - 1) / d);
    puiseux_series r = a;
    r.coeffs.insert(r.coeffs.end(), static_cast<std::size_t>(extra), big_complex{});
    return r;
}

/// Drops every coefficient at exponent >= h, shrinking the claimed window.
inline puiseux_series truncate_to(const puiseux_series& a, const rational& h) {
    if (!(h < a.horizon())) return a;
    rational q = h * a.p - rational(a.e0);
    bigint n = rat_num(q), d = rat_den(q);
    if (n <= 0) fail(errc::internal_contradiction, "branch window trimmed to nothing");
    long keep = static_cast<long>((n + d - 1) / d);
    puiseux_series r = a;
    if (static_cast<std::size_t>(keep) < r.coeffs.size())
        r.coeffs.resize(static_cast<std::size_t>(keep));
    return r;
}

/// Newton refinement of a simple branch from its leading term c t^mu.  Each
/// step pushes the residual valuation strictly higher until the windows run
/// out of information; once the residual
/// vanishes through its whole window the branch is as accurate as the
/// truncation can certify.
inline puiseux_series lift_simple(const puiseux_polynomial& F, const puiseux_polynomial& dF,
                                  const rational& mu, const big_complex& c,
                                  const rational& target_h) {
    long den = static_cast<long>(rat_den(mu));
    rational h = ceil_to_lattice(std::max(target_h, mu + 1), den);
    puiseux_series x = series::monomial(c, static_cast<long>(rat_num(mu)), den, h);

    std::optional<rational> last;
    for (unsigned iter = 0; iter < 200; ++iter) {
        puiseux_series r = eval_poly(F, x);
        auto rv = series::valuation(r);
        if (!rv) return x;  // residual vanishes to its horizon
        // A repeated valuation means the truncated windows carry no further
        // information; the residual gate decides whether that was enough.
        if (last && !(*rv > *last)) return x;
        last = *rv;
        puiseux_series d = eval_poly(dF, x);
        if (d.known_zero())
            fail(errc::cluster_unresolved, "derivative vanished while refining a simple branch");
        // Strip vanished prefixes before dividing: the quotient window is
        // charged from the operand starts, and a stale start would push the
        // correction term past the horizon.
        x = series::normalized(pad_to(x - series::normalized(r) / series::normalized(d), h));
    }
    fail(errc::cluster_unresolved, "branch refinement exceeded its iteration budget");
}

/// Deterministic grouping of approximate roots into clusters closer than the
/// separation tolerance (transitive closure, so a chain is one cluster).
inline std::vector<std::pair<big_complex, std::size_t>> cluster_roots(
    const std::vector<big_complex>& roots) {
    big_float scale(1);
    for (const auto& r : roots) scale = std::max(scale, abs(r));
    big_float lim = ldexp(big_float(1), -static_cast<int>(precision_bits()) / 4) * scale;

    std::vector<int> comp(roots.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = next;
        std::vector<std::size_t> frontier{i};
        while (!frontier.empty()) {
            std::size_t a = frontier.back();
            frontier.pop_back();
            for (std::size_t b = 0; b < roots.size(); ++b) {
                if (comp[b] >= 0 || abs(roots[a] - roots[b]) > lim) continue;
                comp[b] = next;
                frontier.push_back(b);
            }
        }
        ++next;
    }

    std::vector<std::pair<big_complex, std::size_t>> clusters(static_cast<std::size_t>(next),
                                                              {big_complex{}, 0});
    for (std::size_t i = 0; i < roots.size(); ++i) {
        auto& [mean, count] = clusters[static_cast<std::size_t>(comp[i])];
        mean += roots[i];
        ++count;
    }
    for (auto& [mean, count] : clusters)
        mean = mean / big_complex(big_float(static_cast<long>(count)));
    return clusters;
}

inline constexpr unsigned max_cluster_depth = 16;

/// Branch expansion by polygon descent.  Each edge contributes its roots;
/// simple characteristic roots lift by Newton, clustered roots recurse on
/// the recentered polynomial, where only positive-valuation corrections
/// continue the cluster.
inline std::vector<puiseux_series> expand_all(const puiseux_polynomial& F0, const rational& target_h,
                                              bool positive_only, unsigned depth) {
    if (depth > max_cluster_depth)
        fail(errc::cluster_unresolved, "cluster recursion exceeded its depth budget");

    std::vector<puiseux_series> coeffs = F0.coeffs;
    while (!coeffs.empty() && coeffs.back().known_zero()) coeffs.pop_back();
    if (coeffs.empty()) fail(errc::invalid_value, "factoring a polynomial with no visible terms");

    std::vector<puiseux_series> out;
    std::size_t lead0 = 0;
    while (lead0 + 1 < coeffs.size() && coeffs[lead0].known_zero()) ++lead0;
    for (std::size_t k = 0; k < lead0; ++k) out.push_back(series::zero(std::max(target_h, rational(1))));
    if (lead0 > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead0));
    if (coeffs.size() == 1) return out;

    puiseux_polynomial F{std::move(coeffs)};
    puiseux_polynomial dF = derivative_poly(F);
    for (const auto& edge : newton_polygon(F)) {
        rational mu = -edge.slope;
        if (positive_only && !(mu > 0)) continue;
        auto roots = complex_roots(edge.char_poly);
        for (const auto& [c, g] : cluster_roots(roots)) {
            if (g == 1) {
                out.push_back(lift_simple(F, dF, mu, c, target_h));
                continue;
            }
            // Recenter: H(Y) = F(t^mu (c + Y)); the cluster continues in the
            // positive-valuation corrections Y.
            puiseux_polynomial H;
            H.coeffs.assign(F.coeffs.size(), puiseux_series{});
            for (std::size_t k = 0; k < F.coeffs.size(); ++k) {
                puiseux_series acc;
                bool started = false;
                for (std::size_t i = k; i < F.coeffs.size(); ++i) {
                    big_complex scalar = big_complex(to_big_float(binomial_count(i, k))) *
                                         pow(c, static_cast<unsigned long>(i - k));
                    puiseux_series term = scalar * shift_tpow(F.coeffs[i], mu * static_cast<long>(i));
                    acc = started ? acc + term : term;
                    started = true;
                }
                H.coeffs[k] = acc;
            }
            rational y_target = std::max(target_h - mu, rational(1));
            auto ys = expand_all(H, y_target, true, depth + 1);
            if (ys.size() != g)
                fail(errc::cluster_unresolved,
                     "cluster of size " + std::to_string(g) + " resolved into " +
                         std::to_string(ys.size()) + " corrections");
            for (auto& y : ys) {
                puiseux_series base =
                    series::monomial(c, 0, y.p, ceil_to_lattice(y.horizon(), y.p));
                out.push_back(shift_tpow(base + y, mu));
            }
        }
    }
    return out;
}

/// Largest known coefficient magnitude, as a residual scale contribution.
inline big_float series_mag(const puiseux_series& a) {
    big_float m(0);
    for (const auto& c : a.coeffs) m = std::max(m, abs(c));
    return m;
}

}  // namespace detail

/// The n branch roots of F, each certified by the residual val F(a) > order.
struct branch_set {
    std::vector<puiseux_series> branches;
    long p = 1;                                     // lcm of branch ramifications
    std::vector<std::optional<rational>> valuations;
    std::vector<rational> residual_floors;          // certified val F(a) >= floor > order
    std::vector<std::size_t> s_plus, s_minus;       // filled by classify_branches
};

inline branch_set factor_branches(const puiseux_polynomial& F0, const rational& order) {
    std::vector<puiseux_series> coeffs = F0.coeffs;
    while (!coeffs.empty() && coeffs.back().known_zero()) coeffs.pop_back();
    if (coeffs.empty()) fail(errc::invalid_value, "factoring a polynomial with no visible terms");
    puiseux_polynomial F{coeffs};

    // Branches of negative valuation lose one window shift per Horner step,
    // so the expansion target must overshoot the certification order.
    rational worst(0);
    for (const auto& edge : newton_polygon(F)) worst = std::max(worst, edge.slope);
    rational target = order + 1 + worst * static_cast<long>(F.degree());

    // In-cluster tangency taxes the certified horizon by the valuation of
    // the derivative, which no static target anticipates; the claim deepens
    // until the gate passes or the inputs stop yielding new information.
    puiseux_polynomial dF = derivative_poly(F);
    branch_set B;
    std::optional<rational> last_shortfall;
    for (int attempt = 0;; ++attempt) {
        auto branches = detail::expand_all(F, target, false, 0);
        if (branches.size() != F.degree())
            fail(errc::internal_contradiction,
                 "expected " + std::to_string(F.degree()) + " branches, found " +
                     std::to_string(branches.size()));

        // Final polish against the original polynomial, then the residual gate.
        B = branch_set{};
        std::optional<rational> shortfall;
        for (auto& x : branches) {
            rational keep = x.horizon();
            x = series::normalized(x);
            for (int step = 0; step < 2; ++step) {
                puiseux_series r = eval_poly(F, x);
                if (r.known_zero()) break;
                puiseux_series d = eval_poly(dF, x);
                if (d.known_zero()) break;
                x = series::normalized(
                    detail::pad_to(x - series::normalized(r) / series::normalized(d), keep));
            }
            puiseux_series r = eval_poly(F, x);
            big_float scale(1), xmag = std::max(big_float(1), detail::series_mag(x));
            big_float xpow(1);
            for (const auto& a : F.coeffs) {
                scale += detail::series_mag(a) * xpow;
                xpow *= xmag;
            }
            for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
                rational e = make_rational(r.e0 + static_cast<long>(k), r.p);
                if (e > order) break;
                if (!is_zero_within(abs(r.coeffs[k]), scale))
                    fail(errc::cluster_unresolved,
                         "branch residual at exponent " + to_string(e) + " exceeds tolerance");
            }
            // F(x) vanishes modulo t^floor, so x matches a true branch modulo
            // t^(floor - val F'(x)); everything past that is an unchecked
            // claim and gets dropped.
            auto rv = series::valuation(r);
            rational floor = rv ? *rv : r.horizon();
            puiseux_series d = eval_poly(dF, x);
            auto dv = series::valuation(d);
            if (!dv)
                fail(errc::cluster_unresolved, "derivative vanished while certifying a branch");
            rational cert = std::min(x.horizon(), floor - *dv);
            if (!(cert > order)) {
                if (!shortfall || cert < *shortfall) shortfall = cert;
                continue;
            }
            B.branches.push_back(detail::reduce_ramification(detail::truncate_to(x, cert)));
            B.residual_floors.push_back(floor);
        }
        if (!shortfall) break;
        bool progressed = !last_shortfall || *shortfall > *last_shortfall;
        if (attempt >= 4 || !progressed)
            fail(errc::invalid_value,
                 "coefficient truncation certifies only val " + to_string(*shortfall) +
                     ", short of the requested order " + to_string(order));
        last_shortfall = shortfall;
        target = target + (order + 1 - *shortfall);
    }

    // Deterministic order: by valuation, then by argument of the leading
    // coefficient, with magnitude and components as final ties.
    std::vector<std::size_t> idx(B.branches.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto lead = [&](std::size_t i) -> big_complex {
        const puiseux_series& b = B.branches[i];
        for (const auto& c : b.coeffs)
            if (!is_zero_within(c)) return c;
        return big_complex{};
    };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        auto vi = series::valuation(B.branches[i]), vj = series::valuation(B.branches[j]);
        if (vi.has_value() != vj.has_value()) return vi.has_value();  // zero branches last
        if (vi && vj && *vi != *vj) return *vi < *vj;
        big_complex li = lead(i), lj = lead(j);
        big_float ai = arg(li), aj = arg(lj);
        if (ai != aj) return ai < aj;
        big_float mi = abs(li), mj = abs(lj);
        if (mi != mj) return mi < mj;
        if (li.re != lj.re) return li.re < lj.re;
        return li.im < lj.im;
    });
    branch_set S;
    S.p = 1;
    for (std::size_t i : idx) {
        S.branches.push_back(B.branches[i]);
        S.residual_floors.push_back(B.residual_floors[i]);
        S.valuations.push_back(series::valuation(B.branches[i]));
        S.p = series::common_ramification(S.p, B.branches[i].p);
    }
    return S;
}

/// U(X) = X^s (1 - z f(X)) held exactly: u[i] is the coefficient of X^i as a
/// polynomial in z over the Gaussian rationals.
struct u_construction {
    laurent f;
    long s = 0, r = 0, n = 0;
    gaussian_rational alpha, beta;  // coefficients of X^-s and X^r in f
    std::vector<laurent> u;
};

inline u_construction build_U(const laurent& f) {
    if (f.support() != support_kind::mixed)
        fail(errc::unsupported_support,
             std::string("U construction needs mixed support, got ") + to_string(f.support()));
    u_construction U;
    U.f = f;
    U.s = -f.deg_minus();
    U.r = f.deg_plus();
    U.n = U.r + U.s;
    U.alpha = f.coefficient(-U.s);
    U.beta = f.coefficient(U.r);
    U.u.assign(static_cast<std::size_t>(U.n) + 1, laurent{});
    U.u[static_cast<std::size_t>(U.s)] = laurent::monomial(0);
    for (const auto& [k, c] : f.terms()) {
        auto& slot = U.u[static_cast<std::size_t>(k + U.s)];
        slot = slot - laurent::monomial(1, c);
    }
    return U;
}

/// A Laurent polynomial evaluated at a series argument, term by term.
inline puiseux_series substitute(const laurent& f, const puiseux_series& a) {
    if (f.is_zero()) fail(errc::invalid_value, "substituting into the zero polynomial");
    puiseux_series acc;
    bool started = false;
    for (const auto& [e, c] : f.terms()) {
        puiseux_series term = to_big_complex(c) * pow(a, static_cast<long>(e));
        acc = started ? acc + term : term;
        started = true;
    }
    return acc;
}

/// Exact z-polynomial coefficients realized as numeric series in t, every
/// window wide enough to certify branches through `order` plus the Horner
/// losses of a degree-n factorization.
inline puiseux_polynomial realize(const std::vector<laurent>& zpolys, const rational& order,
                                  long slack) {
    rational H = order + slack + 2;
    long q = static_cast<long>(rat_den(H));
    long hn = static_cast<long>(rat_num(H * q) / rat_den(H * q));
    puiseux_polynomial F;
    for (const auto& c : zpolys) {
        puiseux_series a;
        a.p = q;
        a.e0 = 0;
        a.coeffs.assign(static_cast<std::size_t>(hn), big_complex{});
        for (const auto& [e, g] : c.terms()) {
            long slot = e * q;
            if (slot < 0 || slot >= hn)
                fail(errc::invalid_value, "coefficient exponent outside the realization window");
            a.coeffs[static_cast<std::size_t>(slot)] = to_big_complex(g);
        }
        F.coeffs.push_back(std::move(a));
    }
    return F;
}

namespace detail {
/// Repeated roots tax the certified horizon by the valuation of the
/// derivative, which is only known after an attempt; exact inputs allow a
/// retry with wider windows when certification falls short.
inline branch_set factor_with_retry(const std::vector<laurent>& zpolys, const rational& order,
                                    long slack) {
    for (int attempt = 0;; ++attempt) {
        try {
            return factor_branches(realize(zpolys, order, slack), order);
        } catch (const error& e) {
            if (e.code() != errc::invalid_value || attempt >= 2) throw;
            slack += 8;
        }
    }
}
}  // namespace detail

inline branch_set factor_branches(const u_construction& U, const rational& order) {
    return detail::factor_with_retry(U.u, order, U.n);
}

/// Splits the branch indices by valuation sign and checks the root product
/// against alpha/beta, which the factored form of U forces exactly.
inline void classify_branches(branch_set& B, const u_construction& U) {
    B.s_plus.clear();
    B.s_minus.clear();
    for (std::size_t i = 0; i < B.branches.size(); ++i) {
        const auto& v = B.valuations[i];
        if (!v || *v == 0)
            fail(errc::zero_valuation_branch,
                 "branch " + std::to_string(i) + " has no sign-definite valuation");
        (*v > 0 ? B.s_plus : B.s_minus).push_back(i);
    }
    if (B.s_plus.size() != static_cast<std::size_t>(U.s) ||
        B.s_minus.size() != static_cast<std::size_t>(U.r))
        fail(errc::internal_contradiction,
             "valuation signs disagree with the polygon: |S+| = " + std::to_string(B.s_plus.size()) +
                 ", |S-| = " + std::to_string(B.s_minus.size()));

    puiseux_series prod = B.branches.front();
    for (std::size_t i = 1; i < B.branches.size(); ++i) prod = prod * B.branches[i];
    big_complex expected = to_big_complex(U.alpha / U.beta);
    if (U.n % 2 != 0) expected = -expected;
    if (!(prod.horizon() > 0) || !series::valuation(prod) ||
        *series::valuation(prod) != rational(0))
        fail(errc::internal_contradiction, "branch product lost its constant term");
    puiseux_series want = series::monomial(expected, 0, prod.p,
                                           detail::ceil_to_lattice(prod.horizon(), prod.p));
    if (!is_zero_within(max_deviation(prod, want), big_float(1) + abs(expected)))
        fail(errc::internal_contradiction, "branch product disagrees with alpha/beta");
}

/// Branches of f(A) = t near t = 0, i.e. the large-|z| behavior after the
/// substitution t = 1/z: factors G(A) = A^s f(A) - t A^s, whose roots all
/// carry valuation 0 with leading coefficients among the roots of X^s f(X).
inline branch_set branches_at_infinity(const laurent& f, const rational& order) {
    if (f.support() != support_kind::mixed)
        fail(errc::unsupported_support,
             std::string("analysis at infinity needs mixed support, got ") + to_string(f.support()));
    long s = -f.deg_minus(), n = f.deg_plus() + s;
    std::vector<laurent> g(static_cast<std::size_t>(n) + 1);
    for (const auto& [k, c] : f.terms()) g[static_cast<std::size_t>(k + s)] = laurent::monomial(0, c);
    auto& gs = g[static_cast<std::size_t>(s)];
    gs = gs - laurent::monomial(1);
    branch_set B = detail::factor_with_retry(g, order, n);
    for (std::size_t i = 0; i < B.branches.size(); ++i)
        if (!B.valuations[i] || *B.valuations[i] != 0)
            fail(errc::nonzero_valuation_at_infinity,
                 "branch " + std::to_string(i) + " at infinity has nonzero valuation");
    return B;
}

/// Margin analysis of a valuation-0 branch: the first correction exponent
/// j/p, plus per-m verification that w(a' t^2 a^m) = j/p + 1 stays above 1.
struct margin_check {
    long m = 0;
    std::optional<rational> w_value;
    bool holds = false;
};
struct margin_report {
    rational margin;
    std::vector<margin_check> checks;
};

inline margin_report infinity_margin(const puiseux_series& branch, long m_lo, long m_hi) {
    auto v = series::valuation(branch);
    if (!v || *v != 0)
        fail(errc::nonzero_valuation_at_infinity, "margin analysis needs a branch with w = 0");
    long j = 0;
    for (std::size_t k = 0; k < branch.coeffs.size(); ++k) {
        long num = branch.e0 + static_cast<long>(k);
        if (num > 0 && !is_zero_within(branch.coeffs[k])) {
            j = num;
            break;
        }
    }
    if (j == 0)
        fail(errc::constant_branch, "no correction term below the truncation horizon");

    margin_report rep;
    rep.margin = make_rational(j, branch.p);
    rational expected = rep.margin + 1;
    puiseux_series da = derivative(branch);
    puiseux_series t2 = series::monomial(big_complex(big_float(1)), 2 * branch.p, branch.p,
                                         branch.horizon() + 3);
    for (long m = m_lo; m <= m_hi; ++m) {
        margin_check c;
        c.m = m;
        puiseux_series w = da * t2 * pow(branch, m);
        c.w_value = series::valuation(w);
        c.holds = c.w_value && *c.w_value == expected && expected > 1;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace mzk

#endif

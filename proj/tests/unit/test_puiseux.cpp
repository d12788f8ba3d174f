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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <mzk/puiseux.hpp>

#include "oracles.hpp"

using namespace mzk;

namespace {
gaussian_rational gq(int n) { return gaussian_rational(rational(n)); }

laurent X(long long e, int c = 1) { return laurent::monomial(e, gq(c)); }

big_complex bc(int re, int im = 0) { return {big_float(re), big_float(im)}; }

puiseux_series from_ints(std::initializer_list<int> cs, long e0 = 0, long p = 1) {
    puiseux_series s;
    s.p = p;
    s.e0 = e0;
    for (int c : cs) s.coeffs.push_back(bc(c));
    return s;
}

bool close(const big_complex& v, const big_complex& w, double tol = 1e-25) {
    return abs(v - w) <= big_float(tol);
}

}  // namespace

TEST_CASE("U construction matches the hand expansions", "[puiseux]") {
    u_construction U = build_U(X(1) + X(-1));
    CHECK(U.s == 1);
    CHECK(U.r == 1);
    CHECK(U.n == 2);
    CHECK(U.alpha == gq(1));
    CHECK(U.beta == gq(1));
    REQUIRE(U.u.size() == 3);
    CHECK(U.u[0] == X(1, -1));  // -z
    CHECK(U.u[1] == X(0));
    CHECK(U.u[2] == X(1, -1));

    u_construction V = build_U(X(2) + X(-1));
    CHECK(V.n == 3);
    CHECK(V.u[0] == X(1, -1));
    CHECK(V.u[1] == X(0));
    CHECK(V.u[2].is_zero());
    CHECK(V.u[3] == X(1, -1));

    u_construction W = build_U(X(3, 2) + X(-2));
    CHECK(W.s == 2);
    CHECK(W.n == 5);
    CHECK(W.beta == gq(2));
    CHECK(W.u[0] == X(1, -1));
    CHECK(W.u[2] == X(0));
    CHECK(W.u[5] == X(1, -2));

    for (const laurent& bad : {X(1) + X(0), X(-1), X(0, 3), laurent()}) {
        try {
            build_U(bad);
            FAIL("expected a throw");
        } catch (const error& e) {
            CHECK(e.code() == errc::unsupported_support);
        }
    }
}

TEST_CASE("newton polygon reads the valuations", "[puiseux]") {
    auto edges = newton_polygon(realize(build_U(X(1) + X(-1)).u, rational(4), 2));
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].slope == rational(-1));
    CHECK(edges[0].root_count() == 1);
    REQUIRE(edges[0].points.size() == 2);
    CHECK(edges[0].points[0] == std::pair<std::size_t, rational>{0, rational(1)});
    CHECK(edges[0].points[1] == std::pair<std::size_t, rational>{1, rational(0)});
    CHECK(edges[1].slope == rational(1));
    CHECK(edges[1].root_count() == 1);

    edges = newton_polygon(realize(build_U(X(2) + X(-1)).u, rational(4), 3));
    REQUIRE(edges.size() == 2);
    CHECK(edges[0].slope == rational(-1));
    CHECK(edges[0].root_count() == 1);
    CHECK(edges[1].slope == make_rational(1, 2));
    CHECK(edges[1].root_count() == 2);

    // X^2 - t: one edge, two roots of valuation 1/2.
    puiseux_polynomial sq;
    sq.coeffs = {series::monomial(bc(-1), 1, 1, rational(6)), series::zero(rational(6)),
                 series::constant(bc(1), rational(6))};
    edges = newton_polygon(sq);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].slope == make_rational(-1, 2));
    CHECK(edges[0].root_count() == 2);
    CHECK(close(edges[0].char_poly[0], bc(-1)));
    CHECK(close(edges[0].char_poly[2], bc(1)));

    // Collinear points merge into a single edge with all three supports.
    puiseux_polynomial col;
    col.coeffs = {series::monomial(bc(1), 2, 1, rational(8)),
                  series::monomial(bc(-2), 1, 1, rational(8)), series::constant(bc(1), rational(8))};
    edges = newton_polygon(col);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].slope == rational(-1));
    CHECK(edges[0].points.size() == 3);
}

TEST_CASE("branch expansion reproduces the Catalan series", "[puiseux]") {
    u_construction U = build_U(X(1) + X(-1));
    branch_set B = factor_branches(U, rational(8));
    REQUIRE(B.branches.size() == 2);
    CHECK(B.p == 1);
    REQUIRE(B.valuations[0].has_value());
    REQUIRE(B.valuations[1].has_value());
    CHECK(*B.valuations[0] == rational(-1));
    CHECK(*B.valuations[1] == rational(1));
    for (const auto& floor : B.residual_floors) CHECK(floor > rational(8));

    // Oracle: the quadratic formula gives a = (1 -+ sqrt(1-4z^2)) / (2z), so
    // the odd coefficients are -+ b_k/2 with b = sqrt-series of 1-4u.
    auto b = oracles::sqrt_series(rational(-4), 5);
    for (std::size_t k = 1; k < b.size(); ++k) {
        // The same numbers are the Catalan sequence, counted independently.
        CHECK(b[k] * make_rational(-1, 2) == rational(oracles::catalan(static_cast<unsigned>(k) - 1)));
    }
    const puiseux_series& a1 = B.branches[1];
    const puiseux_series& a2 = B.branches[0];
    for (long k = 1; k <= 4; ++k) {
        big_complex want{to_big_float(b[static_cast<std::size_t>(k)] * make_rational(-1, 2)),
                         big_float(0)};
        CHECK(close(a1.at(rational(2 * k - 1)), want));
        CHECK(close(a2.at(rational(2 * k - 1)), -want));
    }
    CHECK(close(a1.at(rational(1)), bc(1)));
    CHECK(close(a1.at(rational(2)), bc(0)));
    CHECK(close(a1.at(rational(5)), bc(2)));
    CHECK(close(a1.at(rational(7)), bc(5)));
    CHECK(close(a2.at(rational(-1)), bc(1)));
    CHECK(close(a2.at(rational(0)), bc(0)));

    // f(a) = 1/z holds for both branches over the shared window.
    for (const auto& a : B.branches) {
        puiseux_series fa = substitute(U.f, a);
        puiseux_series inv_z = series::monomial(bc(1), -1, 1, fa.horizon());
        CHECK(is_zero_within(max_deviation(fa, inv_z)));
    }
}

TEST_CASE("three-branch factorization needs ramification two", "[puiseux]") {
    u_construction U = build_U(X(2) + X(-1));
    branch_set B = factor_branches(U, rational(4));
    REQUIRE(B.branches.size() == 3);
    CHECK(B.p == 2);
    CHECK(*B.valuations[0] == make_rational(-1, 2));
    CHECK(*B.valuations[1] == make_rational(-1, 2));
    CHECK(*B.valuations[2] == rational(1));

    classify_branches(B, U);
    CHECK(B.s_plus == std::vector<std::size_t>{2});
    CHECK(B.s_minus == std::vector<std::size_t>{0, 1});
}

TEST_CASE("square root of t factors exactly", "[puiseux]") {
    puiseux_polynomial F;
    F.coeffs = {series::monomial(bc(-1), 1, 1, rational(6)), series::zero(rational(6)),
                series::constant(bc(1), rational(6))};
    branch_set B = factor_branches(F, rational(2));
    REQUIRE(B.branches.size() == 2);
    CHECK(B.p == 2);
    CHECK(*B.valuations[0] == make_rational(1, 2));
    CHECK(*B.valuations[1] == make_rational(1, 2));
    // Sorted by argument of the leading coefficient: +1 before -1.
    CHECK(close(B.branches[0].at(make_rational(1, 2)), bc(1)));
    CHECK(close(B.branches[1].at(make_rational(1, 2)), bc(-1)));
    puiseux_series plus = series::monomial(bc(1), 1, 2, B.branches[0].horizon());
    CHECK(is_zero_within(max_deviation(B.branches[0], plus)));
}

TEST_CASE("cluster splitting separates tangent branches", "[puiseux]") {
    // (X - t)(X - t - t^2): the characteristic polynomial sees a double root
    // at 1, so the engine must recurse on the recentered polynomial.
    puiseux_polynomial F;
    puiseux_series a0 = series::monomial(bc(1), 2, 1, rational(12)) +
                        series::monomial(bc(1), 3, 1, rational(12));
    puiseux_series a1 = series::monomial(bc(-2), 1, 1, rational(12)) +
                        series::monomial(bc(-1), 2, 1, rational(12));
    F.coeffs = {a0, a1, series::constant(bc(1), rational(12))};
    branch_set B = factor_branches(F, rational(4));
    REQUIRE(B.branches.size() == 2);
    for (const auto& floor : B.residual_floors) CHECK(floor > rational(4));

    // Both branches start with t; exactly one continues with t^2.
    big_complex second0 = B.branches[0].at(rational(2));
    big_complex second1 = B.branches[1].at(rational(2));
    CHECK(close(B.branches[0].at(rational(1)), bc(1)));
    CHECK(close(B.branches[1].at(rational(1)), bc(1)));
    CHECK(close(second0 + second1, bc(1)));
    CHECK(close(second0 * second1, bc(0)));
}

TEST_CASE("classification counts follow the support", "[puiseux]") {
    u_construction U = build_U(X(1) + X(-1));
    branch_set B = factor_branches(U, rational(4));
    classify_branches(B, U);
    CHECK(B.s_plus.size() == 1);
    CHECK(B.s_minus.size() == 1);

    u_construction W = build_U(X(3, 2) + X(-2));
    branch_set C = factor_branches(W, rational(3));
    classify_branches(C, W);
    CHECK(C.s_plus.size() == 2);
    CHECK(C.s_minus.size() == 3);
    CHECK(C.p == 6);  // valuations 1/2 and -1/3 need lcm(2,3)

    branch_set fake;
    fake.branches = {series::constant(bc(1), rational(4))};
    fake.valuations = {rational(0)};
    try {
        classify_branches(fake, U);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::zero_valuation_branch);
    }
}

TEST_CASE("random mixed supports hit the predicted counts", "[puiseux]") {
    std::mt19937_64 rng(7001);
    auto nz = [&]() {
        gaussian_rational g = oracles::random_gaussian(rng);
        return g == gaussian_rational() ? gq(1) : g;
    };
    for (int round = 0; round < 6; ++round) {
        long s = 1 + static_cast<long>(rng() % 3);
        long r = 1 + static_cast<long>(rng() % 3);
        laurent f = laurent::monomial(-s, nz()) + laurent::monomial(r, nz());
        for (long e = -s + 1; e < r; ++e)
            if (rng() % 2) f = f + laurent::monomial(e, oracles::random_gaussian(rng));
        u_construction U = build_U(f);
        branch_set B = factor_branches(U, rational(2));
        classify_branches(B, U);
        CHECK(B.s_plus.size() == static_cast<std::size_t>(s));
        CHECK(B.s_minus.size() == static_cast<std::size_t>(r));

        puiseux_series fa = substitute(f, B.branches.front());
        puiseux_series inv_z =
            series::monomial(bc(1), -fa.p, fa.p, make_rational(fa.horizon_num(), fa.p));
        CHECK(max_deviation(fa, inv_z) <= big_float(1e-20));
    }
}

TEST_CASE("series derivative of a branch matches finite differences", "[puiseux]") {
    branch_set B = factor_branches(build_U(X(1) + X(-1)), rational(10));
    const puiseux_series& a1 = B.branches[1];
    puiseux_series da = derivative(a1);
    big_float t = big_float(1) / 64, h = ldexp(big_float(1), -30);
    big_complex fd = (eval(a1, t + h) - eval(a1, t - h)) / big_complex(2 * h);
    big_complex dv = eval(da, t);
    CHECK(abs(dv - fd) <= big_float(1e-6) * abs(dv));
}

TEST_CASE("branches at infinity carry valuation zero", "[puiseux]") {
    branch_set B = branches_at_infinity(X(1) + X(-1), rational(4));
    REQUIRE(B.branches.size() == 2);
    CHECK(*B.valuations[0] == rational(0));
    CHECK(*B.valuations[1] == rational(0));
    // Leading coefficients are the roots of X^s f(X) = X^2 + 1, sorted -i, +i.
    CHECK(close(B.branches[0].at(rational(0)), bc(0, -1)));
    CHECK(close(B.branches[1].at(rational(0)), bc(0, 1)));

    // Oracle: a = (t + 2i sqrt(1 - t^2/4)) / 2 expanded around t = 0.
    auto b = oracles::sqrt_series(make_rational(-1, 4), 2);
    const puiseux_series& ai = B.branches[1];
    CHECK(close(ai.at(rational(1)), big_complex{big_float(1) / 2, big_float(0)}));
    for (long k = 1; k <= 2; ++k) {
        big_complex want{big_float(0), to_big_float(b[static_cast<std::size_t>(k)])};
        CHECK(close(ai.at(rational(2 * k)), want));
    }
    CHECK(close(ai.at(rational(3)), bc(0)));

    branch_set C = branches_at_infinity(X(2) + X(-1), rational(3));
    REQUIRE(C.branches.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        big_complex lead = C.branches[i].at(rational(0));
        CHECK(abs(pow(lead, 3UL) + bc(1)) <= big_float(1e-25));  // roots of X^3 + 1
    }

    try {
        branches_at_infinity(X(1) + X(0), rational(2));
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::unsupported_support);
    }
}

TEST_CASE("repeated leading roots at infinity split on the half lattice", "[puiseux]") {
    // X^s f(X) = (X+1)^2, so both branches start at -1 and separate at t^(1/2).
    branch_set B = branches_at_infinity(X(1) + X(0, 2) + X(-1), rational(3));
    REQUIRE(B.branches.size() == 2);
    CHECK(B.p == 2);
    CHECK(close(B.branches[0].at(rational(0)), bc(-1)));
    CHECK(close(B.branches[1].at(rational(0)), bc(-1)));
    big_complex c0 = B.branches[0].at(make_rational(1, 2));
    big_complex c1 = B.branches[1].at(make_rational(1, 2));
    CHECK(close(c0 + c1, bc(0)));
    CHECK(close(c0 * c1, bc(1)));  // -(i)(i): the corrections are -+i t^(1/2)

    margin_report rep = infinity_margin(B.branches[0], 1, 3);
    CHECK(rep.margin == make_rational(1, 2));
    for (const auto& c : rep.checks) {
        CHECK(c.holds);
        CHECK(*c.w_value == make_rational(3, 2));
    }
}

TEST_CASE("infinity margins flag the first correction", "[puiseux]") {
    branch_set B = branches_at_infinity(X(1) + X(-1), rational(4));
    margin_report rep = infinity_margin(B.branches[1], 0, 4);
    CHECK(rep.margin == rational(1));
    REQUIRE(rep.checks.size() == 5);
    for (const auto& c : rep.checks) {
        CHECK(c.holds);
        CHECK(*c.w_value == rational(2));
    }

    // First correction on the half lattice: margin 3/2.
    puiseux_series half = from_ints({1, 0, 0, 1}, 0, 2);
    rep = infinity_margin(half, 1, 2);
    CHECK(rep.margin == make_rational(3, 2));
    for (const auto& c : rep.checks) {
        CHECK(c.holds);
        CHECK(*c.w_value == make_rational(5, 2));
    }

    try {
        infinity_margin(series::constant(bc(1), rational(3)), 1, 2);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::constant_branch);
    }
    try {
        infinity_margin(series::monomial(bc(1), 1, 1, rational(4)), 1, 2);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::nonzero_valuation_at_infinity);
    }
}

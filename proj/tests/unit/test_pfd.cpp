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
#include <vector>

#include <mzk/pfd.hpp>

#include "oracles.hpp"

using namespace mzk;

namespace {
gaussian_rational gq(int n) { return gaussian_rational(rational(n)); }

laurent root_factor(const gaussian_rational& a) {
    return laurent::monomial(1) + laurent::monomial(0, -a);
}
}  // namespace

TEST_CASE("residues match the cover-up oracle on the worked examples", "[pfd]") {
    std::vector<gaussian_rational> roots = {gq(1), gq(2)};

    pfd_coefficients<gaussian_rational> one = pfd({gq(1)}, roots, gq(1));
    REQUIRE(one.a.size() == 2);
    CHECK(one.a[0] == gq(-1));
    CHECK(one.a[1] == gq(1));

    pfd_coefficients<gaussian_rational> x = pfd({gq(0), gq(1)}, roots, gq(1));
    CHECK(x.a[0] == gq(-1));
    CHECK(x.a[1] == gq(2));

    auto oracle_one = oracles::cover_up_residues(roots, [](const gaussian_rational&) {
        return gaussian_rational(rational(1));
    });
    auto oracle_x =
        oracles::cover_up_residues(roots, [](const gaussian_rational& a) { return a; });
    CHECK(one.a == oracle_one);
    CHECK(x.a == oracle_x);
}

TEST_CASE("numerator degree at or above the root count is rejected", "[pfd]") {
    std::vector<gaussian_rational> roots = {gq(1), gq(2)};
    try {
        pfd({gq(0), gq(0), gq(1)}, roots, gq(1));
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::degree_too_high);
    }
    // Trailing zeros do not count toward the degree.
    CHECK_NOTHROW(pfd({gq(1), gq(1), gq(0)}, roots, gq(1)));
    try {
        pfd({gq(1)}, {gq(3), gq(3)}, gq(1));
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::repeated_root);
    }
}

TEST_CASE("reconstruction is exact on random instances", "[pfd]") {
    std::mt19937_64 rng(4242);
    for (int round = 0; round < 50; ++round) {
        std::size_t n = 2 + rng() % 5;  // up to 6 roots
        std::vector<gaussian_rational> roots;
        while (roots.size() < n) {
            gaussian_rational cand = oracles::random_gaussian(rng);
            bool fresh = true;
            for (const auto& r : roots) fresh = fresh && !(r == cand);
            if (fresh) roots.push_back(cand);
        }
        std::vector<gaussian_rational> V(1 + rng() % n);
        for (auto& c : V) c = oracles::random_gaussian(rng);
        gaussian_rational alpha;
        while (alpha.is_zero()) alpha = oracles::random_gaussian(rng);

        pfd_coefficients<gaussian_rational> A = pfd(V, roots, alpha);

        // alpha * sum_i A_i prod_{k != i} (X - a_k) must equal V exactly.
        laurent sum;
        for (std::size_t i = 0; i < n; ++i) {
            laurent term{A.a[i]};
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) term *= root_factor(roots[k]);
            sum += term;
        }
        laurent expect;
        for (std::size_t k = 0; k < V.size(); ++k)
            expect += laurent::monomial(static_cast<long long>(k), V[k]);
        CHECK(alpha * sum == expect);
    }
}

TEST_CASE("series residues carry the exact geometric factors", "[pfd]") {
    // V = 1, U = (X - t)(X + t): residues +-1/(2t).
    rational h(8);
    puiseux_series a1 = series::monomial(big_complex(big_float(1)), 1, 1, h);
    puiseux_series a2 = series::monomial(big_complex(big_float(-1)), 1, 1, h);
    puiseux_series alpha = series::constant(big_complex(big_float(1)), h);

    pfd_coefficients<puiseux_series> A =
        pfd(std::vector<big_complex>{big_complex(big_float(1))}, {a1, a2}, alpha);
    REQUIRE(A.a.size() == 2);
    puiseux_series want0 = series::monomial(big_complex(big_float(1) / 2), -1, 1, rational(4));
    puiseux_series want1 = series::monomial(big_complex(big_float(-1) / 2), -1, 1, rational(4));
    CHECK(is_zero_within(max_deviation(A.a[0], want0)));
    CHECK(is_zero_within(max_deviation(A.a[1], want1)));
}

TEST_CASE("series residues flag unseparated roots", "[pfd]") {
    rational h(6);
    puiseux_series a = series::monomial(big_complex(big_float(1)), 1, 1, h);
    puiseux_series b = a;
    b.coeffs[1] = big_complex(ldexp(big_float(1), -100));  // below working tolerance
    try {
        pfd(std::vector<big_complex>{big_complex(big_float(1))}, {a, b},
            series::constant(big_complex(big_float(1)), h));
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::repeated_root);
    }
}

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

#include <mzk/polyroots.hpp>

using namespace mzk;

namespace {
big_complex bc(double re, double im = 0) { return {big_float(re), big_float(im)}; }

std::vector<big_complex> from_roots(const std::vector<big_complex>& roots) {
    std::vector<big_complex> c{big_complex(big_float(1))};
    for (const auto& r : roots) {
        std::vector<big_complex> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = next;
    }
    return c;
}

big_float match_roots(std::vector<big_complex> got, std::vector<big_complex> want) {
    REQUIRE(got.size() == want.size());
    big_float worst(0);
    for (const auto& w : want) {
        std::size_t best = 0;
        big_float bestd = abs(got[0] - w);
        for (std::size_t i = 1; i < got.size(); ++i) {
            big_float d = abs(got[i] - w);
            if (d < bestd) {
                bestd = d;
                best = i;
            }
        }
        if (bestd > worst) worst = bestd;
        got.erase(got.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}
}  // namespace

TEST_CASE("small degrees solve exactly", "[polyroots]") {
    auto lin = complex_roots({bc(-6), bc(2)});
    REQUIRE(lin.size() == 1);
    CHECK(is_zero_within(abs(lin[0] - bc(3))));

    auto quad = complex_roots(from_roots({bc(0, 1), bc(0, -1)}));  // X^2 + 1
    CHECK(match_roots(quad, {bc(0, 1), bc(0, -1)}) < zero_tolerance());

    auto cancel = complex_roots({bc(1), bc(-1e6), bc(1)});  // X^2 - 10^6 X + 1
    big_complex small = cancel[0].re < cancel[1].re ? cancel[0] : cancel[1];
    CHECK(root_residual_ok({bc(1), bc(-1e6), bc(1)}, small));
}

TEST_CASE("roots of unity and residual contract", "[polyroots]") {
    for (unsigned n : {3u, 5u, 8u}) {
        std::vector<big_complex> c(n + 1);
        c[0] = bc(-1);
        c[n] = bc(1);
        auto roots = complex_roots(c);
        REQUIRE(roots.size() == n);
        for (const auto& r : roots) {
            CHECK(is_zero_within(abs(r) - 1));
            CHECK(root_residual_ok(c, r));
        }
    }
}

TEST_CASE("random simple roots are recovered", "[polyroots]") {
    std::mt19937_64 rng(50);
    std::uniform_real_distribution<double> d(-3, 3);
    for (int round = 0; round < 8; ++round) {
        std::vector<big_complex> want;
        for (int i = 0; i < 6; ++i) want.push_back(bc(d(rng), d(rng)));
        auto got = complex_roots(from_roots(want));
        CHECK(match_roots(got, want) < ldexp(big_float(1), -80));
    }
}

TEST_CASE("multiple roots land inside the cluster tolerance", "[polyroots]") {
    // (X - 1)^2 (X + 2): the double root must come out as two approximations
    // close enough for downstream cluster detection.
    auto roots = complex_roots(from_roots({bc(1), bc(1), bc(-2)}));
    REQUIRE(roots.size() == 3);
    big_float sep = ldexp(big_float(1), -static_cast<int>(precision_bits()) / 4);
    int near_one = 0;
    for (const auto& r : roots)
        if (abs(r - bc(1)) < sep) ++near_one;
    CHECK(near_one == 2);
}

TEST_CASE("origin roots and degenerate inputs", "[polyroots]") {
    auto roots = complex_roots({bc(0), bc(0), bc(1), bc(1)});  // X^2 (X + 1)
    REQUIRE(roots.size() == 3);
    CHECK(is_zero_within(abs(roots[0] - bc(-1))));
    CHECK(is_zero_within(abs(roots[1])));
    CHECK(is_zero_within(abs(roots[2])));
    CHECK_THROWS_AS(complex_roots({}), error);
    CHECK(complex_roots({bc(7)}).empty());
}

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

#include <mzk/bigcomplex.hpp>
#include <mzk/bigfloat.hpp>
#include <mzk/errors.hpp>
#include <mzk/gaussian.hpp>
#include <mzk/rational.hpp>

using namespace mzk;

TEST_CASE("rational parsing canonicalizes", "[scalars]") {
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(rat_num(parse_rational("-3/6")) == bigint(-1));
    CHECK(rat_den(parse_rational("-3/6")) == bigint(2));
    CHECK(parse_rational("4/2") == rational(2));
    CHECK(parse_rational("0/7") == rational(0));
    CHECK(parse_rational("17") == rational(17));
    CHECK(parse_rational("-0") == rational(0));
    CHECK(to_string(parse_rational("10/15")) == "2/3");
    CHECK(to_string(rational(-5)) == "-5");
}

TEST_CASE("rational parsing rejects malformed input", "[scalars]") {
    CHECK_THROWS_AS(parse_rational(""), error);
    CHECK_THROWS_AS(parse_rational("1/0"), error);
    CHECK_THROWS_AS(parse_rational("a/b"), error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), error);
    try {
        parse_rational("x");
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse_error);
    }
}

TEST_CASE("gaussian rationals form a field", "[scalars]") {
    gaussian_rational a(make_rational(1, 2), make_rational(-3, 4));
    gaussian_rational b(rational(2), rational(5));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * gq_i() * gq_i() == -a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK((a / a) == gaussian_rational(rational(1)));
    CHECK_THROWS_AS(a / gaussian_rational(), error);
    CHECK(a.pow(3) == a * a * a);
    CHECK(gaussian_rational(rational(0)).is_zero());
    CHECK(gq_i().pow(4) == gaussian_rational(rational(1)));
}

TEST_CASE("gaussian rational formatting", "[scalars]") {
    CHECK(to_string(gaussian_rational(rational(3), make_rational(-1, 2))) == "3-1/2i");
    CHECK(to_string(gq_i()) == "i");
    CHECK(to_string(-gq_i()) == "-i");
    CHECK(to_string(gaussian_rational()) == "0");
    CHECK(to_string(gaussian_rational(rational(0), rational(2))) == "2i");
}

TEST_CASE("precision guard scopes the working precision", "[scalars]") {
    REQUIRE(precision_bits() == 128);
    {
        precision_guard guard(256);
        CHECK(precision_bits() == 256);
        big_float third = big_float(1) / 3;
        CHECK(abs(third * 3 - 1) < zero_tolerance());
    }
    CHECK(precision_bits() == 128);
    CHECK_THROWS_AS(set_precision_bits(16), error);
}

TEST_CASE("zero tolerance tracks precision and scale", "[scalars]") {
    big_float tol = zero_tolerance();
    CHECK(tol == ldexp(big_float(1), -64));
    CHECK(zero_tolerance(big_float(8)) == ldexp(big_float(8), -64));
    CHECK(is_zero_within(ldexp(big_float(1), -100)));
    CHECK_FALSE(is_zero_within(big_float(1) / 1000));
}

TEST_CASE("big_float conversion from rationals is faithful", "[scalars]") {
    big_float x = to_big_float(make_rational(1, 3));
    CHECK(abs(x * 3 - 1) < zero_tolerance());
    CHECK(to_big_float(rational(-7)) == big_float(-7));
}

TEST_CASE("big_complex arithmetic and modulus", "[scalars]") {
    big_complex i(big_float(0), big_float(1));
    CHECK((i * i).re == big_float(-1));
    big_complex z(big_float(3), big_float(4));
    CHECK(abs(z) == big_float(5));
    big_complex w = z / i;
    CHECK(is_zero_within(abs(w - big_complex(big_float(4), big_float(-3)))));
    CHECK(is_zero_within(abs(pow(z, 2) - z * z)));
    CHECK_THROWS_AS(z / big_complex(), error);
    gaussian_rational g(make_rational(1, 2), make_rational(5, 3));
    big_complex gz = to_big_complex(g);
    CHECK(is_zero_within(abs(gz * 6 - big_complex(big_float(3), big_float(10)))));
}

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

#ifndef MZK_RATIONAL_HPP
#define MZK_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace mzk {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integers and rationals (GMP-backed, expression
/// templates off so they behave as plain value types in generic code).
/// GMP keeps rationals canonical: gcd(|num|, den) = 1 and den >= 1.
using bigint = mp::number<mp::gmp_int, mp::et_off>;
using rational = mp::number<mp::gmp_rational, mp::et_off>;

inline bigint rat_num(const rational& q) { return numerator(q); }
inline bigint rat_den(const rational& q) { return denominator(q); }

inline rational make_rational(const bigint& num, const bigint& den) {
    if (den == 0) fail(errc::invalid_value, "rational with zero denominator");
    return rational(num) / rational(den);  // division canonicalizes
}

/// Parses "p", "-p" or "p/q". GMP's own string constructor does not
/// canonicalize, so we go through make_rational.
inline rational parse_rational(std::string_view text) {
    auto bad = [&] { fail(errc::parse_error, "bad rational '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return rational(bigint(std::string(text)));
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
        return make_rational(bigint(std::string(num)), bigint(std::string(den)));
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const error*>(&e)) throw;
        bad();
    }
    return rational();  // unreachable
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const rational& q) { return q.str(); }

}  // namespace mzk

#endif

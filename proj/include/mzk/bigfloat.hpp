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

#ifndef MZK_BIGFLOAT_HPP
#define MZK_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "rational.hpp"

namespace mzk {

/// Arbitrary-precision binary float (MPFR-backed, runtime precision).
using big_float = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

namespace detail {
inline unsigned digits10_for_bits(unsigned bits) {
    // ceil(bits * log10 2) plus guard digits, so MPFR gets at least `bits`.
    return static_cast<unsigned>((static_cast<unsigned long long>(bits) * 302 + 999) / 1000) + 2;
}
inline unsigned& precision_bits_ref() {
    // First touch pushes the documented default into the backend; the MPFR
    // default is process wide, so the numeric engines stay single threaded.
    static unsigned bits = [] {
        big_float::default_precision(digits10_for_bits(128));
        return 128u;
    }();
    return bits;
}
inline const unsigned precision_bootstrap = precision_bits_ref();
}  // namespace detail

/// Working precision for newly created big_float values, in bits.
inline unsigned precision_bits() { return detail::precision_bits_ref(); }

inline void set_precision_bits(unsigned bits) {
    if (bits < 64) fail(errc::invalid_value, "precision must be at least 64 bits");
    detail::precision_bits_ref() = bits;
    big_float::default_precision(detail::digits10_for_bits(bits));
}

/// Scoped precision override. All big_float values created inside the scope
/// carry the requested precision.
class precision_guard {
public:
    explicit precision_guard(unsigned bits) : saved_bits_(precision_bits()) { set_precision_bits(bits); }
    ~precision_guard() { set_precision_bits(saved_bits_); }
    precision_guard(const precision_guard&) = delete;
    precision_guard& operator=(const precision_guard&) = delete;

private:
    unsigned saved_bits_;
};

/// Certify-or-refine margin: anything at most 2^(-precision/2) * scale is
/// treated as an exact zero by the approximate engines.
inline big_float zero_tolerance(const big_float& scale = big_float(1)) {
    return ldexp(big_float(1), -static_cast<int>(precision_bits() / 2)) * scale;
}

inline bool is_zero_within(const big_float& magnitude, const big_float& scale = big_float(1)) {
    return magnitude <= zero_tolerance(scale);
}

inline big_float to_big_float(const rational& q) {
    return big_float(rat_num(q)) / big_float(rat_den(q));
}

inline big_float to_big_float(const bigint& n) { return big_float(n); }

}  // namespace mzk

#endif

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

#ifndef MZK_FUNCTIONAL_HPP
#define MZK_FUNCTIONAL_HPP

#include <cstdint>
#include <map>
#include <string>

#include "errors.hpp"
#include "gaussian.hpp"
#include "laurent.hpp"

namespace mzk {

enum class domain_tag { laurent, poly };

inline const char* to_string(domain_tag d) {
    return d == domain_tag::laurent ? "laurent" : "poly";
}

inline domain_tag parse_domain_tag(const std::string& s) {
    if (s == "laurent") return domain_tag::laurent;
    if (s == "poly") return domain_tag::poly;
    fail(errc::parse_error, "unknown domain tag '" + s + "'");
}

/// Linear functional on k[X,X^-1] (or k[X]) that vanishes on every X^n with
/// |n| >= N.  Only the window values c_n = L(X^n), |n| <= N-1, are stored;
/// zero entries are dropped.
class functional {
public:
    using exponent_type = std::int64_t;
    using window_map = std::map<exponent_type, gaussian_rational>;

    functional(domain_tag domain, exponent_type N, window_map window)
        : domain_(domain), N_(N), window_(std::move(window)) {
        if (N_ < 1) fail(errc::invalid_value, "functional needs N >= 1");
        bool nonzero = false;
        for (auto it = window_.begin(); it != window_.end();) {
            auto n = it->first;
            if (n <= -N_ || n >= N_)
                fail(errc::invalid_value,
                     "window exponent " + std::to_string(n) + " outside |n| <= N-1");
            if (domain_ == domain_tag::poly && n < 0)
                fail(errc::domain_mismatch, "poly functional cannot value X^" + std::to_string(n));
            if (it->second.is_zero()) {
                it = window_.erase(it);
            } else {
                nonzero = true;
                ++it;
            }
        }
        if (!nonzero) fail(errc::invalid_value, "functional must be non-trivial");
    }

    domain_tag domain() const { return domain_; }
    exponent_type window_size() const { return N_; }
    const window_map& window() const { return window_; }

    /// c_n = L(X^n); zero outside the window by construction.
    gaussian_rational value_at(exponent_type n) const {
        auto it = window_.find(n);
        return it == window_.end() ? gaussian_rational() : it->second;
    }

    friend bool operator==(const functional& a, const functional& b) {
        return a.domain_ == b.domain_ && a.N_ == b.N_ && a.window_ == b.window_;
    }

private:
    domain_tag domain_;
    exponent_type N_;
    window_map window_;
};

/// L(f) by linearity; exact.  Only exponents inside the window contribute.
inline gaussian_rational apply(const functional& L, const laurent& f) {
    if (L.domain() == domain_tag::poly && !f.is_zero() && f.deg_minus() < 0)
        fail(errc::domain_mismatch, "polynomial functional applied to a true Laurent polynomial");
    gaussian_rational acc;
    for (const auto& [n, c] : L.window()) {
        gaussian_rational fn = f.coefficient(n);
        if (!fn.is_zero()) acc = acc + fn * c;
    }
    return acc;
}

/// The constant-term functional on k[X,X^-1]: L(f) = f_0, N = 1.
inline functional constant_term_functional(domain_tag domain = domain_tag::laurent) {
    return functional(domain, 1, {{0, gaussian_rational(rational(1))}});
}

}  // namespace mzk

#endif

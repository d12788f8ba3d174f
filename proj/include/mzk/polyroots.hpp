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

#ifndef MZK_POLYROOTS_HPP
#define MZK_POLYROOTS_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "bigcomplex.hpp"
#include "bigfloat.hpp"
#include "errors.hpp"

namespace mzk {

/// Horner evaluation of sum coeffs[i] X^i.
inline big_complex poly_eval(const std::vector<big_complex>& coeffs, const big_complex& x) {
    big_complex acc{};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

inline std::vector<big_complex> poly_derivative(const std::vector<big_complex>& coeffs) {
    std::vector<big_complex> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d.push_back(big_complex(big_float(static_cast<long>(k))) * coeffs[k]);
    return d;
}

/// Comparison magnitude for the residual contract: sum |a_j| |x|^j.
inline big_float poly_scale(const std::vector<big_complex>& coeffs, const big_complex& x) {
    big_float ax = abs(x), pow(1), acc(0);
    for (const auto& c : coeffs) {
        acc += abs(c) * pow;
        pow *= ax;
    }
    return acc;
}

/// |phi(c)| <= tol * sum |a_j||c|^j with tol = 2^(16 - precision).
inline bool root_residual_ok(const std::vector<big_complex>& coeffs, const big_complex& c) {
    big_float tol = ldexp(big_float(1), 16 - static_cast<int>(precision_bits()));
    return abs(poly_eval(coeffs, c)) <= tol * poly_scale(coeffs, c);
}

/// Principal square root, stable near the branch cut.
inline big_complex complex_sqrt(const big_complex& z) {
    big_float r = abs(z);
    if (r == 0) return {};
    big_float re = sqrt((r + z.re) / 2);
    big_float im = sqrt((r - z.re) / 2);
    if (z.im < 0) im = -im;
    return {re, im};
}

namespace detail {

inline void sort_roots(std::vector<big_complex>& roots) {
    std::sort(roots.begin(), roots.end(), [](const big_complex& a, const big_complex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
}

}  // namespace detail

/// All complex roots of sum coeffs[i] X^i, counted with multiplicity, each
/// meeting the residual contract of root_residual_ok.  Simultaneous Aberth
/// iteration from a deterministic circle of initial points; no randomness,
/// so results are reproducible bit for bit.
inline std::vector<big_complex> complex_roots(std::vector<big_complex> coeffs) {
    while (!coeffs.empty() && is_zero_within(abs(coeffs.back()))) coeffs.pop_back();
    if (coeffs.empty()) fail(errc::invalid_value, "root extraction from the zero polynomial");
    std::vector<big_complex> roots;
    std::size_t strip = 0;
    while (strip + 1 < coeffs.size() && coeffs[strip].re == 0 && coeffs[strip].im == 0) ++strip;
    for (std::size_t k = 0; k < strip; ++k) roots.emplace_back();
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(strip));

    std::size_t n = coeffs.size() - 1;
    if (n == 0) {
        detail::sort_roots(roots);
        return roots;
    }
    if (n == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
        detail::sort_roots(roots);
        return roots;
    }
    if (n == 2) {
        const big_complex &a = coeffs[2], &b = coeffs[1], &c = coeffs[0];
        big_complex d = complex_sqrt(b * b - big_complex(big_float(4)) * a * c);
        // Pick the sign that avoids cancellation in -b -+ d.
        big_complex q = (b.re * d.re + b.im * d.im >= 0) ? -(b + d) : -(b - d);
        q = q / big_complex(big_float(2));
        if (is_zero_within(abs(q))) {
            big_complex r = -b / a / big_complex(big_float(2));
            roots.push_back(r);
            roots.push_back(r);
        } else {
            roots.push_back(q / a);
            roots.push_back(c / q);
        }
        detail::sort_roots(roots);
        return roots;
    }

    // Aberth on the monic normalization.
    std::vector<big_complex> monic = coeffs;
    for (auto& c : monic) c = c / coeffs.back();
    std::vector<big_complex> deriv = poly_derivative(monic);

    big_float radius(0);
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, abs(monic[k]));
    radius += 1;
    std::vector<big_complex> x;
    big_float two_pi = 8 * atan(big_float(1));
    for (std::size_t k = 0; k < n; ++k) {
        big_float theta = two_pi * (big_float(static_cast<long>(k)) + big_float("0.354")) / n;
        x.emplace_back(radius * cos(theta), radius * sin(theta));
    }

    unsigned max_sweeps = 200 + 8 * precision_bits();
    big_float step_floor = ldexp(big_float(1), -static_cast<int>(precision_bits()) - 4);
    for (unsigned sweep = 0; sweep < max_sweeps; ++sweep) {
        bool all_ok = true, moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            // Every point moves every sweep: freezing converged points breaks
            // the mutual repulsion and lets two points share one root.
            big_complex pv = poly_eval(monic, x[i]);
            if (abs(pv) > ldexp(big_float(1), 16 - static_cast<int>(precision_bits())) *
                              poly_scale(monic, x[i]))
                all_ok = false;
            big_complex dv = poly_eval(deriv, x[i]);
            if (dv.re == 0 && dv.im == 0) {
                x[i] = x[i] + big_complex(ldexp(big_float(1), -8), ldexp(big_float(1), -9));
                moved = true;
                continue;
            }
            big_complex newton = pv / dv;
            big_complex repel{};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                big_complex diff = x[i] - x[j];
                if (diff.re == 0 && diff.im == 0)
                    diff = big_complex(ldexp(big_float(1), -static_cast<int>(precision_bits()) / 2));
                repel += big_complex(big_float(1)) / diff;
            }
            big_complex denom = big_complex(big_float(1)) - newton * repel;
            big_complex step = (denom.re == 0 && denom.im == 0) ? newton : newton / denom;
            x[i] -= step;
            if (abs(step) > step_floor * (1 + abs(x[i]))) moved = true;
        }
        if (all_ok) break;
        if (!moved) break;  // stagnated at the rounding floor
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!root_residual_ok(monic, x[i]))
            fail(errc::cluster_unresolved, "root refinement stalled before the residual contract");
    roots.insert(roots.end(), x.begin(), x.end());
    detail::sort_roots(roots);
    return roots;
}

}  // namespace mzk

#endif

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

#ifndef MZK_PFD_HPP
#define MZK_PFD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <mzk/errors.hpp>
#include <mzk/gaussian.hpp>
#include <mzk/puiseux.hpp>

namespace mzk {

/// Residues of V/U at the simple roots of U = alpha (X-a_1)...(X-a_n):
/// V/U = sum_i A_i/(X - a_i), one residue per root, in root order.
template <class K>
struct pfd_coefficients {
    std::vector<K> a;
};

/// Exact residues over the Gaussian rationals.  V is given low to high and
/// may carry trailing zeros; deg V < n is required after trimming them.
inline pfd_coefficients<gaussian_rational> pfd(std::vector<gaussian_rational> V,
                                               const std::vector<gaussian_rational>& roots,
                                               const gaussian_rational& alpha) {
    while (!V.empty() && V.back().is_zero()) V.pop_back();
    const std::size_t n = roots.size();
    if (n == 0) fail(errc::invalid_value, "residues need at least one root");
    if (V.size() > n)
        fail(errc::degree_too_high, "numerator degree " + std::to_string(V.size() - 1) +
                                        " is not below the root count " + std::to_string(n));
    if (alpha.is_zero()) fail(errc::invalid_value, "leading coefficient must be nonzero");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (roots[i] == roots[k])
                fail(errc::repeated_root,
                     "roots " + std::to_string(i) + " and " + std::to_string(k) + " coincide");

    pfd_coefficients<gaussian_rational> A;
    for (std::size_t j = 0; j < n; ++j) {
        gaussian_rational num;
        for (std::size_t k = V.size(); k-- > 0;) num = num * roots[j] + V[k];
        // U'(a_j) = alpha * prod_{i != j} (a_j - a_i) at a simple root.
        gaussian_rational den = alpha;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) den = den * (roots[j] - roots[i]);
        A.a.push_back(num / den);
    }
    return A;
}

/// Residues over Puiseux series roots.  V has constant coefficients (low to
/// high); alpha is the exact leading series of U.  Root separation below the
/// working tolerance is a repeated root: the residue formula needs U' != 0.
inline pfd_coefficients<puiseux_series> pfd(std::vector<big_complex> V,
                                            const std::vector<puiseux_series>& roots,
                                            const puiseux_series& alpha) {
    auto exact_zero = [](const big_complex& c) { return c.re == 0 && c.im == 0; };
    while (!V.empty() && exact_zero(V.back())) V.pop_back();
    const std::size_t n = roots.size();
    if (n == 0) fail(errc::invalid_value, "residues need at least one root");
    if (V.empty()) fail(errc::invalid_value, "series residues need a nonzero numerator");
    if (V.size() > n)
        fail(errc::degree_too_high, "numerator degree " + std::to_string(V.size() - 1) +
                                        " is not below the root count " + std::to_string(n));
    if (alpha.known_zero()) fail(errc::invalid_value, "leading coefficient must be nonzero");
    big_float mag(1);
    for (const auto& a : roots) mag = std::max(mag, detail::series_mag(a));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (is_zero_within(max_deviation(roots[i], roots[k]), mag))
                fail(errc::repeated_root, "roots " + std::to_string(i) + " and " +
                                              std::to_string(k) + " are not separated");

    pfd_coefficients<puiseux_series> A;
    for (std::size_t j = 0; j < n; ++j) {
        puiseux_series num = V.back() * pow(roots[j], static_cast<long>(V.size()) - 1);
        for (std::size_t k = 0; k + 1 < V.size(); ++k)
            if (!exact_zero(V[k])) num = num + V[k] * pow(roots[j], static_cast<long>(k));
        puiseux_series den = alpha;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) den = den * (roots[j] - roots[i]);
        A.a.push_back(num / den);
    }
    return A;
}

}  // namespace mzk

#endif

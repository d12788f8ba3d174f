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

#ifndef MZK_ERRORS_HPP
#define MZK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mzk {

/// Error taxonomy. `input` errors are bad user data (CLI exit 1); `math`
/// errors are well-formed inputs outside an operation's domain or a failed
/// analytic computation (CLI exit 2); `internal` errors always indicate a
/// bug in this library, never a property of the input.
enum class errc {
    parse_error,                    // input
    domain_mismatch,                // input
    invalid_value,                  // input
    not_an_ideal,                   // input
    not_contained,                  // input
    too_large,                      // input
    hypothesis_not_satisfied,       // input
    degree_of_zero,                 // math
    unsupported_support,            // math
    division_by_zero_series,        // math
    ramification_overflow,          // math
    cluster_unresolved,             // math
    zero_valuation_branch,          // math
    nonzero_valuation_at_infinity,  // math
    constant_branch,                // math
    degree_too_high,                // math
    repeated_root,                  // math
    internal_contradiction,         // internal
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::domain_mismatch: return "DomainError";
        case errc::invalid_value: return "InvalidValue";
        case errc::not_an_ideal: return "NotAnIdeal";
        case errc::not_contained: return "NotContained";
        case errc::too_large: return "TooLarge";
        case errc::hypothesis_not_satisfied: return "HypothesisNotSatisfied";
        case errc::degree_of_zero: return "DegreeOfZero";
        case errc::unsupported_support: return "UnsupportedSupport";
        case errc::division_by_zero_series: return "DivisionByZeroSeries";
        case errc::ramification_overflow: return "RamificationOverflow";
        case errc::cluster_unresolved: return "ClusterUnresolved";
        case errc::zero_valuation_branch: return "ZeroValuationBranch";
        case errc::nonzero_valuation_at_infinity: return "NonzeroValuationAtInfinity";
        case errc::constant_branch: return "ConstantBranch";
        case errc::degree_too_high: return "DegreeTooHigh";
        case errc::repeated_root: return "RepeatedRoot";
        case errc::internal_contradiction: return "InternalContradiction";
    }
    return "UnknownError";
}

}  // namespace mzk

#endif

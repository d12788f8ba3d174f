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

#ifndef MZK_IO_HPP
#define MZK_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "finite.hpp"
#include "functional.hpp"
#include "gaussian.hpp"
#include "laurent.hpp"
#include "multipoly.hpp"
#include "mz.hpp"
#include "pfd.hpp"
#include "puiseux.hpp"
#include "rational.hpp"
#include "wz.hpp"

namespace mzk {

/// Field order is insertion order everywhere, so identical inputs produce
/// byte-identical reports.
using json = nlohmann::ordered_json;

// ---- scalars ----------------------------------------------------------

inline json to_json(const rational& q) { return to_string(q); }

inline rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return rational(static_cast<long long>(j.get<std::int64_t>()));
    if (!j.is_string()) fail(errc::parse_error, "expected a rational as \"p/q\" or an integer");
    const std::string s = j.get<std::string>();
    if (s.empty()) fail(errc::parse_error, "empty rational literal");
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = part[0] == '-' || part[0] == '+' ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
        fail(errc::parse_error, "malformed rational literal '" + s + "'");
    bigint d(den);
    if (d == 0) fail(errc::parse_error, "rational with zero denominator");
    return make_rational(bigint(num), d);
}

inline json to_json(const gaussian_rational& g) {
    return json{{"re", to_string(g.re)}, {"im", to_string(g.im)}};
}

inline gaussian_rational gaussian_from_json(const json& j) {
    if (j.is_object()) {
        gaussian_rational g;
        if (j.contains("re")) g.re = rational_from_json(j.at("re"));
        if (j.contains("im")) g.im = rational_from_json(j.at("im"));
        return g;
    }
    return gaussian_rational(rational_from_json(j));
}

inline json to_json(const big_complex& z) { return json::array({z.re.str(), z.im.str()}); }

// ---- polynomials and functionals --------------------------------------

inline json to_json(const laurent& f) {
    json obj = json::object();
    for (const auto& [e, c] : f.terms()) obj[std::to_string(e)] = to_json(c);
    return obj;
}

inline laurent laurent_from_json(const json& j) {
    if (!j.is_object()) fail(errc::parse_error, "expected an exponent-to-coefficient object");
    laurent f;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        long long e = 0;
        try {
            e = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size()) fail(errc::parse_error, "exponent key '" + key + "' is not an integer");
        f.set_coefficient(e, gaussian_from_json(value));
    }
    return f;
}

namespace detail {
inline const json& require_field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        fail(errc::parse_error, std::string("missing field '") + name + "'");
    return j.at(name);
}
inline long long require_integer(const json& j, const char* name) {
    const json& field = require_field(j, name);
    if (!field.is_number_integer())
        fail(errc::parse_error, std::string("field '") + name + "' must be an integer");
    return field.get<std::int64_t>();
}
}  // namespace detail

inline json to_json(const functional& L) {
    json window = json::object();
    for (const auto& [n, c] : L.window()) window[std::to_string(n)] = to_json(c);
    return json{{"domain", to_string(L.domain())},
                {"N", static_cast<std::int64_t>(L.window_size())},
                {"window", std::move(window)}};
}

inline functional functional_from_json(const json& j) {
    const json& domain = detail::require_field(j, "domain");
    if (!domain.is_string()) fail(errc::parse_error, "field 'domain' must be a string");
    domain_tag tag = parse_domain_tag(domain.get<std::string>());
    long long N = detail::require_integer(j, "N");
    const json& window = detail::require_field(j, "window");
    if (!window.is_object()) fail(errc::parse_error, "field 'window' must be an object");
    functional::window_map map;
    for (const auto& [key, value] : window.items()) {
        std::size_t used = 0;
        long long n = 0;
        try {
            n = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size())
            fail(errc::parse_error, "window key '" + key + "' is not an integer");
        map[n] = gaussian_from_json(value);
    }
    return functional(tag, N, std::move(map));
}

// ---- rule-table functionals --------------------------------------------

inline const char* to_string(multi_constraint::kind k) {
    switch (k) {
        case multi_constraint::kind::exponent_eq: return "exponent_eq";
        case multi_constraint::kind::exponent_ge: return "exponent_ge";
        case multi_constraint::kind::total_degree_ge: return "total_degree_ge";
    }
    return "?";
}

inline json to_json(const multi_constraint& c) {
    json j{{"kind", to_string(c.k)}};
    if (c.k != multi_constraint::kind::total_degree_ge)
        j["index"] = static_cast<std::int64_t>(c.index);
    j["bound"] = static_cast<std::int64_t>(c.bound);
    return j;
}

inline json to_json(const multi_rules& L) {
    json rules = json::array();
    for (const auto& rule : L.rules()) {
        json when = json::array();
        for (const auto& c : rule.constraints) when.push_back(to_json(c));
        rules.push_back(json{{"when", std::move(when)}, {"value", to_json(rule.value)}});
    }
    return json{{"arity", static_cast<std::int64_t>(L.arity())},
                {"rules", std::move(rules)},
                {"default", to_json(L.default_value())}};
}

inline multi_rules rules_from_json(const json& j) {
    long long arity = detail::require_integer(j, "arity");
    if (arity < 1) fail(errc::parse_error, "field 'arity' must be >= 1");
    const json& rules_field = detail::require_field(j, "rules");
    if (!rules_field.is_array()) fail(errc::parse_error, "field 'rules' must be an array");
    std::vector<multi_rule> rules;
    for (const json& rj : rules_field) {
        multi_rule rule;
        if (rj.contains("when")) {
            const json& when = rj.at("when");
            if (!when.is_array()) fail(errc::parse_error, "field 'when' must be an array");
            for (const json& cj : when) {
                const json& kind = detail::require_field(cj, "kind");
                if (!kind.is_string()) fail(errc::parse_error, "constraint 'kind' must be a string");
                std::string k = kind.get<std::string>();
                multi_constraint c;
                if (k == "exponent_eq")
                    c.k = multi_constraint::kind::exponent_eq;
                else if (k == "exponent_ge")
                    c.k = multi_constraint::kind::exponent_ge;
                else if (k == "total_degree_ge")
                    c.k = multi_constraint::kind::total_degree_ge;
                else
                    fail(errc::parse_error, "unknown constraint kind '" + k + "'");
                if (c.k != multi_constraint::kind::total_degree_ge)
                    c.index = static_cast<std::size_t>(detail::require_integer(cj, "index"));
                long long bound = detail::require_integer(cj, "bound");
                if (bound < 0) fail(errc::parse_error, "constraint 'bound' must be >= 0");
                c.bound = static_cast<std::uint64_t>(bound);
                rule.constraints.push_back(c);
            }
        }
        rule.value = gaussian_from_json(detail::require_field(rj, "value"));
        rules.push_back(std::move(rule));
    }
    gaussian_rational default_value;
    if (j.contains("default")) default_value = gaussian_from_json(j.at("default"));
    return multi_rules(static_cast<std::size_t>(arity), std::move(rules), default_value);
}

inline json to_json(const multi_poly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json exps = json::array();
        for (std::uint64_t v : e) exps.push_back(static_cast<std::int64_t>(v));
        terms.push_back(json{{"exponents", std::move(exps)}, {"coefficient", to_json(c)}});
    }
    return json{{"arity", static_cast<std::int64_t>(f.arity())}, {"terms", std::move(terms)}};
}

// ---- finite algebras ----------------------------------------------------

inline json to_json(const finite_algebra& A) {
    json table = json::array();
    for (const auto& row : A.table()) {
        json jrow = json::array();
        for (const auto& cell : row) jrow.push_back(cell);
        table.push_back(std::move(jrow));
    }
    return json{{"q", A.field().q()},
                {"d", A.dim()},
                {"unit", A.unit()},
                {"table", std::move(table)}};
}

inline finite_algebra algebra_from_json(const json& j) {
    long long q = detail::require_integer(j, "q");
    long long d = detail::require_integer(j, "d");
    if (q < 2 || q > 81) fail(errc::parse_error, "field 'q' must lie in [2, 81]");
    if (d < 0) fail(errc::parse_error, "field 'd' must be >= 0");
    auto int_vector = [](const json& v, const char* name) {
        if (!v.is_array()) fail(errc::parse_error, std::string(name) + " must be an array");
        algebra_element out;
        for (const json& x : v) {
            if (!x.is_number_integer())
                fail(errc::parse_error, std::string(name) + " entries must be integers");
            out.push_back(static_cast<int>(x.get<std::int64_t>()));
        }
        return out;
    };
    const json& table_field = detail::require_field(j, "table");
    if (!table_field.is_array() || static_cast<long long>(table_field.size()) != d)
        fail(errc::parse_error, "field 'table' must be a d x d array of coefficient vectors");
    std::vector<std::vector<algebra_element>> table;
    for (const json& row : table_field) {
        if (!row.is_array() || static_cast<long long>(row.size()) != d)
            fail(errc::parse_error, "field 'table' must be a d x d array of coefficient vectors");
        std::vector<algebra_element> cells;
        for (const json& cell : row) cells.push_back(int_vector(cell, "structure constant"));
        table.push_back(std::move(cells));
    }
    algebra_element unit = int_vector(detail::require_field(j, "unit"), "field 'unit'");
    return finite_algebra(finite_field(static_cast<int>(q)), std::move(table), std::move(unit));
}

inline json to_json(const subspace& S) {
    json basis = json::array();
    for (const auto& row : S.basis) basis.push_back(row);
    return json{{"tag", to_string(S.tag)},
                {"basis", std::move(basis)},
                {"elements", S.elements}};
}

/// Accepts either a bare array of generator coordinate vectors or
/// {"tag": ..., "generators": [...]}; generators span the subspace.
inline subspace subspace_from_json(const finite_algebra& A, const json& j) {
    scalar_tag tag = scalar_tag::prime_field;
    const json* gens = &j;
    if (j.is_object()) {
        if (j.contains("tag")) {
            const json& t = j.at("tag");
            if (!t.is_string()) fail(errc::parse_error, "field 'tag' must be a string");
            std::string s = t.get<std::string>();
            if (s == "prime_field")
                tag = scalar_tag::prime_field;
            else if (s == "full_field")
                tag = scalar_tag::full_field;
            else
                fail(errc::parse_error, "unknown scalar tag '" + s + "'");
        }
        gens = &detail::require_field(j, "generators");
    }
    if (!gens->is_array()) fail(errc::parse_error, "subspace generators must be an array");
    std::vector<algebra_element> generators;
    for (const json& g : *gens) {
        if (!g.is_array() || static_cast<long>(g.size()) != A.dim())
            fail(errc::parse_error, "each generator must list d coordinates");
        algebra_element v;
        for (const json& x : g) {
            if (!x.is_number_integer())
                fail(errc::parse_error, "generator coordinates must be integers");
            long long c = x.get<std::int64_t>();
            if (c < 0 || c >= A.field().q())
                fail(errc::parse_error, "generator coordinate outside the field");
            v.push_back(static_cast<int>(c));
        }
        generators.push_back(std::move(v));
    }
    return span_subspace(A, tag, generators);
}

// ---- engine reports -----------------------------------------------------

inline const char* to_string(mz_reason r) {
    return r == mz_reason::L1_nonzero ? "L1Nonzero" : "L1ZeroWithWitness";
}

template <typename Poly>
json to_json(const mz_witness<Poly>& w) {
    return json{{"f", to_json(w.f)}, {"g", to_json(w.g)}, {"m", w.m}};
}

template <typename Poly>
json to_json(const mz_verdict<Poly>& v) {
    json j{{"isMz", v.is_mz}, {"reason", to_string(v.reason)}};
    j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
    return j;
}

inline json to_json(const radical_cert& c) {
    json j{{"status", to_string(c.status)}, {"certified", c.certified}};
    if (c.status == radical_status::not_in_radical) {
        j["m"] = c.m;
        j["value"] = to_json(c.value);
    }
    if (c.status == radical_status::inconclusive) j["mMax"] = c.m_max;
    j["checkedRange"] = json::array({c.checked_range.first, c.checked_range.second});
    return j;
}

inline json to_json(const sr_bound_result& r) {
    return json{{"bound", r.bound},
                {"side", to_string(r.side)},
                {"verifiedRange", json::array({r.verified_range.first, r.verified_range.second})}};
}

inline json to_json(const pfd_coefficients<gaussian_rational>& c) {
    json residues = json::array();
    for (const auto& a : c.a) residues.push_back(to_json(a));
    return json{{"residues", std::move(residues)}};
}

inline json to_json(const puiseux_series& a) {
    json coeffs = json::array();
    for (const auto& c : a.coeffs) coeffs.push_back(to_json(c));
    return json{{"p", a.p}, {"e0", a.e0}, {"coeffs", std::move(coeffs)}};
}

/// Branches with their valuations, certified residual floors, and the S+/S-
/// split when classify_branches has run.
inline json to_json(const branch_set& B) {
    json branches = json::array();
    for (std::size_t i = 0; i < B.branches.size(); ++i) {
        json b = to_json(B.branches[i]);
        b["valuation"] =
            B.valuations[i] ? json(to_string(*B.valuations[i])) : json(nullptr);
        b["residualValuation"] = to_string(B.residual_floors[i]);
        branches.push_back(std::move(b));
    }
    json sp = json::array(), sm = json::array();
    for (std::size_t i : B.s_plus) sp.push_back(static_cast<std::int64_t>(i));
    for (std::size_t i : B.s_minus) sm.push_back(static_cast<std::int64_t>(i));
    return json{{"p", B.p},
                {"branches", std::move(branches)},
                {"sPlus", std::move(sp)},
                {"sMinus", std::move(sm)}};
}

inline json to_json(const margin_report& m) {
    json checks = json::array();
    for (const auto& c : m.checks) {
        json cj{{"m", c.m}};
        cj["w"] = c.w_value ? json(to_string(*c.w_value)) : json(nullptr);
        cj["holds"] = c.holds;
        checks.push_back(std::move(cj));
    }
    return json{{"margin", to_string(m.margin)}, {"checks", std::move(checks)}};
}

inline json to_json(const wz_series& w) {
    json coeffs = json::array();
    for (std::size_t j = 0; j < w.w.size(); ++j) {
        json record{{"z", static_cast<std::int64_t>(j)}, {"value", to_json(w.w[j])}};
        if (!w.exact.empty()) record["exact"] = to_json(w.exact[j]);
        coeffs.push_back(std::move(record));
    }
    return json{{"route", to_string(w.route)},
                {"certifiedOrder", w.certified},
                {"coefficients", std::move(coeffs)}};
}

inline json to_json(const zhao_report& r) {
    return json{{"mz", r.mz}, {"idempotentsAbsorbed", r.idempotents_absorbed}, {"agree", r.agree}};
}

inline json to_json(const quotient_report& r) {
    return json{{"mzWhole", r.mz_whole}, {"mzQuotient", r.mz_quotient}, {"agree", r.agree}};
}

inline json to_json(const equiv_report& r) {
    return json{{"checked", r.checked}, {"failures", r.failures}, {"allHold", r.all_hold()}};
}

// ---- run configuration ----------------------------------------------------

/// Settings echoed into every report for reproducibility.
struct run_config {
    unsigned precision = 128;
    long z_order = 8;        // truncation order in z (wz); 0 is a single coefficient
    long t_order = 12;       // branch certification order in t
    long max_m = 64;         // witness scan bound
    std::uint64_t seed = 0;  // randomized suites only
    std::string tolerance;   // decimal override; empty derives from precision
    std::string input_path;

    void validate() const {
        if (precision < 64) fail(errc::invalid_value, "precision must be >= 64 bits");
        if (z_order < 0) fail(errc::invalid_value, "order must be >= 0");
        if (t_order < 1) fail(errc::invalid_value, "t-order must be >= 1");
        if (max_m < 1) fail(errc::invalid_value, "max-m must be >= 1");
    }
};

inline json to_json(const run_config& rc) {
    json j{{"precision", rc.precision},
           {"zOrder", rc.z_order},
           {"tOrder", rc.t_order},
           {"mMax", rc.max_m},
           {"seed", rc.seed}};
    if (!rc.tolerance.empty()) j["tolerance"] = rc.tolerance;
    if (!rc.input_path.empty()) j["input"] = rc.input_path;
    return j;
}

// ---- files ----------------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, "invalid JSON in '" + path + "': " + e.what());
    }
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace mzk

#endif

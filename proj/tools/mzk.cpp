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

// Command-line front end.  Every subcommand reads exact inputs (JSON files or
// polynomial expressions), runs one engine pipeline, and prints a single JSON
// report to stdout.  Reports embed the run configuration so a printed report
// is enough to reproduce itself.
//
// Exit codes: 0 success (including "is an MZ-space"), 3 "not an MZ-space",
// 1 invalid input, 2 mathematical obstruction or unsupported instance.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <mzk/mzk.hpp>

namespace {

using mzk::json;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_math = 2;
constexpr int exit_not_mz = 3;

int exit_for(mzk::errc code) {
    switch (code) {
        case mzk::errc::parse_error:
        case mzk::errc::domain_mismatch:
        case mzk::errc::invalid_value:
        case mzk::errc::not_an_ideal:
        case mzk::errc::not_contained:
        case mzk::errc::too_large:
        case mzk::errc::hypothesis_not_satisfied:
            return exit_input;
        default:
            return exit_math;
    }
}

struct cli_state {
    mzk::run_config cfg;
    bool pretty = false;
    bool max_m_given = false;
};

void emit(const json& report, const cli_state& st) {
    if (st.pretty)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << report.dump() << "\n";
}

json report_head(const char* command, const cli_state& st) {
    json j;
    j["command"] = command;
    j["config"] = mzk::to_json(st.cfg);
    return j;
}

/// Shared flags.  --precision falls back to MZK_PRECISION, then to 128 bits.
void add_common_flags(CLI::App* cmd, cli_state& st) {
    unsigned default_precision = 128;
    if (const char* env = std::getenv("MZK_PRECISION")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 64 && v <= 65536)
            default_precision = static_cast<unsigned>(v);
    }
    st.cfg.precision = default_precision;
    cmd->add_option("--precision", st.cfg.precision, "working precision in bits (>= 64)")
        ->capture_default_str();
    cmd->add_option("--order", st.cfg.z_order, "series truncation order in z")
        ->capture_default_str();
    auto* mm = cmd->add_option("--max-m", st.cfg.max_m, "bound for witness power scans")
                   ->capture_default_str();
    cmd->add_option("--seed", st.cfg.seed, "seed echoed into the report")->capture_default_str();
    cmd->add_flag("--json", "compact single-line JSON output (default)");
    cmd->add_flag("--pretty", st.pretty, "indented JSON output");
    cmd->parse_complete_callback([mm, &st] { st.max_m_given = mm->count() > 0; });
}

mzk::functional load_functional(const std::string& path) {
    return mzk::functional_from_json(mzk::load_json_file(path));
}

/// Inline JSON (starts with '[' or '{') or a path to a JSON file.
json load_inline_or_file(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (text[i] == '[' || text[i] == '{'))
        return mzk::parse_json_text(text);
    return mzk::load_json_file(text);
}

int cmd_decide(const std::string& path, const cli_state& st) {
    mzk::functional L = load_functional(path);
    mzk::mz_verdict<mzk::laurent> v = mzk::decide_mz(L);
    json rep = report_head("decide", st);
    rep["functional"] = mzk::to_json(L);
    rep["verdict"] = mzk::to_json(v);
    emit(rep, st);
    return v.is_mz ? exit_ok : exit_not_mz;
}

int cmd_witness(const std::string& path, const std::string& f_text, const cli_state& st) {
    mzk::functional L = load_functional(path);
    mzk::laurent f = mzk::parse_laurent(f_text);
    mzk::radical_cert cert = mzk::radical_membership(L, f, st.cfg.max_m);
    json rep = report_head("witness", st);
    rep["functional"] = mzk::to_json(L);
    rep["f"] = mzk::to_json(f);
    rep["certificate"] = mzk::to_json(cert);
    emit(rep, st);
    return exit_ok;
}

int cmd_srbound(const std::string& path, const std::string& f_text, const std::string& g_text,
                const cli_state& st) {
    mzk::functional L = load_functional(path);
    mzk::laurent f = mzk::parse_laurent(f_text);
    mzk::laurent g = mzk::parse_laurent(g_text);
    mzk::sr_bound_result r = mzk::sr_bound(L, f, g);
    json rep = report_head("srbound", st);
    rep["functional"] = mzk::to_json(L);
    rep["f"] = mzk::to_json(f);
    rep["g"] = mzk::to_json(g);
    rep["result"] = mzk::to_json(r);
    emit(rep, st);
    return exit_ok;
}

std::string max_deviation(const mzk::wz_series& a, const mzk::wz_series& b) {
    long upto = std::min({a.certified, b.certified,
                          static_cast<long>(a.w.size()) - 1, static_cast<long>(b.w.size()) - 1});
    mzk::big_float dev(0);
    for (long j = 0; j <= upto; ++j) {
        mzk::big_float d = mzk::abs(a.w[static_cast<std::size_t>(j)] -
                                    b.w[static_cast<std::size_t>(j)]);
        if (d > dev) dev = d;
    }
    return dev.str();
}

int cmd_wz(const std::string& path, const std::string& f_text, const std::string& route,
           const cli_state& st) {
    mzk::functional L = load_functional(path);
    mzk::laurent f = mzk::parse_laurent(f_text);
    long T = st.cfg.z_order;
    json rep = report_head("wz", st);
    rep["functional"] = mzk::to_json(L);
    rep["f"] = mzk::to_json(f);
    std::vector<mzk::wz_series> runs;
    if (route == "direct" || route == "all") runs.push_back(mzk::wz_direct(L, f, T));
    if (route == "pfd" || route == "all") runs.push_back(mzk::wz_via_pfd(L, f, T));
    if (route == "closed" || route == "all") runs.push_back(mzk::wz_closed_form(L, f, T));
    json routes = json::array();
    for (const mzk::wz_series& s : runs) routes.push_back(mzk::to_json(s));
    rep["routes"] = std::move(routes);
    if (route == "all") {
        json dev;
        dev["directVsPfd"] = max_deviation(runs[0], runs[1]);
        dev["directVsClosed"] = max_deviation(runs[0], runs[2]);
        dev["pfdVsClosed"] = max_deviation(runs[1], runs[2]);
        rep["deviations"] = std::move(dev);
    }
    emit(rep, st);
    return exit_ok;
}

int cmd_branches(const std::string& f_text, bool at_infinity, const cli_state& st) {
    mzk::laurent f = mzk::parse_laurent(f_text);
    mzk::rational order(st.cfg.z_order);
    json rep = report_head("branches", st);
    rep["f"] = mzk::to_json(f);
    if (at_infinity) {
        mzk::branch_set B = mzk::branches_at_infinity(f, order);
        rep["atInfinity"] = true;
        rep["report"] = mzk::to_json(B);
        long m_hi = st.max_m_given ? st.cfg.max_m : 2;
        json margins = json::array();
        for (const mzk::puiseux_series& a : B.branches)
            margins.push_back(mzk::to_json(mzk::infinity_margin(a, 0, m_hi)));
        rep["margins"] = std::move(margins);
    } else {
        mzk::u_construction U = mzk::build_U(f);
        mzk::branch_set B = mzk::factor_branches(U, order);
        mzk::classify_branches(B, U);
        rep["atInfinity"] = false;
        rep["report"] = mzk::to_json(B);
    }
    emit(rep, st);
    return exit_ok;
}

int cmd_pfd(const std::string& spec_text, const cli_state& st) {
    json j = load_inline_or_file(spec_text);
    std::vector<mzk::gaussian_rational> V;
    for (const json& c : mzk::detail::require_field(j, "V"))
        V.push_back(mzk::gaussian_from_json(c));
    std::vector<mzk::gaussian_rational> roots;
    for (const json& c : mzk::detail::require_field(j, "roots"))
        roots.push_back(mzk::gaussian_from_json(c));
    mzk::gaussian_rational alpha = mzk::gaussian_from_json(mzk::detail::require_field(j, "alpha"));
    mzk::pfd_coefficients<mzk::gaussian_rational> A = mzk::pfd(V, roots, alpha);
    json rep = report_head("pfd", st);
    rep["result"] = mzk::to_json(A);
    emit(rep, st);
    return exit_ok;
}

int cmd_finite(const std::string& path, bool enumerate, bool zhao, const std::string& tag_name,
               const std::vector<std::string>& quotient_args, const cli_state& st) {
    mzk::finite_algebra A = mzk::algebra_from_json(mzk::load_json_file(path));
    mzk::scalar_tag tag =
        tag_name == "full_field" ? mzk::scalar_tag::full_field : mzk::scalar_tag::prime_field;
    json rep = report_head("finite", st);
    rep["q"] = A.field().q();
    rep["d"] = A.dim();
    if (enumerate) {
        std::vector<mzk::subspace> mz = mzk::enumerate_mz(A, tag);
        rep["action"] = "enumerate-mz";
        rep["tag"] = mzk::to_string(tag);
        json spaces = json::array();
        for (const mzk::subspace& S : mz) spaces.push_back(mzk::to_json(S));
        rep["mzSubspaces"] = std::move(spaces);
        rep["count"] = mz.size();
        emit(rep, st);
        return exit_ok;
    }
    if (zhao) {
        rep["action"] = "zhao-check";
        rep["tag"] = mzk::to_string(tag);
        long checked = 0;
        json disagreements = json::array();
        for (const mzk::subspace& M : mzk::enumerate_subspaces(A, tag)) {
            mzk::zhao_report zr = mzk::zhao_check(A, M);
            ++checked;
            if (!zr.agree) {
                json d = mzk::to_json(zr);
                d["subspace"] = mzk::to_json(M);
                disagreements.push_back(std::move(d));
            }
        }
        rep["checked"] = checked;
        rep["allAgree"] = disagreements.empty();
        rep["disagreements"] = std::move(disagreements);
        mzk::equiv_report eq = mzk::r_ideal_equiv_check(A);
        rep["radicalIdealEquivalence"] = mzk::to_json(eq);
        emit(rep, st);
        return (rep["allAgree"].get<bool>() && eq.all_hold()) ? exit_ok : exit_math;
    }
    // --quotient I M
    mzk::subspace I = mzk::subspace_from_json(A, load_inline_or_file(quotient_args[0]));
    mzk::subspace M = mzk::subspace_from_json(A, load_inline_or_file(quotient_args[1]));
    mzk::quotient_report qr = mzk::quotient_mz_check(A, I, M);
    rep["action"] = "quotient";
    rep["ideal"] = mzk::to_json(I);
    rep["subspace"] = mzk::to_json(M);
    rep["result"] = mzk::to_json(qr);
    emit(rep, st);
    return qr.agree ? exit_ok : exit_math;
}

int cmd_multi(const std::string& path, const cli_state& st) {
    json j = mzk::load_json_file(path);
    mzk::multi_rules Lm = mzk::rules_from_json(j);
    std::uint64_t N = static_cast<std::uint64_t>(mzk::detail::require_integer(j, "N"));
    json rep = report_head("multi", st);
    rep["arity"] = Lm.arity();
    rep["N"] = N;
    std::optional<std::string> violation = mzk::multi_hypothesis_violation(Lm, N);
    rep["hypothesisCertified"] = !violation.has_value();
    if (!violation) {
        mzk::mz_verdict<mzk::multi_poly> v = mzk::decide_mz_multi(Lm, N);
        rep["verdict"] = mzk::to_json(v);
        emit(rep, st);
        return v.is_mz ? exit_ok : exit_not_mz;
    }
    // Structural hypothesis fails: hunt for a concrete refutation instead.
    rep["violation"] = *violation;
    std::vector<mzk::multi_poly> vars;
    for (std::size_t i = 0; i < Lm.arity(); ++i)
        vars.push_back(mzk::multi_poly::variable(Lm.arity(), i));
    std::vector<mzk::multi_poly> gs = vars;
    gs.push_back(mzk::multi_poly::one(Lm.arity()));
    std::optional<mzk::multi_witness_result> w =
        mzk::not_mz_witness_multi(Lm, vars, gs, st.cfg.max_m);
    if (w) {
        json wj;
        wj["f"] = mzk::to_json(w->f);
        wj["g"] = mzk::to_json(w->g);
        wj["failingM"] = w->failing_m;
        rep["witness"] = std::move(wj);
        rep["isMz"] = false;
        emit(rep, st);
        return exit_not_mz;
    }
    rep["witness"] = nullptr;
    emit(rep, st);
    return exit_math;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mzk: decides when the kernel of a linear functional on (Laurent) polynomial\n"
        "algebras is a Mathieu-Zhao space, with certificates.\n\n"
        "Polynomial expressions use X as the variable: terms like X^2, X^-3, 2X,\n"
        "(3+2i)X^5, 1/2 X, combined with + - * / and parentheses."};
    app.require_subcommand(1);

    cli_state st;

    auto* decide = app.add_subcommand("decide", "MZ verdict for Ker L from a functional file");
    std::string decide_path;
    decide->add_option("functional", decide_path, "functional JSON file")->required();
    add_common_flags(decide, st);

    auto* witness = app.add_subcommand("witness", "radical membership certificate for f");
    std::string witness_path, witness_f;
    witness->add_option("functional", witness_path, "functional JSON file")->required();
    witness->add_option("f", witness_f, "polynomial expression")->required();
    add_common_flags(witness, st);

    auto* srbound = app.add_subcommand("srbound", "vanishing bound for L(g f^m)");
    std::string sr_path, sr_f, sr_g;
    srbound->add_option("functional", sr_path, "functional JSON file")->required();
    srbound->add_option("f", sr_f, "one-sided polynomial expression")->required();
    srbound->add_option("g", sr_g, "multiplier polynomial expression")->required();
    add_common_flags(srbound, st);

    auto* wz = app.add_subcommand("wz", "W(z) = sum L(f^j) z^j by one or all routes");
    std::string wz_path, wz_f, wz_route = "all";
    wz->add_option("functional", wz_path, "functional JSON file")->required();
    wz->add_option("f", wz_f, "polynomial expression")->required();
    wz->add_option("--route", wz_route, "direct | pfd | closed | all")
        ->check(CLI::IsMember({"direct", "pfd", "closed", "all"}))
        ->capture_default_str();
    add_common_flags(wz, st);

    auto* branches = app.add_subcommand("branches", "Newton-Puiseux branches of U or at infinity");
    std::string br_f;
    bool at_infinity = false;
    branches->add_option("f", br_f, "polynomial expression, mixed support")->required();
    branches->add_flag("--at-infinity", at_infinity, "expand branches of X^s f(X) = 1/z at infinity");
    add_common_flags(branches, st);

    auto* pfd = app.add_subcommand("pfd", "exact partial fraction residues");
    std::string pfd_spec;
    pfd->add_option("spec", pfd_spec, "JSON {V, roots, alpha}, inline or a file path")->required();
    add_common_flags(pfd, st);

    auto* finite = app.add_subcommand("finite", "exhaustive MZ analysis of a finite algebra");
    std::string fin_path, fin_tag = "prime_field", fin_ideal, fin_subspace;
    bool fin_enum = false, fin_zhao = false, fin_quot = false;
    finite->add_option("algebra", fin_path, "algebra JSON file")->required();
    finite->add_flag("--enumerate-mz", fin_enum, "list every MZ subspace");
    finite->add_flag("--zhao-check", fin_zhao, "idempotent and radical-ideal cross checks");
    finite->add_flag("--quotient", fin_quot,
                     "compare MZ verdicts of M in A and M/I in A/I; takes the ideal and the "
                     "subspace as generator lists (inline JSON or file paths)");
    finite->add_option("ideal", fin_ideal, "ideal generators, with --quotient");
    finite->add_option("subspace", fin_subspace, "subspace generators, with --quotient");
    finite->add_option("--tag", fin_tag, "subspace scalars: prime_field | full_field")
        ->check(CLI::IsMember({"prime_field", "full_field"}))
        ->capture_default_str();
    add_common_flags(finite, st);

    auto* multi = app.add_subcommand("multi", "multivariate rules: hypothesis check and verdict");
    std::string multi_path;
    multi->add_option("rules", multi_path, "rules JSON file with arity, N, rules, default")
        ->required();
    add_common_flags(multi, st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        st.cfg.validate();
        mzk::precision_guard guard(st.cfg.precision);
        if (decide->parsed()) return cmd_decide(decide_path, st);
        if (witness->parsed()) return cmd_witness(witness_path, witness_f, st);
        if (srbound->parsed()) return cmd_srbound(sr_path, sr_f, sr_g, st);
        if (wz->parsed()) return cmd_wz(wz_path, wz_f, wz_route, st);
        if (branches->parsed()) return cmd_branches(br_f, at_infinity, st);
        if (pfd->parsed()) return cmd_pfd(pfd_spec, st);
        if (finite->parsed()) {
            int actions = (fin_enum ? 1 : 0) + (fin_zhao ? 1 : 0) + (fin_quot ? 1 : 0);
            if (actions != 1)
                mzk::fail(mzk::errc::invalid_value,
                          "pick exactly one of --enumerate-mz, --zhao-check, --quotient");
            if (fin_quot && (fin_ideal.empty() || fin_subspace.empty()))
                mzk::fail(mzk::errc::invalid_value,
                          "--quotient needs ideal and subspace generator arguments");
            if (!fin_quot && !(fin_ideal.empty() && fin_subspace.empty()))
                mzk::fail(mzk::errc::invalid_value,
                          "generator arguments are only meaningful with --quotient");
            return cmd_finite(fin_path, fin_enum, fin_zhao, fin_tag, {fin_ideal, fin_subspace},
                              st);
        }
        if (multi->parsed()) return cmd_multi(multi_path, st);
    } catch (const mzk::error& e) {
        json err;
        err["error"] = {{"code", mzk::errc_name(e.code())}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"code", "Unexpected"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return exit_math;
    }
    return exit_input;
}

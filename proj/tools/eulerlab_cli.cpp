// eulerlab — command-line front end.
//
// Exit codes: 0 success, 1 identity check failed, 2 usage/parse/domain error,
// 3 requested precision unachievable (precision loss or term-cap exceeded).

#include "eulerlab/bernoulli.hpp"
#include "eulerlab/complex.hpp"
#include "eulerlab/conjecture.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/mzv.hpp"
#include "eulerlab/parametric.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/reduction.hpp"
#include "eulerlab/registry.hpp"
#include "eulerlab/series_value.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

namespace {

using namespace eulerlab;

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string tok = text.substr(pos, comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("invalid integer list entry: '" + tok + "'");
        const unsigned long v = std::stoul(tok);
        if (v == 0 || v > 1000000) throw DomainError("list entry out of range: " + tok);
        out.push_back(static_cast<unsigned>(v));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (out.empty()) throw DomainError("empty integer list");
    return out;
}

PrecisionContext make_context(unsigned digits, std::uint64_t max_terms) {
    PrecisionContext ctx;
    ctx.digits = digits;
    if (max_terms > 0) ctx.max_terms = max_terms;
    ctx.validate();
    return ctx;
}

// ---------------------------------------------------------------------------
// output helpers
// ---------------------------------------------------------------------------

double dbl(const Real& v) { return v.convert_to<double>(); }

void print_series_value(const char* label, const SeriesValue& v, unsigned digits) {
    std::printf("%-9s %s\n", label, to_string(v.value, digits).c_str());
    std::printf("%-9s %.6e   terms %llu   method %s\n", "bound", dbl(v.error_bound),
                static_cast<unsigned long long>(v.terms_used), method_name(v.method));
    for (const auto& n : v.notes) std::printf("%-9s %s\n", "note", n.c_str());
}

bool report_pair(const SidePair& sp, unsigned digits, const Real& tol) {
    const bool ok = sp.residual <= tol;
    std::printf("lhs       %s\n", to_string(sp.lhs.value, digits).c_str());
    std::printf("rhs       %s\n", to_string(sp.rhs.value, digits).c_str());
    std::printf("residual  %.6e\n", dbl(sp.residual));
    std::printf("bound     %.6e\n", dbl(sp.lhs.error_bound + sp.rhs.error_bound));
    std::printf("tolerance %.6e\n", dbl(tol));
    std::printf("status    %s\n", ok ? "OK" : "MISMATCH");
    return ok;
}

Real cli_tolerance(unsigned digits, double override_tol) {
    Real tol = pow10_neg(digits >= 6 ? digits - 5 : 1);
    if (override_tol > 0) tol = std::max(tol, Real(override_tol));
    return tol;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_eval(const std::string& index_text, unsigned digits, std::uint64_t max_terms) {
    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());
    const auto idx = mzv::MZVIndex::parse(index_text);
    const auto v = mzv::mzv_eval(idx, ctx);
    std::printf("index     %s   depth %zu   weight %zu\n", idx.to_string().c_str(),
                static_cast<std::size_t>(idx.depth()),
                static_cast<std::size_t>(idx.weight()));
    print_series_value("value", v, digits);
    return 0;
}

struct ParamArgs {
    std::string identity;
    std::string x_text;
    std::string y_text;
    unsigned r = 1;
    unsigned k = 1;
    bool limit_path = false;
};

Complex require_arg(const std::string& text, const char* flag, const std::string& id) {
    if (text.empty())
        throw DomainError("identity '" + id + "' requires " + flag);
    return parse_complex(text);
}

int cmd_param(const ParamArgs& a, unsigned digits, std::uint64_t max_terms) {
    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());
    const Real tol = cli_tolerance(digits, 0);
    const auto& id = a.identity;

    if (id == "eu-dual") {
        return report_pair(
                   parametric::eu_dual_sides(require_arg(a.x_text, "--x", id), ctx),
                   digits, tol)
                   ? 0
                   : 1;
    }
    if (id == "eu-dual-coeff") {
        return report_pair(parametric::eu_dual_coefficient(a.k, ctx), digits, tol) ? 0
                                                                                   : 1;
    }
    if (id == "z-gen") {
        return report_pair(parametric::z_gen(require_arg(a.x_text, "--x", id), ctx),
                           digits, tol)
                   ? 0
                   : 1;
    }
    if (id == "zetas1") {
        return report_pair(
                   parametric::zetas1_gf_sides(require_arg(a.x_text, "--x", id), ctx),
                   digits, tol)
                   ? 0
                   : 1;
    }
    if (id == "s-suite") {
        const auto r = parametric::s_suite(require_arg(a.x_text, "--x", id), ctx);
        for (std::size_t i = 0; i < r.s.size(); ++i) {
            const std::string label = "s" + std::to_string(i + 1);
            print_series_value(label.c_str(), r.s[i], digits);
        }
        const bool ok = r.combination_residual <= tol;
        std::printf("combination residual %.6e   bound %.6e   status %s\n",
                    dbl(r.combination_residual), dbl(r.combined_bound),
                    ok ? "OK" : "MISMATCH");
        return ok ? 0 : 1;
    }
    if (id == "sum-formula") {
        const Real rtol = cli_tolerance(digits, a.r >= 3 ? 1e-6 : 1e-10);
        return report_pair(parametric::sum_formula_sides(
                               a.r, require_arg(a.x_text, "--x", id), ctx),
                           digits, rtol)
                   ? 0
                   : 1;
    }
    if (id == "log") {
        return report_pair(
                   parametric::log_identity_sides(require_arg(a.x_text, "--x", id), ctx),
                   digits, tol)
                   ? 0
                   : 1;
    }
    if (id == "arctan") {
        const auto t = parametric::arctan_triple(ctx);
        print_series_value("v1", t.v1, digits);
        print_series_value("v2", t.v2, digits);
        print_series_value("v3", t.v3, digits);
        const Real d12 = abs(t.v1.value - t.v2.value);
        const Real d23 = abs(t.v2.value - t.v3.value);
        const bool ok = d12 <= tol && d23 <= tol;
        std::printf("residuals |v1-v2| %.6e   |v2-v3| %.6e   status %s\n", dbl(d12),
                    dbl(d23), ok ? "OK" : "MISMATCH");
        return ok ? 0 : 1;
    }
    if (id == "tangent") {
        const auto t = parametric::tangent_sums(ctx);
        std::printf("-- first pair --\n");
        const bool ok1 = report_pair(t.first, digits, tol);
        std::printf("-- second pair --\n");
        const bool ok2 = report_pair(t.second, digits, tol);
        return (ok1 && ok2) ? 0 : 1;
    }
    if (id == "gf2") {
        return report_pair(parametric::gf2_sides(require_arg(a.x_text, "--x", id),
                                                 require_arg(a.y_text, "--y", id), ctx,
                                                 a.limit_path),
                           digits, tol)
                   ? 0
                   : 1;
    }
    if (id == "sigma") {
        const auto r = parametric::sigma_closed(require_arg(a.x_text, "--x", id),
                                                require_arg(a.y_text, "--y", id), ctx,
                                                a.limit_path);
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i) {
            const bool row_ok = r.residual[i] <= tol;
            ok = ok && row_ok;
            std::printf("sigma%zu    %s   residual %.6e   bound %.6e   %s\n", i + 1,
                        to_string(r.series[i].value, digits).c_str(),
                        dbl(r.residual[i]),
                        dbl(r.series[i].error_bound + r.closed[i].error_bound),
                        row_ok ? "OK" : "MISMATCH");
        }
        return ok ? 0 : 1;
    }
    if (id == "thm2") {
        const Real rtol = cli_tolerance(digits, 1e-15);
        return report_pair(parametric::thm2_sides(require_arg(a.x_text, "--x", id),
                                                  require_arg(a.y_text, "--y", id), ctx),
                           digits, rtol)
                   ? 0
                   : 1;
    }
    if (id == "gf2-3") {
        const Real rtol = cli_tolerance(digits, 1e-15);
        return report_pair(
                   parametric::gf2_3_sides(require_arg(a.y_text, "--y", id), ctx),
                   digits, rtol)
                   ? 0
                   : 1;
    }
    if (id == "half-half") {
        return report_pair(parametric::half_half_value(ctx), digits, tol) ? 0 : 1;
    }
    if (id == "cot") {
        return report_pair(
                   parametric::cot_expansion_check(require_arg(a.x_text, "--x", id),
                                                   ctx),
                   digits, tol)
                   ? 0
                   : 1;
    }
    throw DomainError(
        "unknown identity '" + id +
        "' (expected eu-dual, eu-dual-coeff, z-gen, zetas1, s-suite, sum-formula, "
        "log, arctan, tangent, gf2, sigma, thm2, gf2-3, half-half, cot)");
}

int cmd_reduce(const std::string& pair_text, unsigned digits, std::uint64_t max_terms) {
    const auto parts = parse_unsigned_list(pair_text);
    if (parts.size() != 2) throw DomainError("--pair expects two indices 'a,b'");
    const unsigned s1 = parts[0];
    const unsigned s2 = parts[1];
    if (s1 < 2) throw DomainError("zeta(" + pair_text + ") diverges: leading index 1");

    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());

    reduction::ZetaExpression expr;
    bool have_closed = true;
    if (s2 == 1) {
        expr = reduction::reduce_s1(s1);
    } else if (s1 % 2 == 0 && s2 % 2 == 1) {
        expr = reduction::reduce_even_odd(s1, s2);
    } else if (s1 % 2 == 1 && s2 % 2 == 0) {
        expr = reduction::reduce_swap(s1, s2);
    } else if (s1 == s2) {
        const auto z = reduction::ZetaExpression::zeta(s1);
        expr = Rational(1, 2) * (z * z - reduction::ZetaExpression::zeta(2 * s1));
    } else {
        have_closed = false;
    }

    mzv::MZVIndex idx;
    idx.slots = {{s1, +1}, {s2, +1}};
    const auto numeric = mzv::mzv_eval(idx, ctx);

    if (!have_closed) {
        // Same-parity pair with s1 != s2: no single-pair reduction here; report
        // the reflection combination instead.
        const auto refl = reduction::reflect(s1, s2);
        std::printf("zeta(%u,%u) + zeta(%u,%u) = %s\n", s1, s2, s2, s1,
                    refl.to_string().c_str());
        print_series_value("value", numeric, digits);
        return 0;
    }

    std::printf("zeta(%u,%u) = %s\n", s1, s2, expr.to_string().c_str());
    const auto closed = reduction::expr_eval(expr, ctx);
    const Real residual = abs(closed.value - numeric.value);
    const Real tol = cli_tolerance(digits, 1e-20);
    const bool ok = residual <= tol;
    std::printf("closed    %s\n", to_string(closed.value, digits).c_str());
    std::printf("numeric   %s\n", to_string(numeric.value, digits).c_str());
    std::printf("residual  %.6e\n", dbl(residual));
    std::printf("bound     %.6e\n", dbl(closed.error_bound + numeric.error_bound));
    std::printf("status    %s\n", ok ? "OK" : "MISMATCH");
    return ok ? 0 : 1;
}

int cmd_conjecture(const std::string& t_text, const std::string& n_text, unsigned digits,
                   const std::string& csv_path, std::uint64_t max_terms) {
    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());
    const Real t = parse_real(t_text);
    const auto ns = parse_unsigned_list(n_text);

    const auto limit = conjecture::product_limit(Complex(t, Real(0)), ctx);
    std::printf("t         %s\n", to_string(Complex(t, Real(0)), digits).c_str());
    print_series_value("limit", limit, digits);

    std::string csv = "n,a_n,gap\n";
    std::printf("%8s  %-*s  %s\n", "n", int(digits) + 8, "a_n(t)", "gap");
    for (const unsigned n : ns) {
        const Real a = conjecture::a_eval(n, t, ctx);
        const Real g = conjecture::gap(n, t, ctx);
        const std::string a_str = to_string(Complex(a, Real(0)), digits);
        std::printf("%8u  %-*s  %.6e\n", n, int(digits) + 8, a_str.c_str(), dbl(g));
        char gbuf[40];
        std::snprintf(gbuf, sizeof gbuf, "%.12e", dbl(g));
        csv += std::to_string(n) + "," + a_str + "," + gbuf + "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw DomainError("cannot open csv output file: " + csv_path);
        out << csv;
        if (!out.good()) throw DomainError("failed writing csv output: " + csv_path);
    }
    return 0;
}

int cmd_verify(const std::string& suite, unsigned digits, std::uint64_t seed,
               unsigned jobs, const std::string& json_path, const std::string& csv_path,
               std::uint64_t max_terms) {
    const auto rep = registry::run_suite(suite, digits, seed, jobs, max_terms);
    std::fputs(registry::render_report(rep, registry::ReportFormat::text).c_str(),
               stdout);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw DomainError("cannot open json output file: " + json_path);
        out << registry::render_report(rep, registry::ReportFormat::json);
        if (!out.good()) throw DomainError("failed writing json output: " + json_path);
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw DomainError("cannot open csv output file: " + csv_path);
        out << registry::render_report(rep, registry::ReportFormat::csv);
        if (!out.good()) throw DomainError("failed writing csv output: " + csv_path);
    }
    if (rep.precision_failure) return 3;
    if (rep.failed > 0 || rep.errored > 0) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eulerlab — evaluation and verification of parametric Euler sum "
                 "identities"};
    app.require_subcommand(1);

    std::string mzv_text;
    ParamArgs param_args;
    std::string pair_text;
    std::string t_text;
    std::string n_text = "10,100,1000";
    std::string suite = "core";
    std::string json_path;
    std::string csv_path;
    std::string conj_csv_path;
    unsigned eval_digits = 30, param_digits = 30, reduce_digits = 30,
             conj_digits = 30, verify_digits = 30;
    std::uint64_t seed = 42;
    unsigned jobs = 1;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one (alternating) Euler sum");
    eval_cmd->add_option("--mzv", mzv_text,
                         "index list, e.g. \"3,1\"; '~' marks an alternating slot")
        ->required();
    eval_cmd->add_option("--digits", eval_digits, "decimal digits (default 30)");

    auto* param_cmd =
        app.add_subcommand("param", "check one parametric identity at a point");
    param_cmd->add_option("--identity", param_args.identity, "identity family name")
        ->required();
    param_cmd->add_option("--x", param_args.x_text, "parameter x (\"a+bi\", rationals ok)");
    param_cmd->add_option("--y", param_args.y_text, "parameter y");
    param_cmd->add_option("--r", param_args.r, "sum-formula depth r");
    param_cmd->add_option("--k", param_args.k, "coefficient order k");
    param_cmd->add_flag("--limit-path", param_args.limit_path,
                        "evaluate a removable-singularity point via its limit");
    param_cmd->add_option("--digits", param_digits, "decimal digits (default 30)");

    auto* reduce_cmd =
        app.add_subcommand("reduce", "reduce a double Euler sum to zeta values");
    reduce_cmd->add_option("--pair", pair_text, "indices \"a,b\" of zeta(a,b)")
        ->required();
    reduce_cmd->add_option("--digits", reduce_digits, "decimal digits (default 30)");

    auto* conj_cmd = app.add_subcommand(
        "conjecture", "recurrence sequence, product limit, and gap table");
    conj_cmd->add_option("--t", t_text, "parameter t (real, rationals ok)")->required();
    conj_cmd->add_option("--n", n_text, "comma-separated n values (default 10,100,1000)");
    conj_cmd->add_option("--digits", conj_digits, "decimal digits (default 30)");
    conj_cmd->add_option("--csv", conj_csv_path, "write the table to this CSV file");

    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
    verify_cmd->add_option(
        "--suite", suite, "core, parametric, mzv, reduction, conjecture, all");
    verify_cmd->add_option("--digits", verify_digits, "decimal digits (default 30)");
    verify_cmd->add_option("--seed", seed, "sampling seed (default 42)");
    verify_cmd->add_option("--jobs", jobs, "parallel worker processes (default 1)");
    verify_cmd->add_option("--json", json_path, "write the JSON report to this file");
    verify_cmd->add_option("--csv", csv_path, "write the CSV report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::uint64_t max_terms = 0;
    if (const char* env = std::getenv("EULERLAB_MAX_TERMS")) {
        const std::string text(env);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            std::fprintf(stderr, "eulerlab: invalid EULERLAB_MAX_TERMS value '%s'\n",
                         env);
            return 2;
        }
        try {
            max_terms = std::stoull(text);
        } catch (const std::exception&) {
            std::fprintf(stderr, "eulerlab: EULERLAB_MAX_TERMS out of range '%s'\n",
                         env);
            return 2;
        }
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(mzv_text, eval_digits, max_terms);
        if (param_cmd->parsed()) return cmd_param(param_args, param_digits, max_terms);
        if (reduce_cmd->parsed())
            return cmd_reduce(pair_text, reduce_digits, max_terms);
        if (conj_cmd->parsed())
            return cmd_conjecture(t_text, n_text, conj_digits, conj_csv_path,
                                  max_terms);
        if (verify_cmd->parsed())
            return cmd_verify(suite, verify_digits, seed, jobs, json_path, csv_path,
                              max_terms);
    } catch (const PrecisionLossError& e) {
        std::fprintf(stderr, "eulerlab: precision: %s\n", e.what());
        return 3;
    } catch (const CapExceeded& e) {
        std::fprintf(stderr, "eulerlab: precision: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "eulerlab: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "eulerlab: %s\n", e.what());
        return 2;
    }
    return 2;
}

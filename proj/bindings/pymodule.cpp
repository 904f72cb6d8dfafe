// Python bindings for eulerlab.
//
// Every entry point takes a `digits` target and acquires its own precision
// scope; values are returned as full-precision strings plus float/complex
// conveniences. Calls hold the GIL for their whole duration: the working
// precision of the numeric type is a process-wide setting and `verify`
// forks worker processes, so serializing binding calls keeps both safe.

#include "eulerlab/complex.hpp"
#include "eulerlab/conjecture.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/mzv.hpp"
#include "eulerlab/parametric.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/reduction.hpp"
#include "eulerlab/registry.hpp"
#include "eulerlab/series_value.hpp"
#include "eulerlab/special.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace eulerlab;

PrecisionContext make_context(unsigned digits, std::uint64_t max_terms) {
    PrecisionContext ctx;
    ctx.digits = digits;
    if (max_terms > 0) ctx.max_terms = max_terms;
    ctx.validate();
    return ctx;
}

double dbl(const Real& v) { return v.convert_to<double>(); }

std::complex<double> cdbl(const Complex& z) { return {dbl(z.re), dbl(z.im)}; }

Complex to_complex(const py::object& o, const char* what) {
    if (o.is_none()) throw DomainError(std::string(what) + " is required");
    if (py::isinstance<py::str>(o)) return parse_complex(o.cast<std::string>());
    if (py::isinstance<py::bool_>(o))
        throw DomainError(std::string(what) + ": expected a number, got bool");
    if (py::isinstance<py::int_>(o)) return {Real(o.cast<long long>()), Real(0)};
    if (py::isinstance<py::float_>(o)) return {Real(o.cast<double>()), Real(0)};
    if (PyComplex_Check(o.ptr())) {
        const auto c = o.cast<std::complex<double>>();
        return {Real(c.real()), Real(c.imag())};
    }
    throw DomainError(std::string(what) + ": expected str, int, float, or complex");
}

Real to_real(const py::object& o, const char* what) {
    const Complex z = to_complex(o, what);
    if (z.im != 0) throw DomainError(std::string(what) + " must be real");
    return z.re;
}

Real tolerance_for(unsigned digits, double override_tol) {
    Real tol = pow10_neg(digits >= 6 ? digits - 5 : 1);
    if (override_tol > 0) tol = std::max(tol, Real(override_tol));
    return tol;
}

py::dict series_dict(const SeriesValue& v, unsigned digits) {
    py::dict d;
    d["value"] = to_string(v.value, digits);
    d["value_approx"] = cdbl(v.value);
    d["bound"] = dbl(v.error_bound);
    d["terms"] = v.terms_used;
    d["method"] = std::string(method_name(v.method));
    d["notes"] = v.notes;
    return d;
}

py::dict pair_dict(const SidePair& sp, unsigned digits, const Real& tol) {
    py::dict d;
    d["lhs"] = to_string(sp.lhs.value, digits);
    d["rhs"] = to_string(sp.rhs.value, digits);
    d["lhs_approx"] = cdbl(sp.lhs.value);
    d["rhs_approx"] = cdbl(sp.rhs.value);
    d["residual"] = dbl(sp.residual);
    d["bound"] = dbl(sp.lhs.error_bound + sp.rhs.error_bound);
    d["tolerance"] = dbl(tol);
    d["ok"] = sp.residual <= tol;
    return d;
}

py::dict py_eval_mzv(const std::string& index, unsigned digits,
                     std::uint64_t max_terms) {
    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());
    const auto idx = mzv::MZVIndex::parse(index);
    py::dict d = series_dict(mzv::mzv_eval(idx, ctx), digits);
    d["index"] = idx.to_string();
    d["depth"] = static_cast<std::size_t>(idx.depth());
    d["weight"] = static_cast<std::size_t>(idx.weight());
    return d;
}

py::dict py_param(const std::string& identity, const py::object& x_obj,
                  const py::object& y_obj, unsigned r, unsigned k, bool limit_path,
                  unsigned digits, std::uint64_t max_terms) {
    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());
    const Real tol = tolerance_for(digits, 0);

    const auto need_x = [&] { return to_complex(x_obj, "x"); };
    const auto need_y = [&] { return to_complex(y_obj, "y"); };

    py::dict d;
    d["identity"] = identity;
    if (identity == "eu-dual")
        return pair_dict(parametric::eu_dual_sides(need_x(), ctx), digits, tol);
    if (identity == "eu-dual-coeff")
        return pair_dict(parametric::eu_dual_coefficient(k, ctx), digits, tol);
    if (identity == "z-gen")
        return pair_dict(parametric::z_gen(need_x(), ctx), digits, tol);
    if (identity == "zetas1")
        return pair_dict(parametric::zetas1_gf_sides(need_x(), ctx), digits, tol);
    if (identity == "sum-formula")
        return pair_dict(parametric::sum_formula_sides(r, need_x(), ctx), digits,
                         tolerance_for(digits, r >= 3 ? 1e-6 : 1e-10));
    if (identity == "log")
        return pair_dict(parametric::log_identity_sides(need_x(), ctx), digits, tol);
    if (identity == "gf2")
        return pair_dict(parametric::gf2_sides(need_x(), need_y(), ctx, limit_path),
                         digits, tol);
    if (identity == "thm2")
        return pair_dict(parametric::thm2_sides(need_x(), need_y(), ctx), digits,
                         tolerance_for(digits, 1e-15));
    if (identity == "gf2-3")
        return pair_dict(parametric::gf2_3_sides(need_y(), ctx), digits,
                         tolerance_for(digits, 1e-15));
    if (identity == "half-half")
        return pair_dict(parametric::half_half_value(ctx), digits, tol);
    if (identity == "cot")
        return pair_dict(parametric::cot_expansion_check(need_x(), ctx), digits, tol);
    if (identity == "arctan") {
        const auto t = parametric::arctan_triple(ctx);
        d["values"] = py::make_tuple(to_string(t.v1.value, digits),
                                     to_string(t.v2.value, digits),
                                     to_string(t.v3.value, digits));
        const Real d12 = abs(t.v1.value - t.v2.value);
        const Real d23 = abs(t.v2.value - t.v3.value);
        d["residuals"] = py::make_tuple(dbl(d12), dbl(d23));
        d["bound"] = dbl(t.v1.error_bound + t.v2.error_bound + t.v3.error_bound);
        d["tolerance"] = dbl(tol);
        d["ok"] = d12 <= tol && d23 <= tol;
        return d;
    }
    if (identity == "s-suite") {
        const auto s = parametric::s_suite(need_x(), ctx);
        py::list vals;
        for (const auto& v : s.s) vals.append(to_string(v.value, digits));
        d["values"] = vals;
        d["residual"] = dbl(s.combination_residual);
        d["bound"] = dbl(s.combined_bound);
        d["tolerance"] = dbl(tol);
        d["ok"] = s.combination_residual <= tol;
        return d;
    }
    if (identity == "tangent") {
        const auto t = parametric::tangent_sums(ctx);
        d["pairs"] = py::make_tuple(pair_dict(t.first, digits, tol),
                                    pair_dict(t.second, digits, tol));
        d["ok"] = t.first.residual <= tol && t.second.residual <= tol;
        return d;
    }
    if (identity == "sigma") {
        const auto s = parametric::sigma_closed(need_x(), need_y(), ctx, limit_path);
        py::list vals, closed, residuals;
        Real worst(0);
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i) {
            vals.append(to_string(s.series[i].value, digits));
            closed.append(to_string(s.closed[i].value, digits));
            residuals.append(dbl(s.residual[i]));
            worst = std::max(worst, s.series[i].error_bound + s.closed[i].error_bound);
            ok = ok && s.residual[i] <= tol;
        }
        d["values"] = vals;
        d["closed"] = closed;
        d["residuals"] = residuals;
        d["bound"] = dbl(worst);
        d["tolerance"] = dbl(tol);
        d["ok"] = ok;
        return d;
    }
    throw DomainError(
        "unknown identity '" + identity +
        "' (expected eu-dual, eu-dual-coeff, z-gen, zetas1, s-suite, sum-formula, "
        "log, arctan, tangent, gf2, sigma, thm2, gf2-3, half-half, cot)");
}

py::dict py_reduce(unsigned a, unsigned b, unsigned digits, std::uint64_t max_terms) {
    if (a < 2) throw DomainError("zeta(" + std::to_string(a) + "," +
                                 std::to_string(b) + ") diverges: leading index 1");
    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());

    reduction::ZetaExpression expr;
    bool have_closed = true;
    if (b == 1) {
        expr = reduction::reduce_s1(a);
    } else if (a % 2 == 0 && b % 2 == 1) {
        expr = reduction::reduce_even_odd(a, b);
    } else if (a % 2 == 1 && b % 2 == 0) {
        expr = reduction::reduce_swap(a, b);
    } else if (a == b) {
        const auto z = reduction::ZetaExpression::zeta(a);
        expr = Rational(1, 2) * (z * z - reduction::ZetaExpression::zeta(2 * a));
    } else {
        have_closed = false;
    }

    mzv::MZVIndex idx;
    idx.slots = {{a, +1}, {b, +1}};
    const auto numeric = mzv::mzv_eval(idx, ctx);

    py::dict d;
    d["pair"] = py::make_tuple(a, b);
    d["numeric"] = to_string(numeric.value, digits);
    if (!have_closed) {
        d["expression"] = reduction::reflect(a, b).to_string();
        d["reflection"] = true;
        d["closed"] = py::none();
        d["residual"] = py::none();
        d["bound"] = dbl(numeric.error_bound);
        d["ok"] = true;
        return d;
    }
    const auto closed = reduction::expr_eval(expr, ctx);
    const Real residual = abs(closed.value - numeric.value);
    const Real tol = tolerance_for(digits, 1e-20);
    d["expression"] = expr.to_string();
    d["reflection"] = false;
    d["closed"] = to_string(closed.value, digits);
    d["residual"] = dbl(residual);
    d["bound"] = dbl(closed.error_bound + numeric.error_bound);
    d["ok"] = residual <= tol;
    return d;
}

py::dict py_conjecture(const py::object& t_obj, const std::vector<unsigned>& ns,
                       unsigned digits, std::uint64_t max_terms) {
    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());
    const Real t = to_real(t_obj, "t");

    py::dict d;
    d["limit"] = series_dict(conjecture::product_limit(Complex(t, Real(0)), ctx),
                             digits);
    py::list rows;
    for (const unsigned n : ns) {
        py::dict row;
        row["n"] = n;
        row["a"] = to_string(Complex(conjecture::a_eval(n, t, ctx), Real(0)), digits);
        row["gap"] = dbl(conjecture::gap(n, t, ctx));
        rows.append(row);
    }
    d["rows"] = rows;
    return d;
}

std::string py_verify(const std::string& suite, unsigned digits, std::uint64_t seed,
                      unsigned jobs, std::uint64_t max_terms, const std::string& fmt) {
    registry::ReportFormat rf;
    if (fmt == "json") rf = registry::ReportFormat::json;
    else if (fmt == "csv") rf = registry::ReportFormat::csv;
    else if (fmt == "text") rf = registry::ReportFormat::text;
    else throw DomainError("unknown format '" + fmt + "' (expected json, csv, text)");
    return registry::render_report(
        registry::run_suite(suite, digits, seed, jobs, max_terms), rf);
}

py::dict py_zeta(const py::object& s_obj, unsigned digits, std::uint64_t max_terms) {
    const auto ctx = make_context(digits, max_terms);
    PrecisionGuard guard(ctx.working_digits());
    return series_dict(riemann_zeta(to_complex(s_obj, "s"), ctx), digits);
}

std::string py_pi(unsigned digits) {
    const auto ctx = make_context(digits, 0);
    PrecisionGuard guard(ctx.working_digits());
    return to_string(Complex(const_pi(ctx), Real(0)), digits);
}

std::string py_euler_gamma(unsigned digits) {
    const auto ctx = make_context(digits, 0);
    PrecisionGuard guard(ctx.working_digits());
    return to_string(Complex(const_euler_gamma(ctx), Real(0)), digits);
}

} // namespace

PYBIND11_MODULE(eulerlab, m) {
    m.doc() = "Arbitrary-precision evaluation and verification of parametric Euler "
              "sum identities";
    m.attr("__version__") = "1.0.0";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
    py::register_exception<DivergentIndex>(m, "DivergentIndexError", PyExc_ValueError);
    py::register_exception<DepthUnsupported>(m, "DepthError", PyExc_ValueError);
    py::register_exception<ZeroDivisor>(m, "ZeroDivisorError", PyExc_ValueError);
    py::register_exception<ParityError>(m, "ParityError", PyExc_ValueError);
    py::register_exception<RemovableSingularity>(m, "RemovableSingularityError",
                                                 PyExc_ValueError);
    py::register_exception<PrecisionLossError>(m, "PrecisionError", PyExc_RuntimeError);
    py::register_exception<CapExceeded>(m, "CapError", PyExc_RuntimeError);

    m.def("eval_mzv", &py_eval_mzv, py::arg("index"), py::arg("digits") = 30,
          py::arg("max_terms") = 0,
          "Evaluate a (possibly alternating) Euler sum given as an index string "
          "such as \"3,1\" or \"2~,1\"; '~' marks an alternating slot.");
    m.def("param", &py_param, py::arg("identity"), py::arg("x") = py::none(),
          py::arg("y") = py::none(), py::arg("r") = 1, py::arg("k") = 1,
          py::arg("limit_path") = false, py::arg("digits") = 30,
          py::arg("max_terms") = 0,
          "Check one parametric identity at a point; x and y accept str "
          "literals (\"1/3\", \"0.5+0.25i\") or Python numbers.");
    m.def("reduce_pair", &py_reduce, py::arg("a"), py::arg("b"),
          py::arg("digits") = 30, py::arg("max_terms") = 0,
          "Reduce zeta(a,b) to a polynomial in zeta values when a closed form "
          "exists, and check it numerically.");
    m.def("conjecture_table", &py_conjecture, py::arg("t"), py::arg("ns"),
          py::arg("digits") = 30, py::arg("max_terms") = 0,
          "Recurrence values a_n(t), gap-to-limit table, and the product limit.");
    m.def("verify", &py_verify, py::arg("suite") = "core", py::arg("digits") = 30,
          py::arg("seed") = 42, py::arg("jobs") = 1, py::arg("max_terms") = 0,
          py::arg("fmt") = "json",
          "Run an identity suite and return the rendered report (json, csv, or "
          "text).");
    m.def("zeta", &py_zeta, py::arg("s"), py::arg("digits") = 30,
          py::arg("max_terms") = 0, "Riemann zeta at a complex point.");
    m.def("pi", &py_pi, py::arg("digits") = 30, "pi to the requested digits.");
    m.def("euler_gamma", &py_euler_gamma, py::arg("digits") = 30,
          "Euler-Mascheroni constant to the requested digits.");
}

#include "eulerlab/conjecture.hpp"

#include "eulerlab/errors.hpp"
#include "eulerlab/special.hpp"

#include <cstdint>
#include <mutex>
#include <utility>

namespace eulerlab::conjecture {

namespace {

Real rational_to_real(const Rational& q) {
    return Real(numerator(q).str()) / Real(denominator(q).str());
}

SeriesValue closed(Complex v, const PrecisionContext& ctx) {
    const unsigned bound_digits =
        ctx.digits + (ctx.guard_digits >= 3 ? ctx.guard_digits - 3 : 1);
    SeriesValue out;
    out.error_bound = pow10_neg(bound_digits) * (abs(v) + 1);
    out.value = std::move(v);
    out.method = Method::closed_form;
    return out;
}

} // namespace

namespace {

// a_{m+2} = [m(2m+1) a_{m+1} + (m^3 + (-1)^{m+1} u) a_m] / (m(m+1)^2)
CubicPoly recurrence_step(std::uint64_t m, const CubicPoly& prev,
                          const CubicPoly& cur) {
    const Rational lin(m * (2 * m + 1));
    const Rational cube(m * m * m);
    const Rational denom(m * (m + 1) * (m + 1));
    const bool plus_u = (m % 2 == 1);
    CubicPoly next;
    next.coefficients.assign(
        std::max(cur.coefficients.size(), prev.coefficients.size() + 1),
        Rational(0));
    for (std::size_t k = 0; k < cur.coefficients.size(); ++k)
        next.coefficients[k] += lin * cur.coefficients[k];
    for (std::size_t k = 0; k < prev.coefficients.size(); ++k) {
        next.coefficients[k] += cube * prev.coefficients[k];
        // the u * a_m term shifts every coefficient up one power
        if (plus_u)
            next.coefficients[k + 1] += prev.coefficients[k];
        else
            next.coefficients[k + 1] -= prev.coefficients[k];
    }
    for (Rational& c : next.coefficients) c /= denom;
    while (!next.coefficients.empty() && next.coefficients.back() == 0)
        next.coefficients.pop_back();
    return next;
}

} // namespace

CubicPoly a_poly(unsigned n, unsigned cap) {
    if (n < 1) throw DomainError("a_poly: requires n >= 1");
    if (n > cap) throw CapExceeded("a_poly: n exceeds the polynomial cap");

    // The sequence is recomputed constantly by the residual checks and the
    // gap tables, so keep a shared prefix of it. Beyond the prefix cap the
    // iteration continues statelessly (coefficient sizes grow fast).
    constexpr unsigned prefix_cap = 300;
    static std::mutex mutex;
    static std::vector<CubicPoly> prefix; // prefix[i] = a_{i+1}
    std::lock_guard<std::mutex> lock(mutex);
    if (prefix.empty()) {
        prefix.push_back(CubicPoly{{Rational(0), Rational(1)}}); // a_1 = u
        prefix.push_back(CubicPoly{{Rational(0), Rational(1)}}); // a_2 = u
    }
    while (prefix.size() < std::min(n, prefix_cap)) {
        const std::uint64_t m = prefix.size() - 1;
        prefix.push_back(recurrence_step(m, prefix[m - 1], prefix[m]));
    }
    if (n <= prefix.size()) return prefix[n - 1];
    CubicPoly prev = prefix[prefix.size() - 2];
    CubicPoly cur = prefix[prefix.size() - 1];
    for (std::uint64_t m = prefix.size() - 1; m + 2 <= n; ++m) {
        CubicPoly next = recurrence_step(m, prev, cur);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

SeriesValue product_limit(const Complex& t_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    const Complex t = to_working(t_in);
    if (t.re == 0 && t.im == 0) {
        SeriesValue out = closed(Complex(0), ctx);
        out.notes.push_back("vanishes identically at t = 0");
        return out;
    }
    const Complex t3 = t * t * t;
    const Complex w = t3 / Complex(8);

    const Real wmag = abs(w);
    std::uint64_t N = 50;
    const Real scaled = ceil(Real(5) / 2 * pow(wmag, Real(1) / 3));
    if (scaled > 50)
        N = static_cast<std::uint64_t>(scaled);

    Complex head(1);
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Real n3(n * n * n);
        const Complex f = Complex(1) + w / Complex(n3);
        if (f.re == 0 && f.im == 0)
            throw ZeroDivisor("product_limit: a factor 1 + t^3/(8 n^3) vanishes");
        head = head * f;
    }

    // log of the tail product: sum_j (-1)^{j+1} (w^j / j) H(3j, N+1)
    Complex log_tail(0), wj(1);
    const Real eps = pow10_neg(ctx.working_digits() + 4);
    const Complex shift(Real(N + 1));
    for (unsigned j = 1; j <= 2000; ++j) {
        wj = wj * w;
        const Complex h = detail::hurwitz_raw(Complex(3 * int(j)), shift);
        Complex term = wj * h / Complex(int(j));
        if (j % 2 == 0) term = -term;
        log_tail += term;
        if (abs(term) < eps) break;
    }

    SeriesValue out = closed(t3 * head * exp(log_tail), ctx);
    out.notes.push_back("head product with exact logarithmic tail");
    return out;
}

Real a_recurrence_float(unsigned n, const Real& t, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    if (n < 1) throw DomainError("a_recurrence_float: requires n >= 1");
    const Real tw = to_working(t);
    const Real u = tw * tw * tw;
    Real prev = u, cur = u; // a_1, a_2
    if (n == 1) return prev;
    for (std::uint64_t m = 1; m + 2 <= n; ++m) {
        const Real lin(m * (2 * m + 1));
        const Real cube(m * m * m);
        const Real denom(m * (m + 1) * (m + 1));
        const Real coeff = (m % 2 == 1) ? cube + u : cube - u;
        Real next = (lin * cur + coeff * prev) / denom;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Real a_eval(unsigned n, const Real& t, const PrecisionContext& ctx) {
    if (n > 200) return a_recurrence_float(n, t, ctx);
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    const CubicPoly p = a_poly(n);
    const Real tw = to_working(t);
    const Real u = tw * tw * tw;
    Real acc(0);
    for (std::size_t k = p.coefficients.size(); k-- > 0;)
        acc = acc * u + rational_to_real(p.coefficients[k]);
    return acc;
}

Real gap(unsigned n, const Real& t, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    const Real a = a_eval(n, t, ctx);
    const SeriesValue limit = product_limit(Complex(to_working(t)), ctx);
    return abs(Complex(a) - limit.value);
}

} // namespace eulerlab::conjecture

#include "eulerlab/engine.hpp"
#include "eulerlab/bernoulli.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/special.hpp"

#include <algorithm>
#include <vector>

namespace eulerlab {

Complex TermSource::term_at(std::uint64_t n) const {
    if (term) return term(n);
    if (smooth) return smooth->eval(Real(n));
    throw DomainError("TermSource: neither term nor smooth descriptor set");
}

SeriesValue direct_sum(const TermSource& src, std::uint64_t N,
                       const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    if (N > ctx.max_terms)
        throw CapExceeded("direct_sum: N exceeds ctx.max_terms");
    Complex acc(0);
    Complex last(0);
    for (std::uint64_t n = 1; n <= N; ++n) {
        last = src.term_at(n);
        acc += last;
    }
    SeriesValue out;
    out.value = acc;
    out.error_bound = src.smooth ? Real(Real(N) * abs(last)) : real_infinity();
    out.terms_used = N;
    out.method = Method::direct;
    return out;
}

namespace detail {

Complex tail_quadrature(const SmoothFn& f, const Real& N, const Real& eps_abs,
                        Real& err_out, std::uint64_t& evals_out) {
    // int_N^inf f(t) dt = N * int_0^1 f(N/u) / u^2 du, then tanh-sinh on
    // (0,1): u(tau) = 1/(1 + exp(-pi*sinh(tau))), du = w(tau) dtau.
    const Real pi = const_pi();
    const Real half_pi = pi / 2;
    std::uint64_t evals = 0;

    auto integrand = [&](const Real& u) -> Complex {
        Real t = N / u;
        ++evals;
        return f.eval(t) / Complex(u * u);
    };
    // transformed integrand at tau: g(tau) = integrand(u) * du/dtau where
    // u = (1 + tanh(pi/2 sinh tau)) / 2 and du/dtau = (pi/2) cosh(tau) /
    // (2 cosh^2(pi/2 sinh tau)). Computed via exponentials so u stays
    // accurate near both endpoints.
    auto sample = [&](const Real& tau) -> Complex {
        Real s = half_pi * sinh(tau);
        // u = 1/(1+e^(-2s)), 1-u = 1/(1+e^(2s))
        Real e2s = exp(-2 * s);
        Real u = 1 / (1 + e2s);
        Real ch = cosh(s);
        Real w = half_pi * cosh(tau) / (2 * ch * ch);
        if (u <= 0 || w == 0) return Complex(0);
        return integrand(u) * Complex(w);
    };

    const unsigned max_level = 12;
    Real h(1);
    // level 0: tau = 0, +-h, +-2h, ... until negligible
    Complex total = sample(Real(0));
    auto scan_side = [&](const Real& start, const Real& step) {
        Complex acc(0);
        int tiny_run = 0;
        for (Real tau = start;; tau += step) {
            Complex v = sample(tau);
            acc += v;
            if (abs(v) < eps_abs / 64) {
                if (++tiny_run >= 3) break;
            } else {
                tiny_run = 0;
            }
            if (abs(tau) > 7) break; // cosh^2(pi/2 sinh 7) is astronomically large
        }
        return acc;
    };
    total += scan_side(h, h);
    total += scan_side(-h, -h);
    Complex q_prev = total * Complex(h);
    Real err = real_infinity();
    Complex q = q_prev;
    for (unsigned level = 1; level <= max_level; ++level) {
        h /= 2;
        // new nodes are the odd multiples of the new h
        Complex fresh = scan_side(h, 2 * h) + scan_side(-h, -2 * h);
        total += fresh;
        q = total * Complex(h);
        err = abs(q - q_prev);
        q_prev = q;
        if (err <= eps_abs && level >= 3) break;
    }
    err_out = err * 2 + eps_abs / 16;
    evals_out = evals;
    return q * Complex(N);
}

} // namespace detail

namespace {

// |B_{2j}| / (2j)! at the ambient precision
Real bern_over_fact(unsigned j) {
    return bernoulli_real(2 * j) / detail::factorial_real(2 * j);
}

} // namespace

SeriesValue sum_em(const TermSource& src, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    if (!src.smooth)
        throw DomainError("sum_em: smooth tail descriptor required");
    const SmoothFn& f = *src.smooth;
    const unsigned q = ctx.em_order;
    const Real eps = pow10_neg(ctx.digits + 4);

    std::uint64_t n0 = std::max<std::uint64_t>(
        {50, 4 * static_cast<std::uint64_t>(ctx.digits), src.tail_start});
    if (n0 > ctx.max_terms)
        throw CapExceeded("sum_em: tail start exceeds ctx.max_terms");

    // Decay probe: need |f| ~ n^(-1-d) with d > 0.
    {
        Real f1 = abs(f.eval(Real(n0)));
        Real f2 = abs(f.eval(Real(4 * n0)));
        if (f1 == 0 && f2 == 0) {
            // identically-zero tail (all-zero series included)
            Complex acc(0);
            for (std::uint64_t n = 1; n < n0; ++n) acc += src.term_at(n);
            Real bound = pow10_neg(ctx.working_digits() - 4) * (abs(acc) + 1);
            return {acc, bound, n0 - 1, Method::euler_maclaurin, {}};
        }
        if (f2 > 0) {
            Real ratio = f1 / f2;
            // exponent estimate log(ratio)/log 4 must exceed ~1.02
            if (ratio < Real("4.06")) // 4^1.02
                throw NonConvergent(
                    "sum_em: tail decays slower than n^(-1-d) at the probe points");
        }
    }

    // Grow the tail start until the first omitted Bernoulli correction is
    // below target; em_order itself is respected as given.
    auto omitted = [&](std::uint64_t n) -> Real {
        Real b = bern_over_fact(q + 1);
        return b * abs(f.deriv(2 * q + 1, Real(n)));
    };
    Real omit = omitted(n0);
    while (omit > eps) {
        if (2 * n0 > ctx.max_terms)
            throw CapExceeded("sum_em: head would exceed ctx.max_terms");
        n0 *= 2;
        omit = omitted(n0);
    }

    Complex head(0);
    for (std::uint64_t n = 1; n < n0; ++n) head += src.term_at(n);
    std::uint64_t terms = n0 - 1;

    const Real n0r(n0);
    Real quad_err(0);
    Complex integral;
    if (auto exact = f.tail_integral(n0r)) {
        integral = *exact;
    } else {
        std::uint64_t evals = 0;
        integral = detail::tail_quadrature(f, n0r, eps / 8, quad_err, evals);
        terms += evals;
    }

    Complex corr = f.eval(n0r) / Complex(2);
    for (unsigned j = 1; j <= q; ++j)
        corr -= Complex(bern_over_fact(j)) * f.deriv(2 * j - 1, n0r);

    SeriesValue out;
    out.value = head + integral + corr;
    out.error_bound = 10 * omit + quad_err +
                      pow10_neg(ctx.working_digits() - 4) * (abs(out.value) + 1);
    out.terms_used = terms;
    out.method = Method::euler_maclaurin;
    return out;
}

namespace {

// Chebyshev-weighted acceleration of sum_{k>=0} (-1)^k a(k)
// (Cohen, Rodriguez Villegas, Zagier).
Complex cvz_accelerate(const std::function<Complex(std::uint64_t)>& a,
                       unsigned n) {
    Real d = pow(Real(3) + sqrt(Real(8)), static_cast<int>(n));
    d = (d + 1 / d) / 2;
    Real b(-1);
    Real c = -d;
    Complex s(0);
    for (unsigned k = 0; k < n; ++k) {
        c = b - c;
        s += Complex(c) * a(k);
        b *= (Real(k) + n) * (Real(k) - n) /
             ((Real(k) + Real(1) / 2) * (Real(k) + 1));
    }
    return s / Complex(d);
}

} // namespace

SeriesValue sum_alternating(const TermSource& src, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());

    // src.term carries the sign; recover the magnitude sequence a_n with
    // term(n) = (-1)^n a_n, then sum_{n>=1} (-1)^n a_n = -sum_{k>=0} (-1)^k a_{k+1}.
    auto a = [&](std::uint64_t k) -> Complex {
        std::uint64_t n = k + 1;
        Complex t = src.term_at(n);
        return (n % 2 == 0) ? t : -t;
    };

    unsigned n1 = static_cast<unsigned>(131 * (ctx.digits + 6) / 100) + 4;
    if (2ull * n1 + 16 > ctx.max_terms)
        throw CapExceeded("sum_alternating: acceleration order exceeds ctx.max_terms");
    Complex v1 = -cvz_accelerate(a, n1);
    Complex v2 = -cvz_accelerate(a, n1 + 8);

    SeriesValue out;
    out.value = v2;
    out.error_bound = 10 * abs(v2 - v1) +
                      pow10_neg(ctx.working_digits() - 4) * (abs(v2) + 1);
    out.terms_used = 2ull * n1 + 8;
    out.method = Method::alternating_accel;

    // Cross-check against a plain partial sum with terminal averaging; the
    // acceleration is only trusted once it agrees to 1e-6.
    {
        PrecisionGuard check_guard(20);
        std::uint64_t nv = std::min<std::uint64_t>(20000, ctx.max_terms);
        Complex partial(0), prev_partial(0);
        for (std::uint64_t n = 1; n <= nv; ++n) {
            prev_partial = partial;
            partial += src.term_at(n);
        }
        Complex avg = (partial + prev_partial) / Complex(2);
        out.terms_used += nv;
        Real tol = Real(1) / 1000000;
        if (abs(avg - out.value) > tol * (abs(out.value) + 1))
            throw AccelUnreliable(
                "sum_alternating: acceleration disagrees with direct partial sum");
    }
    return out;
}

} // namespace eulerlab

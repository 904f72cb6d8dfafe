#include "eulerlab/special.hpp"
#include "eulerlab/bernoulli.hpp"

#include <cstdint>

namespace eulerlab {

namespace detail {

unsigned ambient_digits() {
    return Real::default_precision();
}

namespace {

// Start of the asymptotic regime. Beyond this radius the divergent
// Bernoulli series bottoms out below 10^(-wd) before it turns around.
Real asymptotic_threshold(unsigned wd) {
    Real t = Real(45) * wd / 100;
    if (t < 20) t = 20;
    return t;
}

Real ambient_eps(int extra = 2) {
    return pow10_neg(ambient_digits() + extra);
}

bool is_nonpositive_integer(const Complex& z) {
    return z.im == 0 && z.re <= 0 && z.re == floor(z.re);
}

} // namespace

Real nonpos_int_distance(const Complex& z) {
    Real r = round(z.re);
    if (r > 0) r = 0;
    return hypot(z.re - r, z.im);
}

Real factorial_real(unsigned n) {
    Real r(1);
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

Complex digamma_raw(const Complex& z_in) {
    if (is_nonpositive_integer(z_in))
        throw PoleError("digamma: pole at z = " + to_string(z_in, 8));
    unsigned wd = ambient_digits();
    Real T = asymptotic_threshold(wd);
    Real eps = ambient_eps(3);

    Complex z = z_in;
    Complex acc(0);
    if (z.re < Real(1) / 2) {
        // psi(z) = psi(1-z) - pi*cot(pi*z)
        Real pi = const_pi();
        acc -= Complex(pi) * cot(Complex(pi) * z);
        z = Complex(1) - z;
    }
    while (abs(z) < T) {
        acc -= Complex(1) / z;
        z += Complex(1);
    }

    // psi(z) ~ log z - 1/(2z) - sum B_{2j} / (2j z^{2j})
    Complex res = log(z) - Complex(1) / (Complex(2) * z);
    Complex z2inv = Complex(1) / (z * z);
    Complex w = z2inv;
    Real prev = real_infinity();
    for (unsigned j = 1; j <= 4 * wd + 8; ++j) {
        Complex term = Complex(bernoulli_real(2 * j) / (2 * j)) * w;
        Real mag = abs(term);
        if (mag > prev) break; // divergent turn; already at full accuracy
        res -= term;
        if (mag <= eps) break;
        prev = mag;
        w *= z2inv;
    }
    return acc + res;
}

Complex hurwitz_raw(const Complex& s, const Complex& a) {
    unsigned wd = ambient_digits();
    Real eps = ambient_eps(3);
    Real target = asymptotic_threshold(wd);
    {
        Real st = Real(8) * abs(s) / 10;
        if (st > target) target = st;
    }

    Complex head(0);
    Complex an = a; // a + n
    std::uint64_t shifts = 0;
    auto shift_until = [&](const Real& radius) {
        while (an.re < 1 || abs(an) < radius) {
            head += pow(an, -s);
            an += Complex(1);
            if (++shifts > 4'000'000)
                throw CapExceeded("hurwitz_zeta: argument shift cap hit");
        }
    };
    shift_until(target);

    for (int attempt = 0;; ++attempt) {
        if (attempt > 12)
            throw PrecisionLossError("hurwitz_zeta: tail expansion failed to converge");
        // Euler-Maclaurin tail at M = a + n:
        //   M^(1-s)/(s-1) + M^(-s)/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} M^(-s-2j+1)
        const Complex& M = an;
        Complex Ms = pow(M, -s);
        Complex tail = M * Ms / (s - Complex(1)) + Ms / Complex(2);
        Real scale = abs(tail) + 1;
        Complex Minv2 = Complex(1) / (M * M);
        Complex poch = s;      // (s)_{2j-1} at j = 1
        Complex w = Ms / M;    // M^(-s-1)
        bool converged = false;
        Real prev = real_infinity();
        for (unsigned j = 1; j <= 8 * wd + 16; ++j) {
            Complex term = Complex(bernoulli_real(2 * j) / factorial_real(2 * j)) * poch * w;
            Real mag = abs(term);
            if (mag <= eps * scale) {
                tail += term;
                converged = true;
                break;
            }
            if (mag > prev) break; // turning divergent: need a larger M
            tail += term;
            prev = mag;
            poch *= (s + Complex(2 * j - 1)) * (s + Complex(2 * j));
            w *= Minv2;
        }
        if (converged) return head + tail;
        target *= 2;
        shift_until(target);
    }
}

Complex zeta_raw(const Complex& s) {
    unsigned wd = ambient_digits();
    if (s.im == 0) {
        // Exact even-integer values via Bernoulli numbers.
        if (s.re == floor(s.re) && s.re >= 2 && s.re <= 256) {
            long n = static_cast<long>(s.re);
            if (n % 2 == 0) {
                unsigned k = static_cast<unsigned>(n / 2);
                Real v = pow(2 * const_pi(), n) * abs(bernoulli_real(2 * k)) /
                         (2 * factorial_real(2 * k));
                return {v, Real(0)};
            }
        }
    }
    // Far right of the strip the defining series collapses to a few terms.
    if (s.re > Real(10) * (wd + 4) / 3) {
        Real eps = ambient_eps(3);
        Complex acc(1);
        for (int n = 2; n <= 64; ++n) {
            Complex t = pow(Complex(n), -s);
            acc += t;
            if (abs(t) <= eps) break;
        }
        return acc;
    }
    return hurwitz_raw(s, Complex(1));
}

Real zeta_raw(const Real& s) {
    return zeta_raw(Complex(s)).re;
}

Complex polygamma_raw(unsigned m, const Complex& z) {
    if (m == 0) return digamma_raw(z);
    if (is_nonpositive_integer(z))
        throw PoleError("polygamma: pole at z = " + to_string(z, 8));
    // psi^(m)(z) = (-1)^(m+1) m! H(m+1, z)
    Real sign = (m % 2 == 0) ? Real(-1) : Real(1);
    return Complex(sign * factorial_real(m)) * hurwitz_raw(Complex(m + 1), z);
}

Complex gamma_raw(const Complex& z_in) {
    if (is_nonpositive_integer(z_in))
        throw PoleError("gamma: pole at z = " + to_string(z_in, 8));
    unsigned wd = ambient_digits();
    Real T = asymptotic_threshold(wd);
    Real eps = ambient_eps(3);

    Complex z = z_in;
    if (z.re < Real(1) / 2) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        Real pi = const_pi();
        return Complex(pi) / (sin(Complex(pi) * z) * gamma_raw(Complex(1) - z));
    }
    Complex shift(1);
    while (abs(z) < T) {
        shift *= z;
        z += Complex(1);
    }

    // Stirling: log G = (z - 1/2) log z - z + log(2 pi)/2 + sum corrections
    Complex lg = (z - Complex(Real(1) / 2)) * log(z) - z +
                 Complex(log(2 * const_pi()) / 2);
    Complex zinv2 = Complex(1) / (z * z);
    Complex w = Complex(1) / z;
    Real prev = real_infinity();
    for (unsigned j = 1; j <= 4 * wd + 8; ++j) {
        Complex term = Complex(bernoulli_real(2 * j) / ((2 * j) * (2 * j - 1))) * w;
        Real mag = abs(term);
        if (mag > prev) break;
        lg += term;
        if (mag <= eps) break;
        prev = mag;
        w *= zinv2;
    }
    return exp(lg) / shift;
}

} // namespace detail

// ---- public wrappers ----

namespace {

SeriesValue closed_form_value(Complex v, const PrecisionContext& ctx) {
    unsigned bound_digits =
        ctx.digits + (ctx.guard_digits >= 3 ? ctx.guard_digits - 3 : 1);
    Real bound = (abs(v) + 1) * pow10_neg(bound_digits);
    return {std::move(v), std::move(bound), 0, Method::closed_form, {}};
}

void check_pole_distance(const Complex& z, const PrecisionContext& ctx,
                         const char* what) {
    Real d = detail::nonpos_int_distance(z);
    if (d == 0)
        throw PoleError(std::string(what) + ": pole at z = " + to_string(z, 8));
    if (d < pow10_neg(ctx.digits / 2))
        throw PrecisionLossError(std::string(what) +
                                 ": argument within 10^(-digits/2) of a pole");
}

} // namespace

Real const_pi(const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    return const_pi();
}

Real const_euler_gamma(const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    return const_euler_gamma();
}

SeriesValue gamma(const Complex& z, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex zw = to_working(z);
    check_pole_distance(zw, ctx, "gamma");
    return closed_form_value(detail::gamma_raw(zw), ctx);
}

SeriesValue digamma(const Complex& z, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex zw = to_working(z);
    check_pole_distance(zw, ctx, "digamma");
    return closed_form_value(detail::digamma_raw(zw), ctx);
}

SeriesValue polygamma(unsigned m, const Complex& z, const PrecisionContext& ctx) {
    ctx.validate();
    if (m > 512) throw DomainError("polygamma: order too large");
    PrecisionGuard guard(ctx.working_digits());
    Complex zw = to_working(z);
    check_pole_distance(zw, ctx, "polygamma");
    return closed_form_value(detail::polygamma_raw(m, zw), ctx);
}

SeriesValue riemann_zeta(const Complex& s, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    if (s.im == 0 && s.re == 0)
        return closed_form_value(Complex(Real(-1) / 2), ctx);
    if (s.im == 0 && s.re == 1) throw PoleError("riemann_zeta: pole at s = 1");
    if (s.re <= 1)
        throw DomainError("riemann_zeta: domain is Re(s) > 1 (plus s = 0)");
    if (abs(s - Complex(1)) < pow10_neg(ctx.digits / 2))
        throw PrecisionLossError("riemann_zeta: s within 10^(-digits/2) of the pole");
    return closed_form_value(detail::zeta_raw(to_working(s)), ctx);
}

SeriesValue hurwitz_zeta(const Complex& s, const Complex& a,
                         const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    if (s.re <= 1) throw DomainError("hurwitz_zeta: domain is Re(s) > 1");
    Complex aw = to_working(a);
    check_pole_distance(aw, ctx, "hurwitz_zeta");
    return closed_form_value(detail::hurwitz_raw(to_working(s), aw), ctx);
}

SeriesValue gauss_2f1_unit(const Complex& a, const Complex& b, const Complex& c,
                           const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    if (abs(a) == 0 || abs(b) == 0) return closed_form_value(Complex(1), ctx);
    Complex aw = to_working(a), bw = to_working(b), cw = to_working(c);
    Complex cab = cw - aw - bw;
    if (cab.re <= 0)
        throw DomainError("gauss_2f1_unit: requires Re(c-a-b) > 0");
    check_pole_distance(cw, ctx, "gauss_2f1_unit");
    // A pole of Gamma in the denominator kills the whole product.
    auto nonpos = [](const Complex& z) {
        return z.im == 0 && z.re <= 0 && z.re == floor(z.re);
    };
    if (nonpos(cw - aw) || nonpos(cw - bw)) return closed_form_value(Complex(0), ctx);
    Complex v = detail::gamma_raw(cw) * detail::gamma_raw(cab) /
                (detail::gamma_raw(cw - aw) * detail::gamma_raw(cw - bw));
    return closed_form_value(v, ctx);
}

const char* method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::euler_maclaurin: return "euler_maclaurin";
        case Method::alternating_accel: return "alternating_accel";
        case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

} // namespace eulerlab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eulerlab/bernoulli.hpp"
#include "eulerlab/complex.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/special.hpp"

using namespace eulerlab;

namespace {

PrecisionContext ctx30() {
    PrecisionContext ctx;
    ctx.digits = 30;
    ctx.validate();
    return ctx;
}

Real tol(int k) { return pow10_neg(static_cast<unsigned>(k)); }

} // namespace

TEST_CASE("context validation rejects unusable settings") {
    PrecisionContext ctx;
    ctx.digits = 1;
    CHECK_THROWS_AS(ctx.validate(), DomainError);
    ctx = PrecisionContext{};
    ctx.guard_digits = 2;
    CHECK_THROWS_AS(ctx.validate(), DomainError);
    ctx = PrecisionContext{};
    ctx.max_terms = 50;
    CHECK_THROWS_AS(ctx.validate(), DomainError);
    ctx = PrecisionContext{};
    ctx.em_order = 0;
    CHECK_THROWS_AS(ctx.validate(), DomainError);
    ctx = PrecisionContext{};
    CHECK_NOTHROW(ctx.validate());
    CHECK(ctx.working_digits() == ctx.digits + ctx.guard_digits);
}

TEST_CASE("pow10_neg gives exact negative powers of ten") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    CHECK(pow10_neg(0) == 1);
    CHECK(abs(pow10_neg(3) - Real("0.001")) < tol(35));
    CHECK(pow10_neg(25) < pow10_neg(24));
}

TEST_CASE("complex literal parsing") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());

    auto z = parse_complex("0.5+0.25i");
    CHECK(z.re == Real("0.5"));
    CHECK(z.im == Real("0.25"));

    z = parse_complex("1/3-1/5i");
    CHECK(abs(z.re - Real(1) / 3) < tol(35));
    CHECK(abs(z.im + Real(1) / 5) < tol(35));

    z = parse_complex("2e-3+1e-2i");
    CHECK(z.re == Real("0.002"));
    CHECK(z.im == Real("0.01"));

    CHECK(parse_complex("i").im == 1);
    CHECK(parse_complex("-i").im == -1);
    CHECK(parse_complex("-2").re == -2);
    CHECK(parse_complex(" 1 / 3 ").im == 0);
    CHECK(parse_complex("0.75i").re == 0);

    CHECK_THROWS_AS(parse_complex(""), DomainError);
    CHECK_THROWS_AS(parse_complex("fish"), DomainError);
    CHECK_THROWS_AS(parse_complex("1/0"), DomainError);
    CHECK_THROWS_AS(parse_real("0.5i"), DomainError);
}

TEST_CASE("complex rendering") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    CHECK(to_string(Complex(Real(1) / 2, Real(0)), 10) == "0.5");
    CHECK(to_string(Complex(Real(1), Real(2)), 10) == "1+2i");
    CHECK(to_string(Complex(Real(-1), Real(-2)), 10) == "-1-2i");
}

TEST_CASE("complex arithmetic and elementary functions") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    const Complex z(Real("0.3"), Real("1.2"));

    const Complex w = exp(log(z));
    CHECK(abs(w - z) < tol(33));

    const Complex s = sin(z), c = cos(z);
    CHECK(abs(s * s + c * c - Complex(Real(1), Real(0))) < tol(32));

    const Complex q = (Complex(Real(1), Real(2)) * Complex(Real(3), Real(-1)));
    CHECK(q.re == 5);
    CHECK(q.im == 5);

    CHECK(abs(sqrt(z) * sqrt(z) - z) < tol(33));
}

TEST_CASE("bernoulli numbers and binomials are exact") {
    CHECK(bernoulli_rational(0) == 1);
    CHECK(bernoulli_rational(1) == Rational(-1, 2));
    CHECK(bernoulli_rational(2) == Rational(1, 6));
    CHECK(bernoulli_rational(3) == 0);
    CHECK(bernoulli_rational(4) == Rational(-1, 30));
    CHECK(bernoulli_rational(12) == Rational(-691, 2730));
    CHECK(binomial_rational(10, 3) == 120);
    CHECK(binomial_rational(13, 0) == 1);
    CHECK(binomial_rational(4, 7) == 0);
}

TEST_CASE("pi and euler-mascheroni to thirty digits") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    CHECK(abs(const_pi(ctx) - Real("3.14159265358979323846264338328")) < tol(28));
    CHECK(abs(const_euler_gamma(ctx) - Real("0.577215664901532860606512090082")) <
          tol(28));
}

TEST_CASE("riemann zeta on the real axis") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    const auto z2 = riemann_zeta(Complex(Real(2), Real(0)), ctx);
    CHECK(abs(z2.value - Complex(pi * pi / 6, Real(0))) < z2.error_bound + tol(28));

    const auto z3 = riemann_zeta(Complex(Real(3), Real(0)), ctx);
    CHECK(abs(z3.value.re - Real("1.20205690315959428539973816151")) < tol(28));

    CHECK_THROWS_AS(riemann_zeta(Complex(Real(1), Real(0)), ctx), PoleError);
}

TEST_CASE("gamma and digamma special values") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    const auto g = gamma(Complex(Real(1) / 2, Real(0)), ctx);
    CHECK(abs(g.value.re - sqrt(pi)) < tol(27));
    CHECK(abs(gamma(Complex(Real(5), Real(0)), ctx).value.re - 24) < tol(26));
    CHECK_THROWS_AS(gamma(Complex(Real(-3), Real(0)), ctx), PoleError);

    const auto d1 = digamma(Complex(Real(1), Real(0)), ctx);
    CHECK(abs(d1.value.re + const_euler_gamma(ctx)) < tol(27));

    // psi(1/2) = -gamma - 2 ln 2
    const auto dh = digamma(Complex(Real(1) / 2, Real(0)), ctx);
    const Real ln2("0.693147180559945309417232121458");
    CHECK(abs(dh.value.re + const_euler_gamma(ctx) + 2 * ln2) < tol(27));
    CHECK_THROWS_AS(digamma(Complex(Real(0), Real(0)), ctx), PoleError);
}

TEST_CASE("polygamma special values") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    // psi'(1) = zeta(2), psi''(1) = -2 zeta(3)
    const auto p1 = polygamma(1, Complex(Real(1), Real(0)), ctx);
    CHECK(abs(p1.value.re - pi * pi / 6) < tol(27));
    const auto p2 = polygamma(2, Complex(Real(1), Real(0)), ctx);
    CHECK(abs(p2.value.re + 2 * Real("1.20205690315959428539973816151")) < tol(26));

    // psi'(1/2) = pi^2/2
    const auto ph = polygamma(1, Complex(Real(1) / 2, Real(0)), ctx);
    CHECK(abs(ph.value.re - pi * pi / 2) < tol(26));
}

TEST_CASE("hurwitz zeta") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    // zeta(2, 1/2) = pi^2/2 and zeta(s, 1) = zeta(s)
    const auto h = hurwitz_zeta(Complex(Real(2), Real(0)),
                                Complex(Real(1) / 2, Real(0)), ctx);
    CHECK(abs(h.value.re - pi * pi / 2) < h.error_bound + tol(27));

    const auto h3 = hurwitz_zeta(Complex(Real(3), Real(0)), Complex(Real(1), Real(0)),
                                 ctx);
    CHECK(abs(h3.value.re - Real("1.20205690315959428539973816151")) <
          h3.error_bound + tol(27));

    CHECK_THROWS_AS(hurwitz_zeta(Complex(Real(2), Real(0)),
                                 Complex(Real(-2), Real(0)), ctx),
                    PoleError);
}

TEST_CASE("gauss 2F1 at unit argument") {
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());

    // 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b))
    const Complex a(Real(1) / 4, Real(0)), b(Real(1) / 3, Real(0)),
        c(Real(2), Real(0));
    const auto f = gauss_2f1_unit(a, b, c, ctx);
    const Complex want = gamma(c, ctx).value * gamma(c - a - b, ctx).value /
                         (gamma(c - a, ctx).value * gamma(c - b, ctx).value);
    CHECK(abs(f.value - want) < f.error_bound + tol(26));
}

TEST_CASE("working precision promotes inputs created under lower precision") {
    Real coarse;
    {
        PrecisionGuard low(20);
        coarse = Real(1) / 3;
    }
    const auto ctx = ctx30();
    PrecisionGuard guard(ctx.working_digits());
    const Real fine = to_working(coarse);
    // the promoted copy participates at full precision from here on
    const Real probe = fine * 3 - 1;
    CHECK(abs(probe) < pow10_neg(18));
    CHECK(fine.precision() >= ctx.working_digits());
}

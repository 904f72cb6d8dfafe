#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eulerlab/conjecture.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/precision.hpp"

using namespace eulerlab;
using namespace eulerlab::conjecture;

namespace {

PrecisionContext ctx_with(unsigned digits) {
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.validate();
    return ctx;
}

Real tol(int k) { return pow10_neg(static_cast<unsigned>(k)); }

// coefficient of u^k, zero beyond the stored degree
Rational coeff(const CubicPoly& p, std::size_t k) {
    return k < p.coefficients.size() ? p.coefficients[k] : Rational(0);
}

} // namespace

TEST_CASE("hand-checked low-order polynomials") {
    // a_1 = a_2 = u
    for (unsigned n : {1u, 2u}) {
        const auto p = a_poly(n);
        CHECK(coeff(p, 0) == 0);
        CHECK(coeff(p, 1) == 1);
        CHECK(coeff(p, 2) == 0);
    }

    // a_3 = u + u^2/4, a_4 = u + u^2/12
    const auto p3 = a_poly(3);
    CHECK(coeff(p3, 1) == 1);
    CHECK(coeff(p3, 2) == Rational(1, 4));

    const auto p4 = a_poly(4);
    CHECK(coeff(p4, 1) == 1);
    CHECK(coeff(p4, 2) == Rational(1, 12));

    // a_5 = u + 19/96 u^2 + 1/192 u^3 (from the recurrence at n = 3)
    const auto p5 = a_poly(5);
    CHECK(coeff(p5, 2) == Rational(19, 96));
    CHECK(coeff(p5, 3) == Rational(1, 192));
}

TEST_CASE("recurrence holds identically in u up to n = 120") {
    // n (n+1)^2 a_{n+2} = n (2n+1) a_{n+1} + (n^3 + (-1)^(n+1) u) a_n
    for (unsigned n = 1; n <= 120; ++n) {
        const auto a0 = a_poly(n);
        const auto a1 = a_poly(n + 1);
        const auto a2 = a_poly(n + 2);

        const std::size_t width = a2.coefficients.size() + 2;
        for (std::size_t k = 0; k < width; ++k) {
            const Rational lhs = Rational(n) * Rational(n + 1) * Rational(n + 1) *
                                 coeff(a2, k);
            Rational rhs = Rational(n) * Rational(2 * n + 1) * coeff(a1, k);
            rhs += Rational(n) * Rational(n) * Rational(n) * coeff(a0, k);
            const Rational sign = (n % 2 == 1) ? Rational(1) : Rational(-1);
            if (k >= 1) rhs += sign * coeff(a0, k - 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("exact and floating evaluations agree") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    for (const char* t_text : {"0.25", "1", "1.5"}) {
        const Real t(t_text);
        const Real exact = a_eval(150, t, ctx);
        const Real recur = a_recurrence_float(150, t, ctx);
        CHECK(abs(exact - recur) < tol(20) * (abs(exact) + 1));
    }
}

TEST_CASE("product limit matches the expansion limit") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());

    const auto lim = product_limit(Complex(Real(1), Real(0)), ctx);
    CHECK(abs(lim.value.re - Real("1.15362129685557081592254551145")) < tol(25));
    CHECK(abs(lim.value.im) < tol(25));
}

TEST_CASE("gap to the limit shrinks monotonically") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());

    for (const char* t_text : {"0.25", "0.5", "1"}) {
        const Real t(t_text);
        const Real g10 = gap(10, t, ctx);
        const Real g100 = gap(100, t, ctx);
        const Real g1000 = gap(1000, t, ctx);
        CHECK(g10 > g100);
        CHECK(g100 > g1000);
        CHECK(g1000 > 0);
    }
}

TEST_CASE("vanishing parameter collapses the sequence and its limit to zero") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());

    // u = 0: every a_n = 0, so the sequence limit is 0 as well
    const auto lim = product_limit(Complex(Real(0), Real(0)), ctx);
    CHECK(abs(lim.value.re) < tol(18));
    CHECK(a_eval(50, Real(0), ctx) == 0);
}

TEST_CASE("zero factor in the product is rejected") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    CHECK_THROWS_AS(product_limit(Complex(Real(-2), Real(0)), ctx), ZeroDivisor);
}

TEST_CASE("degree cap is enforced") {
    CHECK_THROWS_AS(a_poly(5000, 2000), CapExceeded);
}

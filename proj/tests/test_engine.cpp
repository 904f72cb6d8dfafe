#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eulerlab/engine.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/special.hpp"

using namespace eulerlab;

namespace {

PrecisionContext ctx_with(unsigned digits) {
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.validate();
    return ctx;
}

Real tol(int k) { return pow10_neg(static_cast<unsigned>(k)); }

} // namespace

TEST_CASE("direct sum of a geometric series") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    TermSource src;
    src.term = [](std::uint64_t n) {
        Real p(1);
        for (std::uint64_t i = 0; i < n; ++i) p /= 2;
        return Complex(p, Real(0));
    };
    const auto v = direct_sum(src, 120, ctx);
    CHECK(abs(v.value - Complex(Real(1), Real(0))) < tol(25));
    CHECK(v.terms_used == 120);
    CHECK(v.method == Method::direct);
}

TEST_CASE("euler-maclaurin sums an inverse square series to zeta(2)") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());

    TermSource src;
    src.smooth = fn_rational({Complex(Real(1), Real(0))},
                             {{Complex(Real(0), Real(0)), 2}});
    const auto v = sum_em(src, ctx);

    const Real pi = const_pi(ctx);
    const Real err = abs(v.value.re - pi * pi / 6);
    CHECK(err < v.error_bound);
    CHECK(err < tol(28));
    CHECK(v.method == Method::euler_maclaurin);
    CHECK(v.terms_used > 0);
}

TEST_CASE("euler-maclaurin handles a shifted pole") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    // sum 1/(n + 1/2)^2 = pi^2/2 - 4
    TermSource src;
    src.smooth = fn_rational({Complex(Real(1), Real(0))},
                             {{Complex(Real(-1) / 2, Real(0)), 2}});
    const auto v = sum_em(src, ctx);
    const Real pi = const_pi(ctx);
    CHECK(abs(v.value.re - (pi * pi / 2 - 4)) < v.error_bound + tol(24));
}

TEST_CASE("euler-maclaurin error bounds are honest under refinement") {
    const auto lo = ctx_with(20);
    const auto hi = ctx_with(35);

    SeriesValue coarse, fine;
    {
        PrecisionGuard guard(lo.working_digits());
        TermSource src;
        src.smooth = fn_rational({Complex(Real(1), Real(0))},
                                 {{Complex(Real(0), Real(0)), 3}});
        coarse = sum_em(src, lo);
    }
    {
        PrecisionGuard guard(hi.working_digits());
        TermSource src;
        src.smooth = fn_rational({Complex(Real(1), Real(0))},
                                 {{Complex(Real(0), Real(0)), 3}});
        fine = sum_em(src, hi);
    }
    PrecisionGuard guard(hi.working_digits());
    CHECK(abs(to_working(coarse.value) - fine.value) <
          to_working(coarse.error_bound) + to_working(fine.error_bound));
}

TEST_CASE("non-convergent input is rejected") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());

    // harmonic decay: no 1/n^(1+d) falloff
    TermSource src;
    src.smooth = fn_rational({Complex(Real(1), Real(0))},
                             {{Complex(Real(0), Real(0)), 1}});
    CHECK_THROWS_AS(sum_em(src, ctx), NonConvergent);
}

TEST_CASE("term cap surfaces as CapExceeded") {
    auto ctx = ctx_with(30);
    ctx.max_terms = 100;
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());

    TermSource src;
    src.smooth = fn_rational({Complex(Real(1), Real(0))},
                             {{Complex(Real(0), Real(0)), 2}});
    CHECK_THROWS_AS(sum_em(src, ctx), CapExceeded);
}

TEST_CASE("alternating acceleration reaches log 2") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());

    // sum (-1)^n / n = -log 2; the sign lives in the term
    TermSource src;
    src.term = [](std::uint64_t n) {
        const Real sign = (n % 2 == 0) ? Real(1) : Real(-1);
        return Complex(sign / Real(n), Real(0));
    };
    const auto v = sum_alternating(src, ctx);
    const Real ln2("0.6931471805599453094172321214581765680755");
    const Real err = abs(v.value.re + ln2);
    CHECK(err < v.error_bound);
    CHECK(err < tol(28));
    CHECK(v.method == Method::alternating_accel);
}

TEST_CASE("alternating acceleration reaches eta(2)") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    TermSource src;
    src.term = [](std::uint64_t n) {
        const Real sign = (n % 2 == 0) ? Real(1) : Real(-1);
        return Complex(sign / (Real(n) * Real(n)), Real(0));
    };
    const auto v = sum_alternating(src, ctx);
    const Real pi = const_pi(ctx);
    CHECK(abs(v.value.re + pi * pi / 12) < v.error_bound + tol(24));
}

TEST_CASE("tail quadrature integrates a rational tail") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    const auto f = fn_rational({Complex(Real(1), Real(0))},
                               {{Complex(Real(0), Real(0)), 2}});
    Real err(0);
    std::uint64_t evals = 0;
    const Complex got =
        detail::tail_quadrature(*f, Real(10), pow10_neg(30), err, evals);
    // integral of t^-2 over [10, inf) = 1/10
    CHECK(abs(got - Complex(Real(1) / 10, Real(0))) < err + tol(24));
    CHECK(evals > 0);
}

TEST_CASE("smooth nodes expose exact derivatives") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    const auto f = fn_rational({Complex(Real(1), Real(0))},
                               {{Complex(Real(0), Real(0)), 2}});
    // d/dt t^-2 = -2 t^-3, second derivative 6 t^-4
    const Real t(3);
    CHECK(abs(f->deriv(1, t) - Complex(Real(-2) / 27, Real(0))) < tol(24));
    CHECK(abs(f->deriv(2, t) - Complex(Real(6) / 81, Real(0))) < tol(24));

    const auto tail = f->tail_integral(Real(5));
    REQUIRE(tail.has_value());
    CHECK(abs(*tail - Complex(Real(1) / 5, Real(0))) < tol(24));
}

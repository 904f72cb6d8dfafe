#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eulerlab/errors.hpp"
#include "eulerlab/parametric.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/special.hpp"

using namespace eulerlab;
using namespace eulerlab::parametric;

namespace {

PrecisionContext ctx_with(unsigned digits) {
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.validate();
    return ctx;
}

Real tol(int k) { return pow10_neg(static_cast<unsigned>(k)); }

Complex cx(double re, double im = 0) { return {Real(re), Real(im)}; }

} // namespace

TEST_CASE("dual identity at the origin reproduces zeta(2,1) = zeta(3)") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());
    const auto sp = eu_dual_sides(cx(0), ctx);
    CHECK(sp.residual < tol(25));
    CHECK(abs(sp.lhs.value.re - Real("1.20205690315959428539973816151")) < tol(25));
    CHECK(sp.lhs.value.im == 0);
}

TEST_CASE("dual identity holds at real and complex points") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());
    for (const Complex x : {cx(0.5), cx(-0.75), cx(0.5, 0.25), cx(-1.25, 1.5)}) {
        const auto sp = eu_dual_sides(x, ctx);
        CHECK(sp.residual <= sp.lhs.error_bound + sp.rhs.error_bound);
        CHECK(sp.residual < tol(25));
    }
}

TEST_CASE("dual identity rejects poles at positive integers") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    CHECK_THROWS_AS(eu_dual_sides(cx(1), ctx), PoleError);
    CHECK_THROWS_AS(eu_dual_sides(cx(3), ctx), PoleError);
}

TEST_CASE("taylor coefficients of the dual identity") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    // first coefficient: zeta(3,1) + zeta(2,2) = zeta(4) = pi^4/90
    const auto c1 = eu_dual_coefficient(1, ctx);
    CHECK(c1.residual < tol(15));
    CHECK(abs(c1.lhs.value.re - pi * pi * pi * pi / 90) < tol(15));
    CHECK(abs(c1.lhs.value.im) < tol(15));

    // second coefficient: zeta(5)
    const auto c2 = eu_dual_coefficient(2, ctx);
    CHECK(c2.residual < tol(15));
    CHECK(abs(c2.lhs.value.re - Real("1.03692775514336992633136548646")) < tol(15));
}

TEST_CASE("generating function of zeta(2,1;x) matches its cubed-log form") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());
    for (const Complex x : {cx(0.5), cx(-0.5, 0.5), cx(0.25, -0.75)}) {
        const auto sp = z_gen(x, ctx);
        CHECK(sp.residual < tol(20));
    }
}

TEST_CASE("zeta(s,1) generating function and its value at x = -1") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    const auto at_half = zetas1_gf_sides(cx(0.5), ctx);
    CHECK(at_half.residual < tol(20));

    // at x = -1 both sides collapse to 1
    const auto at_minus = zetas1_gf_sides(cx(-1), ctx);
    CHECK(at_minus.residual < tol(20));
    CHECK(abs(at_minus.lhs.value - Complex(Real(1), Real(0))) < tol(20));
}

TEST_CASE("s-suite linear combination cancels") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());
    const auto r = s_suite(cx(0.25, 0.5), ctx);
    CHECK(r.combination_residual < tol(20));
    CHECK(r.combination_residual <= r.combined_bound);
}

TEST_CASE("sum formula at depths one to three") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    for (const Complex x : {cx(0.3), cx(-0.4, 0.2)}) {
        CHECK(sum_formula_sides(1, x, ctx).residual < tol(10));
        CHECK(sum_formula_sides(2, x, ctx).residual < tol(10));
    }

    // depth three at the origin: zeta(2,1,1) = zeta(4)
    const auto r3 = sum_formula_sides(3, cx(0), ctx);
    CHECK(r3.residual < tol(6));
}

TEST_CASE("logarithm identity on the real interval and complex disc") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());
    for (const Complex x : {cx(-1.25), cx(0.5), cx(0.3, -0.2)}) {
        CHECK(log_identity_sides(x, ctx).residual < tol(20));
    }
}

TEST_CASE("arctangent triple evaluates one constant three ways") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());
    const auto t = arctan_triple(ctx);
    const Real want("0.976574446708340623337675800659");
    CHECK(abs(t.v1.value.re - want) < tol(28));
    CHECK(abs(t.v1.value - t.v2.value) < tol(25));
    CHECK(abs(t.v2.value - t.v3.value) < tol(25));
}

TEST_CASE("tangent sums match their digamma closed forms") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());
    const auto t = tangent_sums(ctx);
    CHECK(t.first.residual < tol(25));
    CHECK(t.second.residual < tol(25));
    CHECK(abs(t.first.lhs.value.re - Real("0.671865985524009837878390572804")) <
          tol(27));
    CHECK(abs(t.second.lhs.value.re - Real("0.568260019379645262338364371896")) <
          tol(27));
}

TEST_CASE("two-variable generating function and its parity") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    const Complex x = cx(0.3, 0.1), y = cx(0.45, -0.2);
    CHECK(gf2_sides(x, y, ctx).residual < tol(20));

    // odd in y, even in x
    const auto base = gf2_sides(x, y, ctx);
    const auto flip_y = gf2_sides(x, Complex(-y.re, -y.im), ctx);
    const auto flip_x = gf2_sides(Complex(-x.re, -x.im), y, ctx);
    CHECK(abs(base.lhs.value + flip_y.lhs.value) <
          base.lhs.error_bound + flip_y.lhs.error_bound + tol(20));
    CHECK(abs(base.lhs.value - flip_x.lhs.value) <
          base.lhs.error_bound + flip_x.lhs.error_bound + tol(20));
}

TEST_CASE("coincident arguments need the explicit limit path") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    CHECK_THROWS_AS(gf2_sides(cx(0.25), cx(0.25), ctx), RemovableSingularity);
    const auto lim = gf2_sides(cx(0.25), cx(0.25), ctx, true);
    CHECK(lim.residual < tol(14));
}

TEST_CASE("four sigma building blocks match their closed forms") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());
    const auto r = sigma_closed(cx(0.3), cx(0.45), ctx);
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.residual[i] < tol(20));
}

TEST_CASE("hyperbolic form at real and complex points") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    CHECK(thm2_sides(cx(0.5), cx(1.5), ctx).residual < tol(15));
    CHECK(thm2_sides(cx(0.25, 0.5), cx(0.75, -0.25), ctx).residual < tol(15));
}

TEST_CASE("one-variable section of the hyperbolic form") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    CHECK(gf2_3_sides(cx(0.75), ctx).residual < tol(15));
    CHECK(gf2_3_sides(cx(1.25), ctx).residual < tol(15));
}

TEST_CASE("half-half double sum equals pi^2/64 - 1/16") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());
    const auto sp = half_half_value(ctx);
    const Real pi = const_pi(ctx);
    const Real want = pi * pi / 64 - Real(1) / 16;
    CHECK(abs(sp.lhs.value.re - want) < tol(20));
    CHECK(abs(sp.rhs.value.re - want) < tol(20));
    CHECK(sp.residual < tol(20));
}

TEST_CASE("cotangent expansion check") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());
    CHECK(cot_expansion_check(cx(0.3, 0.1), ctx).residual < tol(20));
    CHECK(cot_expansion_check(cx(0.7), ctx).residual < tol(20));
    CHECK_THROWS_AS(cot_expansion_check(cx(2), ctx), PoleError);
}

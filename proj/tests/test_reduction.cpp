#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eulerlab/errors.hpp"
#include "eulerlab/mzv.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/reduction.hpp"
#include "eulerlab/special.hpp"

using namespace eulerlab;
using namespace eulerlab::reduction;

namespace {

PrecisionContext ctx_with(unsigned digits) {
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.validate();
    return ctx;
}

Real tol(int k) { return pow10_neg(static_cast<unsigned>(k)); }

SeriesValue mzv2(unsigned a, unsigned b, const PrecisionContext& ctx) {
    mzv::MZVIndex idx;
    idx.slots = {{a, +1}, {b, +1}};
    return mzv::mzv_eval(idx, ctx);
}

} // namespace

TEST_CASE("expression algebra and canonical text") {
    const auto z2 = ZetaExpression::zeta(2);
    const auto z3 = ZetaExpression::zeta(3);

    CHECK((z2 * z3).to_string() == "z(2)*z(3)");
    CHECK((Rational(3, 2) * z3).to_string() == "3/2*z(3)");
    CHECK((z3 - z3).to_string() == "0");
    CHECK((z2 + z2) == Rational(2) * z2);
    CHECK(ZetaExpression::constant(Rational(5, 7)).to_string() == "5/7");

    // zeta(1) is not a value; it cancels to the zero expression
    CHECK(ZetaExpression::zeta(1).to_string() == "0");
}

TEST_CASE("linear euler reduction zeta(n,1)") {
    CHECK(reduce_s1(2).to_string() == "z(3)");
    CHECK(reduce_s1(5).to_string() == "5/2*z(6) - z(2)*z(4) - 1/2*z(3)*z(3)");
}

TEST_CASE("even weight collapses to a pi power") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    // zeta(3,1) = pi^4/360
    const auto closed = expr_eval(reduce_s1(3), ctx);
    const auto pi4 = expr_eval(Rational(1, 360) * ZetaExpression::pi_power(4), ctx);
    CHECK(abs(closed.value - pi4.value) < tol(20));
}

TEST_CASE("even-odd reduction golden text") {
    CHECK(reduce_even_odd(2, 3).to_string() == "9/2*z(5) - 2*z(2)*z(3)");
    CHECK(reduce_swap(3, 2).to_string() == "-11/2*z(5) + 3*z(2)*z(3)");
}

TEST_CASE("reflection formula text and exact consistency") {
    const auto r = reflect(2, 3);
    CHECK(r.to_string() == "-z(5) + z(2)*z(3)");

    // reduce_even_odd + reduce_swap must reproduce the reflection exactly
    for (unsigned a = 2; a <= 10; a += 2) {
        for (unsigned b = 3; a + b <= 13; b += 2) {
            CHECK(reduce_even_odd(a, b) + reduce_swap(b, a) == reflect(a, b));
        }
    }
}

TEST_CASE("closed forms match numeric double sums") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    const std::pair<unsigned, unsigned> pairs[] = {{2, 3}, {2, 5}, {4, 3}, {6, 3}};
    for (const auto& [a, b] : pairs) {
        const auto closed = expr_eval(reduce_even_odd(a, b), ctx);
        const auto direct = mzv2(a, b, ctx);
        CHECK(abs(closed.value - direct.value) < tol(20));

        const auto swapped = expr_eval(reduce_swap(b, a), ctx);
        const auto direct_sw = mzv2(b, a, ctx);
        CHECK(abs(swapped.value - direct_sw.value) < tol(20));
    }

    // zeta(n,1) closed forms
    for (unsigned n = 2; n <= 5; ++n) {
        const auto closed = expr_eval(reduce_s1(n), ctx);
        const auto direct = mzv2(n, 1, ctx);
        CHECK(abs(closed.value - direct.value) < tol(20));
    }
}

TEST_CASE("divergent swap target is rejected") {
    CHECK_THROWS_AS(reduce_swap(1, 4), DomainError);
}

TEST_CASE("sum formula composition lists") {
    // depth r, shifted weight s: C(s+r-1, r-1) compositions summing to
    // zeta(r+s+1)
    auto list = sum_formula_compositions(2, 1);
    CHECK(list.size() == 2);

    list = sum_formula_compositions(3, 2);
    CHECK(list.size() == 6);
    for (const auto& idx : list) {
        CHECK(idx.depth() == 3);
        CHECK(idx.weight() == 6);
        CHECK(idx.slots[0].exponent >= 2);
    }

    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    Complex total(Real(0), Real(0));
    for (const auto& idx : sum_formula_compositions(2, 1))
        total = total + mzv::mzv_eval(idx, ctx).value;
    // zeta(3,1) + zeta(2,2) = zeta(4)
    const Real pi = const_pi(ctx);
    CHECK(abs(total.re - pi * pi * pi * pi / 90) < tol(15));
}

TEST_CASE("expression evaluation tracks zeta(3,3)") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    const auto z3 = ZetaExpression::zeta(3);
    const auto expr = Rational(1, 2) * (z3 * z3 - ZetaExpression::zeta(6));
    const auto closed = expr_eval(expr, ctx);
    const auto direct = mzv2(3, 3, ctx);
    CHECK(abs(closed.value - direct.value) < tol(20));
}

TEST_CASE("inversion sums telescope to a single zeta") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());

    // sum over a of zeta(2+a, 1+s-a) = zeta(s+3) for s = 0,1,2
    for (unsigned s = 0; s <= 2; ++s) {
        Complex total(Real(0), Real(0));
        for (unsigned a = 0; a <= s; ++a)
            total = total + mzv2(2 + a, 1 + s - a, ctx).value;
        const auto want =
            riemann_zeta(Complex(Real(3 + s), Real(0)), ctx).value;
        CHECK(abs(total - want) < tol(15));
    }
}

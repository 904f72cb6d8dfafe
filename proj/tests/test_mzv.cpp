#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eulerlab/errors.hpp"
#include "eulerlab/mzv.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/special.hpp"

using namespace eulerlab;
using namespace eulerlab::mzv;

namespace {

PrecisionContext ctx_with(unsigned digits) {
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.validate();
    return ctx;
}

Real tol(int k) { return pow10_neg(static_cast<unsigned>(k)); }

SeriesValue eval(const char* text, const PrecisionContext& ctx) {
    return mzv_eval(MZVIndex::parse(text), ctx);
}

} // namespace

TEST_CASE("index parsing and rendering") {
    auto idx = MZVIndex::parse("3,1");
    CHECK(idx.depth() == 2);
    CHECK(idx.weight() == 4);
    CHECK(idx.slots[0].exponent == 3);
    CHECK(idx.slots[0].sign == 1);
    CHECK(idx.to_string() == "3,1");

    idx = MZVIndex::parse(" 2~ , 1 ");
    CHECK(idx.slots[0].sign == -1);
    CHECK(idx.slots[1].sign == 1);
    CHECK(idx.to_string() == "2~,1");

    // the empty index is the empty product
    CHECK(MZVIndex::parse("").slots.empty());
    CHECK_THROWS_AS(MZVIndex::parse("3,x"), DomainError);
    CHECK_THROWS_AS(MZVIndex::parse("0,1"), DomainError);
}

TEST_CASE("empty index evaluates to one") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    const auto v = mzv_eval(MZVIndex{}, ctx);
    CHECK(v.value.re == 1);
    CHECK(v.value.im == 0);
}

TEST_CASE("depth-one values") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    CHECK(abs(eval("2", ctx).value.re - pi * pi / 6) < tol(27));
    CHECK(abs(eval("4", ctx).value.re - pi * pi * pi * pi / 90) < tol(27));

    // alternating: zeta(1~) = -log 2, zeta(2~) = -pi^2/12
    CHECK(abs(eval("1~", ctx).value.re +
              Real("0.6931471805599453094172321214581765680755")) < tol(27));
    CHECK(abs(eval("2~", ctx).value.re + pi * pi / 12) < tol(27));
}

TEST_CASE("depth-two oracles") {
    const auto ctx = ctx_with(30);
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);
    const Real z3("1.20205690315959428539973816151");

    CHECK(abs(eval("2,1", ctx).value.re - z3) < tol(25));
    CHECK(abs(eval("3,1", ctx).value.re - pi * pi * pi * pi / 360) < tol(25));
    CHECK(abs(eval("2,2", ctx).value.re - pi * pi * pi * pi / 120) < tol(25));
    CHECK(abs(eval("2~,1", ctx).value.re - z3 / 8) < tol(25));
}

TEST_CASE("stuffle product at weight five") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    // zeta(2) zeta(3) = zeta(2,3) + zeta(3,2) + zeta(5)
    const Complex lhs =
        riemann_zeta(Complex(Real(2), Real(0)), ctx).value *
        riemann_zeta(Complex(Real(3), Real(0)), ctx).value;
    const Complex rhs = eval("2,3", ctx).value + eval("3,2", ctx).value +
                        riemann_zeta(Complex(Real(5), Real(0)), ctx).value;
    CHECK(abs(lhs - rhs) < tol(20));
}

TEST_CASE("depth three and four") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    // zeta(2,1,1) = zeta(4)
    const auto d3 = eval("2,1,1", ctx);
    CHECK(abs(d3.value.re - pi * pi * pi * pi / 90) < d3.error_bound + tol(6));

    // zeta(2,1,1,1) = zeta(5)
    const auto d4 = eval("2,1,1,1", ctx);
    CHECK(abs(d4.value.re - Real("1.03692775514336992633136548646")) <
          d4.error_bound + tol(6));

    CHECK_THROWS_AS(eval("2,1,1,1,1", ctx), DepthUnsupported);
    CHECK_THROWS_AS(eval("1,2", ctx), DivergentIndex);
}

TEST_CASE("error bounds are honest under refinement") {
    SeriesValue coarse, fine;
    {
        const auto lo = ctx_with(15);
        PrecisionGuard guard(lo.working_digits());
        coarse = eval("3,2", lo);
    }
    {
        const auto hi = ctx_with(25);
        PrecisionGuard guard(hi.working_digits());
        fine = eval("3,2", hi);
    }
    PrecisionGuard guard(35);
    CHECK(abs(to_working(coarse.value) - to_working(fine.value)) <
          to_working(coarse.error_bound) + to_working(fine.error_bound));
}

TEST_CASE("repeated-two blocks against pi powers") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    // zeta({2}_n) = pi^(2n) / (2n+1)!
    const auto b1 = block_closed_form(BlockKind::two_block, 1, ctx);
    CHECK(abs(b1.value.re - pi * pi / 6) < tol(15));

    const auto m2 = eval("2,2", ctx);
    const auto b2 = block_closed_form(BlockKind::two_block, 2, ctx);
    CHECK(abs(m2.value - b2.value) < m2.error_bound + b2.error_bound + tol(15));

    const auto m3 = eval("2,2,2", ctx);
    const auto b3 = block_closed_form(BlockKind::two_block, 3, ctx);
    CHECK(abs(m3.value - b3.value) < m3.error_bound + b3.error_bound + tol(6));
}

TEST_CASE("three-one blocks against pi powers") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);

    // zeta({3,1}_n) = 2 pi^(4n) / (4n+2)!
    const auto b1 = block_closed_form(BlockKind::three_one_block, 1, ctx);
    CHECK(abs(b1.value.re - pi * pi * pi * pi / 360) < tol(15));

    const auto m2 = eval("3,1,3,1", ctx);
    const auto b2 = block_closed_form(BlockKind::three_one_block, 2, ctx);
    CHECK(abs(m2.value - b2.value) < m2.error_bound + b2.error_bound + tol(6));
}

TEST_CASE("sine product identity") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    CHECK(sin_product_sides(Complex(Real(1) / 4, Real(0)), ctx).residual < tol(15));
    CHECK(sin_product_sides(Complex(Real(1) / 2, Real(0)), ctx).residual < tol(15));
    CHECK(sin_product_sides(Complex(Real("0.3"), Real("0.4")), ctx).residual <
          tol(15));
}

TEST_CASE("three-way generating function of the three-one blocks") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    for (const double x : {0.25, 0.5}) {
        const auto z = zagier_gf_sides(Complex(Real(x), Real(0)), ctx);
        CHECK(abs(z.blocks.value - z.cosh_form.value) < tol(15));
        CHECK(abs(z.cosh_form.value - z.hypergeometric.value) < tol(15));
    }
}

TEST_CASE("cubed-gamma generating function and its sixth coefficient") {
    const auto ctx = ctx_with(25);
    PrecisionGuard guard(ctx.working_digits());

    CHECK(cube_gamma_sides(Complex(Real(1) / 2, Real(0)), ctx).residual < tol(20));

    // coefficient of x^6: (zeta(3)^2 - zeta(6)) / 2
    const auto c2 = cube_gamma_coefficient(2, ctx);
    const Real z3("1.20205690315959428539973816151");
    const Real pi = const_pi(ctx);
    const Real pi6 = pi * pi * pi * pi * pi * pi;
    CHECK(abs(c2.value.re - (z3 * z3 - pi6 / 945) / 2) < tol(20));
}

TEST_CASE("reduction of the double block sums") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());

    const auto n1 = open_conj_sides(1, ctx);
    CHECK(n1.residual < tol(12));

    const auto n2 = open_conj_sides(2, ctx);
    CHECK(n2.residual < tol(6));
}

TEST_CASE("depth-four check triangulates zeta(3,3)") {
    const auto ctx = ctx_with(20);
    PrecisionGuard guard(ctx.working_digits());
    const auto d = depth4_check(ctx);
    // zeta(3,3) = (zeta(3)^2 - zeta(6)) / 2
    const Real want("0.213798868224592547099583574508");
    CHECK(abs(d.reference.value.re - want) < tol(15));
    CHECK(abs(d.nonalternating.value - d.reference.value) < tol(6));
    CHECK(abs(d.alternating_scaled.value - d.reference.value) < tol(6));
}

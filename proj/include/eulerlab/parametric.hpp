#pragma once

#include "eulerlab/complex.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/series_value.hpp"

#include <array>

namespace eulerlab::parametric {

// Dual identity for the weighted double sum:
//   lhs = sum_n 1/(n(n-x)) * sum_{m<n} 1/(m-x)   (inner sum via digamma)
//   rhs = sum_n 1/(n^2(n-x))
// Requires x not a positive integer; near-integer x raises
// PrecisionLossError, exact positive integers PoleError.
SidePair eu_dual_sides(const Complex& x, const PrecisionContext& ctx);

// k-th Taylor coefficient at x = 0 of each side of the dual identity,
// extracted by circle finite differences (radius 1/4, 64 points, shared
// across calls at the same precision). k <= 4.
SidePair eu_dual_coefficient(unsigned k, const PrecisionContext& ctx);

// Ordinary generating function of the zeta sequence:
//   lhs = sum_n x/(n(n-x)),  rhs = -digamma(1-x) - gamma.
SidePair z_gen(const Complex& x, const PrecisionContext& ctx);

// Generating-function form of the weight-reduction identity:
//   lhs = sum_n H_{n-1}/(n(n-x))
//   rhs = sum 1/(n(n-x)^2)
//         - x/2 * { sum 1/(n^2(n-x)^2) + (sum 1/(n(n-x)))^2 }.
SidePair zetas1_gf_sides(const Complex& x, const PrecisionContext& ctx);

// The six auxiliary sums S1..S6 feeding the equivalence algebra, plus the
// residual of the combination S1 - S2 + (S3 + S4^2) x/2 - (S6 - S5).
struct SSuite {
    std::array<SeriesValue, 6> s;
    Real combination_residual;
    Real combined_bound;
};
SSuite s_suite(const Complex& x, const PrecisionContext& ctx);

// Parametric sum formula, r in {1,2,3}:
//   lhs = sum_{k_1>...>k_r>0} (1/k_1) prod_j 1/(k_j - x)
//         (nested partial-sum arrays, fitted logarithmic tail)
//   rhs = sum_n 1/(n^r (n-x)).
SidePair sum_formula_sides(unsigned r, const Complex& x,
                           const PrecisionContext& ctx);

// Logarithmic corollary of the dual identity (principal branch):
//   lhs = sum_n log(1 - x/n)/n^2
//   rhs = sum_n (1/n) sum_{m<n} log((1-x/m)/(1-x/n))/(n-m),
// the double sum evaluated as the difference of two reordered single
// series via sum_{n>m} 1/(n(n-m)) = H_m/m.
SidePair log_identity_sides(const Complex& x, const PrecisionContext& ctx);

// Three independent evaluations of the arctangent constant:
//   v1 = sum_n (1/n) sum_{m<n} (1/m) arctan(m/(n^2-mn+1))
//   v2 = sum_n arctan(1/n)/n^2
//   v3 = sum_{n>=0} (-1)^n zeta(2n+3)/(2n+1)
struct ArctanTriple {
    SeriesValue v1, v2, v3;
};
ArctanTriple arctan_triple(const PrecisionContext& ctx);

// The two companion evaluations at x = i:
//   first:  sum 1/(n(n^2+1))   vs  gamma + Re digamma(1+i)
//   second: sum 1/(n^2(n^2+1)) vs  pi^2/6 - (pi coth pi - 1)/2
struct TangentSums {
    SidePair first, second;
};
TangentSums tangent_sums(const PrecisionContext& ctx);

// Two-variable generating function:
//   lhs = sum_n (1/(n^2-x^2)) sum_{m<n} m y/(m^2-y^2)  (inner via digamma)
//   rhs = the four-term cotangent right side.
// x = +-y and x = +-2y are removable points: rejected with
// RemovableSingularity unless limit_path is set, in which case both sides
// are averaged over x(1 +- eps), eps = 10^(-digits/3).
SidePair gf2_sides(const Complex& x, const Complex& y,
                   const PrecisionContext& ctx, bool limit_path = false);

// The four right-side terms of the two-variable generating function, each
// paired with its digamma/cotangent closed form and the residual.
struct SigmaClosed {
    std::array<SeriesValue, 4> series;
    std::array<SeriesValue, 4> closed;
    std::array<Real, 4> residual;
};
SigmaClosed sigma_closed(const Complex& x, const Complex& y,
                         const PrecisionContext& ctx, bool limit_path = false);

// Hyperbolic form of the two-variable generating function (x -> ix,
// y -> iy), valid for x^2, y^2 not negative integers.
SidePair thm2_sides(const Complex& x, const Complex& y,
                    const PrecisionContext& ctx);

// Its x = 2y specialization:
//   lhs = sum_n [ n/(n^2+y^2) + sum_{m<n} 2m/(m^2+y^2) ] / (n^2+4y^2)
//   rhs = (coth(pi y)+coth(2 pi y)) sum_n 2 pi n y /((n^2+y^2)(n^2+9y^2)).
SidePair gf2_3_sides(const Complex& y, const PrecisionContext& ctx);

// The (1/2,1/2) special value:
//   sum_n (1/(4n^2-1)) sum_{m<n} m/(4m^2-1) = pi^2/64 - 1/16.
SidePair half_half_value(const PrecisionContext& ctx);

// Internal expansion check: pi cot(pi x)/(2x) vs 1/(2x^2) - sum 1/(k^2-x^2).
SidePair cot_expansion_check(const Complex& x, const PrecisionContext& ctx);

} // namespace eulerlab::parametric

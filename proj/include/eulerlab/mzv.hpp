#pragma once

#include "eulerlab/complex.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/series_value.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace eulerlab::mzv {

// One slot of a nested zeta index: exponent >= 1, sign +1 or -1. Sign -1
// multiplies that slot's terms by (-1)^k.
struct Slot {
    unsigned exponent = 2;
    int sign = +1;

    friend bool operator==(const Slot&, const Slot&) = default;
};

// Nested (alternating) zeta index zeta(s_1, ..., s_N) over strictly
// decreasing summation variables, outermost slot first. The empty index
// denotes the constant 1.
struct MZVIndex {
    std::vector<Slot> slots;

    std::size_t depth() const { return slots.size(); }
    unsigned weight() const;

    // "2~,1" -> {(2,-1), (1,+1)}; a trailing '~' marks an alternating slot.
    static MZVIndex parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const MZVIndex&, const MZVIndex&) = default;
};

// Evaluate a nested zeta value.
//   depth 0     exactly 1
//   depth 1-2   full target precision: closed-form inner sums (Hurwitz
//               zeta / digamma) with the outer series summed by
//               Euler-Maclaurin or alternating acceleration
//   depth 3-4   nested cumulative arrays in machine precision with a
//               fitted logarithmic tail; honest reduced-precision bound
// Throws DivergentIndex for a leading (1,+) slot, DepthUnsupported above
// depth 4, DomainError for a zero exponent.
SeriesValue mzv_eval(const MZVIndex& idx, const PrecisionContext& ctx);

enum class BlockKind { two_block, three_one_block };

// Closed forms of the repeated-block values:
//   two_block        zeta({2}_n)   = pi^(2n) / (2n+1)!
//   three_one_block  zeta({3,1}_n) = 2 pi^(4n) / (4n+2)!
SeriesValue block_closed_form(BlockKind kind, unsigned n,
                              const PrecisionContext& ctx);

// sin(pi x)/(pi x) against the alternating series over two-blocks,
// sum_n (-1)^n zeta({2}_n) x^(2n). Requires |x| < 1.
SidePair sin_product_sides(const Complex& x, const PrecisionContext& ctx);

// Three independent evaluations of the {3,1}-block generating function:
//   blocks          sum_n zeta({3,1}_n) x^(4n) from the closed-form blocks
//   cosh_form       (cosh(pi x) - cos(pi x)) / (pi^2 x^2)    (1 at x = 0)
//   hypergeometric  2F1(t,-t;1;1) * 2F1(it,-it;1;1), t = (1+i)x/2
// Requires |x| < 1.
struct ZagierTriple {
    SeriesValue blocks, cosh_form, hypergeometric;
};
ZagierTriple zagier_gf_sides(const Complex& x, const PrecisionContext& ctx);

// Generating function of the three-blocks against the gamma product:
//   lhs  sum_n zeta({3}_n) x^(3n), coefficients by Newton's identities
//        over the power sums zeta(3), zeta(6), ..., so each coefficient
//        is exact in the ring those values generate
//   rhs  1 / (Gamma(1+x) Gamma(1+w x) Gamma(1+w^2 x)),  w = exp(2 pi i/3)
// Requires |x| < 1.
SidePair cube_gamma_sides(const Complex& x, const PrecisionContext& ctx);

// zeta({3}_n): the x^(3n) coefficient of the series above.
SeriesValue cube_gamma_coefficient(unsigned n, const PrecisionContext& ctx);

// Desk-scale instances of the 2^(3n) identity between the {2,1}-blocks
// and their alternating counterparts:
//   n = 0   trivially 1 = 1
//   n = 1   zeta(2,1)     vs   8 zeta(2~,1)        (full precision)
//   n = 2   zeta(2,1,2,1) vs  64 zeta(2~,1,2~,1)   (reduced precision)
// Throws DepthUnsupported for n > 2.
SidePair open_conj_sides(unsigned n, const PrecisionContext& ctx);

// The depth-4 case next to its proven depth-2 equal:
//   nonalternating      zeta(2,1,2,1)
//   alternating_scaled  64 zeta(2~,1,2~,1)
//   reference           zeta(3,3), full precision
struct DepthFourCheck {
    SeriesValue nonalternating, alternating_scaled, reference;
};
DepthFourCheck depth4_check(const PrecisionContext& ctx);

} // namespace eulerlab::mzv

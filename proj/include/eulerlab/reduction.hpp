#pragma once

#include "eulerlab/bernoulli.hpp"
#include "eulerlab/mzv.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/series_value.hpp"

#include <string>
#include <vector>

namespace eulerlab::reduction {

// One monomial: coefficient * prod_i z(zeta_args[i]) * pi^pi_power.
struct ZetaTerm {
    Rational coefficient;
    std::vector<unsigned> zeta_args; // sorted ascending, each >= 2
    unsigned pi_power = 0;           // always even

    bool operator==(const ZetaTerm&) const = default;
};

// A polynomial in single zeta values (and even powers of pi) over the
// rationals, kept in canonical form: factor lists sorted, like terms merged,
// zero coefficients dropped, terms ordered by (factor count, factor list,
// pi power). z(1) is identically zero, applied at construction time, so a
// term acquiring a z(1) factor vanishes.
class ZetaExpression {
public:
    ZetaExpression() = default; // the zero expression

    static ZetaExpression constant(Rational c);
    static ZetaExpression zeta(unsigned s);     // s = 1 yields zero
    static ZetaExpression pi_power(unsigned k); // k must be even

    const std::vector<ZetaTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ZetaExpression& operator+=(const ZetaExpression& o);
    ZetaExpression& operator-=(const ZetaExpression& o);
    friend ZetaExpression operator+(ZetaExpression a, const ZetaExpression& b) {
        a += b;
        return a;
    }
    friend ZetaExpression operator-(ZetaExpression a, const ZetaExpression& b) {
        a -= b;
        return a;
    }
    friend ZetaExpression operator*(const ZetaExpression& a,
                                    const ZetaExpression& b);
    friend ZetaExpression operator*(const Rational& c, ZetaExpression e);

    // Re-sorts, merges, and prunes. Public so idempotence is testable; all
    // factories and operators already return canonical expressions.
    ZetaExpression canonicalized() const;

    // Stable text form, e.g. "9/2*z(5) - 2*z(2)*z(3)"; zero renders as "0".
    std::string to_string() const;

    bool operator==(const ZetaExpression&) const = default;

private:
    std::vector<ZetaTerm> terms_;
    void canonicalize();
};

// zeta(s,1) = (s/2) zeta(s+1) - 1/2 sum_{k=1}^{s-2} zeta(k+1) zeta(s-k).
ZetaExpression reduce_s1(unsigned s);

// zeta(a,b) for even a > 0 and odd b (b = 1 allowed; the zeta(1) factor
// vanishes by convention):
//   zeta(a)zeta(b) + 1/2 [C(a+b,a) - 1] zeta(a+b)
//   - sum_{r=1}^{N-1} [C(2r,a-1) + C(2r,b-1)] zeta(2r+1) zeta(a+b-1-2r),
// with a+b = 2N+1.
ZetaExpression reduce_even_odd(unsigned a, unsigned b);

// zeta(b,a) for the same parity pattern, from the reflection formula:
//   -1/2 [1 + C(a+b,a)] zeta(a+b)
//   + sum_{r=1}^{N-1} [C(2r,a-1) + C(2r,b-1)] zeta(2r+1) zeta(a+b-1-2r).
// b = 1 is rejected: zeta(1,a) diverges.
ZetaExpression reduce_swap(unsigned b, unsigned a);

// zeta(s,t) + zeta(t,s) = zeta(s)zeta(t) - zeta(s+t), s,t >= 2.
ZetaExpression reflect(unsigned s, unsigned t);

// All indices (a1+2, a2+1, ..., ar+1) with ai >= 0 summing to s; their MZVs
// sum to zeta(r+s+1). The list has C(s+r-1, r-1) entries, enumerated with
// a1 descending.
std::vector<mzv::MZVIndex> sum_formula_compositions(unsigned r, unsigned s);

// Numeric value of an expression with propagated bounds.
SeriesValue expr_eval(const ZetaExpression& e, const PrecisionContext& ctx);

} // namespace eulerlab::reduction

#pragma once

#include "eulerlab/bernoulli.hpp"
#include "eulerlab/complex.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/series_value.hpp"

#include <vector>

namespace eulerlab::conjecture {

// Exact polynomial in u = t^3 (the recurrence preserves t^3-gradedness, so
// only powers of u appear). coefficients[k] multiplies u^k.
struct CubicPoly {
    std::vector<Rational> coefficients;

    unsigned degree() const {
        return coefficients.empty()
                   ? 0
                   : static_cast<unsigned>(coefficients.size() - 1);
    }
    bool operator==(const CubicPoly&) const = default;
};

// The recurrence sequence a_1 = a_2 = u,
//   n (n+1)^2 a_{n+2} = n (2n+1) a_{n+1} + (n^3 + (-1)^{n+1} u) a_n,
// carried exactly over the rationals. Throws CapExceeded past the cap.
CubicPoly a_poly(unsigned n, unsigned cap = 2000);

// t^3 * prod_{n>=1} (1 + t^3/(8 n^3)): a finite head product with the
// logarithm of the tail summed exactly against Hurwitz-zeta values. Throws
// ZeroDivisor when a head factor vanishes (t^3 = -8 n^3).
SeriesValue product_limit(const Complex& t, const PrecisionContext& ctx);

// a_n(t): exact polynomial evaluation for n <= 200, arbitrary-precision
// floating recurrence above (degree growth makes exact mode quadratic in
// cost). The floating path is exposed for cross-validation.
Real a_eval(unsigned n, const Real& t, const PrecisionContext& ctx);
Real a_recurrence_float(unsigned n, const Real& t, const PrecisionContext& ctx);

// |a_n(t) - lim a_n|, the empirical convergence measurement.
Real gap(unsigned n, const Real& t, const PrecisionContext& ctx);

} // namespace eulerlab::conjecture

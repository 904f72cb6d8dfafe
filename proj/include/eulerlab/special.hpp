#pragma once

#include "eulerlab/complex.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/series_value.hpp"

namespace eulerlab {

// ---- public operations (each runs under its own precision guard) ----

Real const_pi(const PrecisionContext& ctx);
Real const_euler_gamma(const PrecisionContext& ctx);

SeriesValue gamma(const Complex& z, const PrecisionContext& ctx);
SeriesValue digamma(const Complex& z, const PrecisionContext& ctx);
SeriesValue polygamma(unsigned m, const Complex& z, const PrecisionContext& ctx);

// riemann_zeta: domain Re(s) > 1, plus the single hardwired value
// zeta(0) = -1/2. s = 1 raises PoleError, other Re(s) <= 1 DomainError.
SeriesValue riemann_zeta(const Complex& s, const PrecisionContext& ctx);

// hurwitz_zeta(s, a) = sum_{n>=0} (n+a)^(-s), Re(s) > 1, a not in {0,-1,...}.
SeriesValue hurwitz_zeta(const Complex& s, const Complex& a,
                         const PrecisionContext& ctx);

// 2F1(a, b; c; 1) by the Gauss evaluation; requires Re(c-a-b) > 0.
SeriesValue gauss_2f1_unit(const Complex& a, const Complex& b,
                           const Complex& c, const PrecisionContext& ctx);

// ---- raw kernels at the ambient (current thread) precision ----
//
// These skip the guard/bound bookkeeping and are what the summation engine
// and the identity evaluators call in inner loops. Pole checks are the
// caller's responsibility apart from exact hits, which still throw.
namespace detail {

unsigned ambient_digits();

// distance from z to the nearest element of {0, -1, -2, ...}
Real nonpos_int_distance(const Complex& z);

Complex digamma_raw(const Complex& z);
Complex polygamma_raw(unsigned m, const Complex& z);
Complex hurwitz_raw(const Complex& s, const Complex& a);
Complex zeta_raw(const Complex& s);
Real zeta_raw(const Real& s);
Complex gamma_raw(const Complex& z);

Real factorial_real(unsigned n);

} // namespace detail

} // namespace eulerlab

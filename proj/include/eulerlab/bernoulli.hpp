#pragma once

#include "eulerlab/precision.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace eulerlab {

using Rational = boost::multiprecision::cpp_rational;

// Exact Bernoulli number B_m (B_1 = -1/2). Values are computed once via the
// defining recurrence and cached for the process lifetime; thread-safe.
const Rational& bernoulli_rational(unsigned m);

// B_m at the current working precision.
Real bernoulli_real(unsigned m);

// Exact binomial coefficient.
Rational binomial_rational(unsigned n, unsigned k);

} // namespace eulerlab

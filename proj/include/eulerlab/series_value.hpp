#pragma once

#include "eulerlab/complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eulerlab {

// How a SeriesValue was produced.
enum class Method {
    direct,            // plain partial sum
    euler_maclaurin,   // head + integral + Bernoulli boundary corrections
    alternating_accel, // Chebyshev-weighted alternating acceleration
    closed_form,       // special-function formula, no summation
};

const char* method_name(Method m);

// A numeric result together with an honest absolute error bound.
struct SeriesValue {
    Complex value;
    Real error_bound;          // absolute; +inf means "no bound claimed"
    std::uint64_t terms_used = 0;
    Method method = Method::direct;
    std::vector<std::string> notes; // recorded warnings (branch choices etc.)
};

// Left side / right side of one identity instance.
struct SidePair {
    SeriesValue lhs;
    SeriesValue rhs;
    Real residual; // |lhs.value - rhs.value|
};

inline SidePair make_side_pair(SeriesValue l, SeriesValue r) {
    Real res = abs(l.value - r.value);
    return {std::move(l), std::move(r), std::move(res)};
}

} // namespace eulerlab

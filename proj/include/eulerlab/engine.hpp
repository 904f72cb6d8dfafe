#pragma once

#include "eulerlab/precision.hpp"
#include "eulerlab/series_value.hpp"
#include "eulerlab/smooth_fn.hpp"

#include <cstdint>
#include <functional>

namespace eulerlab {

// One series sum_{n>=1} term(n).
//
//   term        the exact summand; when absent, smooth->eval(n) is used
//   smooth      smooth continuation valid for t >= tail_start (required by
//               sum_em; optional elsewhere, where it only sharpens bounds)
//   tail_start  first index from which `smooth` matches `term`
struct TermSource {
    std::function<Complex(std::uint64_t)> term;
    FnPtr smooth;
    std::uint64_t tail_start = 1;

    Complex term_at(std::uint64_t n) const;
};

// Plain partial sum of the first N terms. The error bound is the crude
// heuristic N * |term(N)| when a smooth tail descriptor exists, otherwise
// +inf (no claim).
SeriesValue direct_sum(const TermSource& src, std::uint64_t N,
                       const PrecisionContext& ctx);

// Full sum via head + Euler-Maclaurin tail: exact tail integral when the
// node provides one, tanh-sinh quadrature otherwise, plus ctx.em_order
// Bernoulli boundary corrections with exact derivatives. Throws
// NonConvergent when the decay probe finds less than 1/n^(1+d) falloff and
// CapExceeded when ctx.max_terms is hit first.
SeriesValue sum_em(const TermSource& src, const PrecisionContext& ctx);

// Full sum of an alternating series; src.term must carry the sign (-1)^n.
// Chebyshev-polynomial acceleration, cross-validated against a direct
// partial sum; disagreement beyond 1e-6 raises AccelUnreliable.
SeriesValue sum_alternating(const TermSource& src, const PrecisionContext& ctx);

namespace detail {

// integral of f over [N, inf) via the substitution t = N/u and tanh-sinh
// quadrature on (0, 1]; writes an error estimate and the evaluation count.
Complex tail_quadrature(const SmoothFn& f, const Real& N, const Real& eps_abs,
                        Real& err_out, std::uint64_t& evals_out);

} // namespace detail

} // namespace eulerlab

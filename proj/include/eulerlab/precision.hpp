#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>

namespace eulerlab {

// Arbitrary-precision real. Expression templates are off so values behave
// like ordinary value types (auto deduction, std::function returns, ...).
// The precision of freshly constructed values follows the thread-default,
// which PrecisionGuard manages.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Requested accuracy plus evaluation budget for every public operation.
//
//   digits       decimal digits the caller wants certified
//   guard_digits extra working digits carried internally
//   max_terms    hard cap on series terms / iterations
//   em_order     number of Bernoulli correction pairs in tail expansions
struct PrecisionContext {
    unsigned digits = 30;
    unsigned guard_digits = 10;
    std::uint64_t max_terms = 2'000'000;
    unsigned em_order = 8;

    // Throws DomainError when a field is outside its documented range
    // (digits >= 2, guard_digits >= 4, max_terms >= 100, em_order >= 1).
    void validate() const;

    unsigned working_digits() const { return digits + guard_digits; }
};

// RAII switch of the thread's default decimal precision.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned decimal_digits);
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
    ~PrecisionGuard();

private:
    unsigned saved_;
};

// Fundamental constants at the current working precision, straight from
// the underlying library's provably-rounded implementations.
Real const_pi();
Real const_euler_gamma();
Real const_log2();

// 10^(-k) at the current working precision.
Real pow10_neg(unsigned k);

// Re-register a value at (at least) the thread's current precision. Binary
// operations inherit the larger operand precision, so a low-precision input
// can silently cap a whole computation (e.g. im/re quotients built from two
// components of the same coarse parameter). Multiplying by a freshly built
// exact 1 promotes the representation without changing the value.
inline Real to_working(const Real& r) { return r * Real(1); }

// +infinity as a Real (used as the "unbounded" error-bound marker).
Real real_infinity();

} // namespace eulerlab

#include "eulerlab/precision.hpp"
#include "eulerlab/errors.hpp"

#include <mpfr.h>

namespace eulerlab {

void PrecisionContext::validate() const {
    if (digits < 2)
        throw DomainError("PrecisionContext: digits must be >= 2");
    if (guard_digits < 4)
        throw DomainError("PrecisionContext: guard_digits must be >= 4");
    if (max_terms < 100)
        throw DomainError("PrecisionContext: max_terms must be >= 100");
    if (em_order < 1)
        throw DomainError("PrecisionContext: em_order must be >= 1");
}

PrecisionGuard::PrecisionGuard(unsigned decimal_digits)
    : saved_(Real::default_precision()) {
    Real::default_precision(decimal_digits);
}

PrecisionGuard::~PrecisionGuard() {
    Real::default_precision(saved_);
}

Real const_pi() {
    Real x(0);
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

Real const_euler_gamma() {
    Real x(0);
    mpfr_const_euler(x.backend().data(), MPFR_RNDN);
    return x;
}

Real const_log2() {
    Real x(0);
    mpfr_const_log2(x.backend().data(), MPFR_RNDN);
    return x;
}

Real pow10_neg(unsigned k) {
    Real ten(10);
    return pow(ten, -static_cast<int>(k));
}

Real real_infinity() {
    Real x(0);
    mpfr_set_inf(x.backend().data(), 1);
    return x;
}

} // namespace eulerlab

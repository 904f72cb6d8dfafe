#pragma once

#include "eulerlab/complex.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace eulerlab {

// Smooth continuation of a series term: t is the (real) summation index.
// Derivatives are exact (symbolic per node), which is what makes the
// Euler-Maclaurin tail corrections trustworthy; numeric differentiation is
// deliberately not offered.
class SmoothFn {
public:
    virtual ~SmoothFn() = default;

    virtual Complex eval(const Real& t) const = 0;

    // k-th derivative at t; deriv(0, t) == eval(t).
    virtual Complex deriv(unsigned k, const Real& t) const = 0;

    // Exact value of the integral over [N, inf) when the node family has a
    // closed form for it; nullopt means "use quadrature".
    virtual std::optional<Complex> tail_integral(const Real& N) const {
        (void)N;
        return std::nullopt;
    }
};

using FnPtr = std::shared_ptr<const SmoothFn>;

// c
FnPtr fn_const(Complex c);

// f + g + ...
FnPtr fn_sum(std::vector<FnPtr> parts);

// c * f
FnPtr fn_scale(Complex c, FnPtr f);

// f * g (derivatives via Leibniz; no exact tail integral)
FnPtr fn_prod(FnPtr a, FnPtr b);

// f - g
FnPtr fn_sub(FnPtr a, FnPtr b);

// Rational function  scale * p(t) / prod_i (t - pole_i)^mult_i  with
// deg p < sum mult_i. Partial fractions are computed once at construction;
// evaluation uses the factored form, derivatives and the exact tail
// integral use the partial-fraction form. Exactly repeated poles in the
// list are merged into higher multiplicities.
FnPtr fn_rational(std::vector<Complex> numer_coeffs,
                  std::vector<std::pair<Complex, unsigned>> poles,
                  Complex scale = Complex(1));

// psi^(j)(alpha*t + c); exact tail integral for j >= 2.
FnPtr fn_polygamma(unsigned j, Real alpha, Complex c);

// hurwitz zeta H(s, alpha*t + c); exact tail integral for Re(s) > 2.
FnPtr fn_hurwitz(Complex s, Real alpha, Complex c);

// log(1 - x/t), principal branch.
FnPtr fn_log1m(Complex x);

// arctan(1/t)
FnPtr fn_atan_recip();

} // namespace eulerlab

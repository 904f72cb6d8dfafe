#pragma once

#include "eulerlab/precision.hpp"

#include <string>
#include <utility>

namespace eulerlab {

// Complex value over Real. std::complex is specified only for the
// floating-point types, so we carry our own minimal implementation with
// principal-branch elementary functions.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {} // NOLINT(google-explicit-constructor)
    Complex(int r) : re(r), im(0) {}              // NOLINT(google-explicit-constructor)
    Complex(long r) : re(r), im(0) {}             // NOLINT(google-explicit-constructor)
    Complex(unsigned r) : re(r), im(0) {}         // NOLINT(google-explicit-constructor)
    Complex(unsigned long r) : re(r), im(0) {}    // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real(const Real& tol = Real(0)) const { return abs(im) <= tol; }

    Complex operator-() const { return {-re, -im}; }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Complex to_working(const Complex& z) {
    return {to_working(z.re), to_working(z.im)};
}
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex& Complex::operator/=(const Complex& o) {
    // Smith's algorithm; avoids overflow on widely scaled components.
    if (abs(o.re) >= abs(o.im)) {
        Real r = o.im / o.re;
        Real d = o.re + o.im * r;
        Real nr = (re + im * r) / d;
        im = (im - re * r) / d;
        re = std::move(nr);
    } else {
        Real r = o.re / o.im;
        Real d = o.re * r + o.im;
        Real nr = (re * r + im) / d;
        im = (im * r - re) / d;
        re = std::move(nr);
    }
    return *this;
}

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// Principal branch: Im(log z) in (-pi, pi].
inline Complex log(const Complex& z) {
    return {log(abs(z)), arg(z)};
}

inline Complex sqrt(const Complex& z) {
    if (z.im == 0 && z.re >= 0) return {sqrt(z.re), Real(0)};
    Real m = sqrt(abs(z));
    Real a = arg(z) / 2;
    return {m * cos(a), m * sin(a)};
}

inline Complex pow(const Complex& base, const Complex& e) {
    if (base.im == 0 && base.re > 0) {
        if (e.im == 0) return {pow(base.re, e.re), Real(0)};
        Real lb = log(base.re);
        Real m = exp(e.re * lb);
        Real a = e.im * lb;
        return {m * cos(a), m * sin(a)};
    }
    return exp(e * log(base));
}

inline Complex pow(const Complex& base, long e) {
    if (base.im == 0) return {pow(base.re, e), Real(0)};
    // Exact binary powering keeps integer exponents cheap.
    if (e == 0) return Complex(1);
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Complex acc(1), b = base;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return inv ? Complex(1) / acc : acc;
}

inline Complex sin(const Complex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline Complex cos(const Complex& z) {
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

inline Complex cot(const Complex& z) { return cos(z) / sin(z); }

inline Complex cosh(const Complex& z) {
    return {cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im)};
}

inline Complex sinh(const Complex& z) {
    return {sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)};
}

inline Complex coth(const Complex& z) { return cosh(z) / sinh(z); }

// Render as "a", "a+bi" or "a-bi" with `digits` significant digits.
std::string to_string(const Complex& z, unsigned digits);

// Parse "a", "bi", "a+bi", "a-bi" where each part is a decimal ("0.25",
// "1e-3") or a rational ("1/3"). Whitespace is ignored. Throws DomainError
// on malformed input. Evaluated at the current working precision.
Complex parse_complex(const std::string& text);

// Parse a single real part with the same decimal/rational grammar.
Real parse_real(const std::string& text);

} // namespace eulerlab

#pragma once

#include <stdexcept>
#include <string>

namespace eulerlab {

// Base for every condition this library raises on purpose. Callers that
// want blanket handling (the verification harness, the CLI) catch this;
// anything else escaping an evaluator is a genuine bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested exactly on a pole (e.g. zeta at s = 1, gamma at a
// nonpositive integer, a parametric identity at an excluded integer point).
class PoleError : public Error {
public:
    using Error::Error;
};

// Input outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// The requested accuracy cannot be certified: the computation ran but its
// internal error estimate exceeds what the precision context promises
// (typically: parameters too close to a singularity for the working
// precision).
class PrecisionLossError : public Error {
public:
    using Error::Error;
};

// A term or iteration cap was hit before the target accuracy was reached.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A series handed to the summation engine does not decay like n^(-1-d).
class NonConvergent : public Error {
public:
    using Error::Error;
};

// Series acceleration disagreed with the direct-summation cross-check.
class AccelUnreliable : public Error {
public:
    using Error::Error;
};

// Nested-sum depth outside the supported range.
class DepthUnsupported : public Error {
public:
    using Error::Error;
};

// A multiple-zeta index whose leading entry makes the sum divergent.
class DivergentIndex : public Error {
public:
    using Error::Error;
};

// An infinite product hit a factor that is exactly zero.
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

// A closed-form reduction was requested for exponents of the wrong parity.
class ParityError : public Error {
public:
    using Error::Error;
};

// Parameters sit on a removable singularity of a closed form; the caller
// must explicitly request the limit path to evaluate there.
class RemovableSingularity : public Error {
public:
    using Error::Error;
};

} // namespace eulerlab

#pragma once

#include "eulerlab/complex.hpp"
#include "eulerlab/precision.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eulerlab::registry {

// One evaluated identity instance. `residual` is |lhs - rhs|, `bound` the
// combined declared error bound of the two evaluations, `tolerance` the
// pass threshold (default 10^(5-digits), with per-case overrides on the
// reduced-precision paths). `error` carries the exception text when the
// evaluator threw; such cases count as errors, not failures.
struct CaseResult {
    std::string id;
    std::string params;
    Complex lhs;
    Complex rhs;
    Real residual{0};
    Real bound{0};
    Real tolerance{0};
    bool pass = false;
    std::string error;
    bool precision_failure = false;
};

struct VerificationReport {
    std::string suite;
    unsigned digits = 0;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases; // sorted by (id, params)
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errored = 0;
    bool precision_failure = false;
    double wall_seconds = 0;
};

// Runs one of {core, parametric, mzv, reduction, conjecture, all}.
// Deterministic given (name, digits, seed): parameter points come from a
// documented splitmix64 stream per identity family, drawn on a dyadic grid
// so they are exactly representable at every precision, and rejected within
// 1e-3 of the family's pole set. Cases never abort the suite. With
// parallelism > 1 every case runs in a forked worker process (the working
// precision of the numeric type is a process-wide setting, so threads
// cannot share it); the schedule changes, the report does not. A positive
// max_terms overrides the default term cap.
VerificationReport run_suite(const std::string& name, unsigned digits,
                             std::uint64_t seed, unsigned parallelism,
                             std::uint64_t max_terms = 0);

enum class ReportFormat { json, csv, text };

// json: stable schema {suite, digits, seed, cases[], summary, wall_seconds}.
// csv:  one row per case. text: "id params residual bound PASS/FAIL".
std::string render_report(const VerificationReport& r, ReportFormat f);

} // namespace eulerlab::registry

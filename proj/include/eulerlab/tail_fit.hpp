#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eulerlab::tailfit {

// One tail-model basis function  ln^a(t) / t^b.
struct LogPow {
    unsigned a;
    unsigned b; // b >= 2 so the tail converges
};

namespace detail {

template <typename S> S pow_uint(S base, unsigned e) {
    S r(1);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// f and its derivatives live in the family ln^a(t) * t^(-b); the family is
// closed under d/dt, so exact Euler-Maclaurin boundary terms are available.
template <typename S>
using LogPowCombo = std::map<std::pair<unsigned, unsigned>, S>;

template <typename S>
LogPowCombo<S> differentiate(const LogPowCombo<S>& f) {
    LogPowCombo<S> d;
    for (const auto& [key, c] : f) {
        auto [a, b] = key;
        if (a > 0) d[{a - 1, b + 1}] += c * S(int(a));
        d[{a, b + 1}] -= c * S(int(b));
    }
    return d;
}

template <typename S>
S eval_combo(const LogPowCombo<S>& f, const S& t, const S& log_t) {
    using std::pow;
    S acc(0);
    for (const auto& [key, c] : f) {
        auto [a, b] = key;
        acc += c * pow_uint(log_t, a) / pow_uint(t, b);
    }
    return acc;
}

// integral over [N, inf) of ln^a(t)/t^b, b >= 2:
// N^(1-b) * sum_j C(a,j) ln^(a-j)(N) j! / (b-1)^(j+1).
template <typename S> S log_pow_integral(unsigned a, unsigned b, const S& N) {
    using std::log;
    if (b < 2) throw std::invalid_argument("log_pow_integral: b must be >= 2");
    const S log_n = log(N);
    S binom(1), fact(1), acc(0);
    const S bm1(int(b) - 1);
    S denom = bm1;
    for (unsigned j = 0; j <= a; ++j) {
        acc += binom * fact * pow_uint(log_n, a - j) / denom;
        binom *= S(int(a - j)) / S(int(j + 1));
        fact *= S(int(j + 1));
        denom *= bm1;
    }
    return acc / pow_uint(N, b - 1);
}

} // namespace detail

// sum_{n > N} ln^a(n)/n^b  to far below the fit noise floor:
// integral + midpoint + four Bernoulli boundary corrections at N+1.
template <typename S> S log_pow_tail(unsigned a, unsigned b, const S& N) {
    using std::log;
    const S m = N + S(1);
    const S log_m = log(m);

    detail::LogPowCombo<S> f;
    f[{a, b}] = S(1);

    S acc = detail::log_pow_integral<S>(a, b, m);
    acc += detail::eval_combo(f, m, log_m) / S(2);

    // B_2/2!, B_4/4!, B_6/6!, B_8/8!
    const S weights[] = {S(1) / S(12), -S(1) / S(720), S(1) / S(30240),
                         -S(1) / S(1209600)};
    auto deriv = detail::differentiate(f); // f'
    for (int j = 0; j < 4; ++j) {
        acc -= weights[j] * detail::eval_combo(deriv, m, log_m);
        if (j < 3) deriv = detail::differentiate(detail::differentiate(deriv));
    }
    return acc;
}

// p sample indices descending from N into [N/2, N], pairwise distinct.
inline std::vector<std::uint64_t> fit_nodes(std::uint64_t N, std::size_t p) {
    if (p < 1 || N < 4 * p) throw std::invalid_argument("fit_nodes: N too small");
    std::vector<std::uint64_t> nodes(p);
    for (std::size_t i = 0; i < p; ++i)
        nodes[i] = N - (p > 1 ? (i * (N / 2)) / (p - 1) : 0);
    return nodes;
}

// Solve A c = rhs (square, coefficients in the scalar type S, right side in
// the value type V) by Gaussian elimination with partial pivoting.
template <typename S, typename V>
std::vector<V> solve_dense(std::vector<std::vector<S>> A, std::vector<V> rhs) {
    using std::abs;
    const std::size_t p = A.size();
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < p; ++r)
            if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
        if (!(abs(A[piv][col]) > S(0)))
            throw std::runtime_error("tail fit: singular sample matrix");
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < p; ++r) {
            const S m = A[r][col] / A[col][col];
            for (std::size_t c = col; c < p; ++c) A[r][c] -= m * A[col][c];
            rhs[r] -= rhs[col] * m;
        }
    }
    std::vector<V> sol(p, rhs[0] - rhs[0]); // zero of V
    for (std::size_t r = p; r-- > 0;) {
        V acc = rhs[r];
        for (std::size_t c = r + 1; c < p; ++c) acc -= sol[c] * A[r][c];
        sol[r] = acc * (S(1) / A[r][r]);
    }
    return sol;
}

// Fit g(n_i) = samples[i] against the basis and return sum_{n > N} g(n)
// under the fitted model.
template <typename S, typename V>
V fitted_tail(const std::vector<LogPow>& basis,
              const std::vector<std::uint64_t>& nodes,
              const std::vector<V>& samples, std::uint64_t N) {
    using std::log;
    const std::size_t p = basis.size();
    if (nodes.size() != p || samples.size() != p)
        throw std::invalid_argument("fitted_tail: size mismatch");
    std::vector<std::vector<S>> A(p, std::vector<S>(p));
    for (std::size_t i = 0; i < p; ++i) {
        const S t(static_cast<double>(nodes[i]));
        const S log_t = log(t);
        for (std::size_t j = 0; j < p; ++j)
            A[i][j] = detail::pow_uint(log_t, basis[j].a) /
                      detail::pow_uint(t, basis[j].b);
    }
    std::vector<V> coeff = solve_dense<S, V>(std::move(A), samples);
    V acc = samples[0] - samples[0]; // zero of V
    for (std::size_t j = 0; j < p; ++j)
        acc += coeff[j] * log_pow_tail<S>(basis[j].a, basis[j].b,
                                          S(static_cast<double>(N)));
    return acc;
}

} // namespace eulerlab::tailfit

#include "eulerlab/mzv.hpp"

#include "eulerlab/engine.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/smooth_fn.hpp"
#include "eulerlab/special.hpp"
#include "eulerlab/tail_fit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace eulerlab::mzv {

namespace {

bool is_zero(const Complex& z) { return z.re == 0 && z.im == 0; }

Complex times_i(const Complex& z) { return {-z.im, z.re}; }

Real rounding_floor(const Complex& v, const PrecisionContext& ctx) {
    return pow10_neg(ctx.working_digits() - 4) * (abs(v) + 1);
}

// Bound shape for values assembled from closed-form special functions.
SeriesValue closed(Complex v, const PrecisionContext& ctx) {
    unsigned bound_digits =
        ctx.digits + (ctx.guard_digits >= 3 ? ctx.guard_digits - 3 : 1);
    SeriesValue out;
    out.error_bound = pow10_neg(bound_digits) * (abs(v) + 1);
    out.value = std::move(v);
    out.method = Method::closed_form;
    return out;
}

SeriesValue sv_scale(const Complex& c, SeriesValue a,
                     const PrecisionContext& ctx) {
    a.value = c * a.value;
    a.error_bound = abs(c) * a.error_bound + rounding_floor(a.value, ctx);
    return a;
}

// sum_{m>=1} sign^m / m^s. Callers guarantee s >= 2 when sign = +1.
Complex slot_full_sum(unsigned s, int sign) {
    if (sign > 0) return Complex(detail::zeta_raw(Real(int(s))));
    if (s == 1) return Complex(-log(Real(2)));
    return Complex((pow(Real(2), 1 - int(s)) - 1) *
                   detail::zeta_raw(Real(int(s))));
}

// Closed form of the ascending partial sum  sum_{m<n} m^{-b}  as a smooth
// function of the outer index: zeta(b) - H(b, t), or psi(t) + gamma at b=1.
FnPtr fn_inner_ascending(unsigned b, const PrecisionContext& ctx) {
    if (b == 1)
        return fn_sum({fn_polygamma(0, Real(1), Complex(0)),
                       fn_const(Complex(const_euler_gamma(ctx)))});
    return fn_sub(fn_const(slot_full_sum(b, +1)),
                  fn_hurwitz(Complex(int(b)), Real(1), Complex(0)));
}

// Interlaced tail  beta_b(t) = sum_{j>=0} (-1)^j (t+j)^{-b}, giving the
// alternating partial sum  sum_{m<n} (-1)^m m^{-b} = S - (-1)^n beta_b(n)
// with S the full alternating sum.
FnPtr fn_inner_interlaced(unsigned b) {
    const Real half = Real(1) / 2;
    if (b == 1)
        return fn_scale(Complex(half),
                        fn_sub(fn_polygamma(0, half, Complex(half)),
                               fn_polygamma(0, half, Complex(0))));
    return fn_scale(Complex(pow(Real(2), -int(b))),
                    fn_sub(fn_hurwitz(Complex(int(b)), half, Complex(0)),
                           fn_hurwitz(Complex(int(b)), half, Complex(half))));
}

// Per-term values of the same two inner sums, at the ambient precision.
Complex inner_ascending_at(unsigned b, const Complex& full,
                           const Real& gamma_c, std::uint64_t n) {
    const Real rn(n);
    if (b == 1) return detail::digamma_raw(Complex(rn)) + Complex(gamma_c);
    return full - detail::hurwitz_raw(Complex(int(b)), Complex(rn));
}

Complex interlaced_tail_at(unsigned b, std::uint64_t n) {
    const Real rn(n);
    if (b == 1)
        return (detail::digamma_raw(Complex((rn + 1) / 2)) -
                detail::digamma_raw(Complex(rn / 2))) /
               Complex(2);
    return Complex(pow(Real(2), -int(b))) *
           (detail::hurwitz_raw(Complex(int(b)), Complex(rn / 2)) -
            detail::hurwitz_raw(Complex(int(b)), Complex((rn + 1) / 2)));
}

FnPtr fn_outer_power(unsigned s) {
    return fn_rational({Complex(1)}, {{Complex(0), s}});
}

SeriesValue eval_depth1(const Slot& s, const PrecisionContext& ctx) {
    return closed(slot_full_sum(s.exponent, s.sign), ctx);
}

SeriesValue eval_depth2(const Slot& outer, const Slot& inner,
                        const PrecisionContext& ctx) {
    const unsigned s1 = outer.exponent, s2 = inner.exponent;
    if (outer.sign > 0 && inner.sign > 0) {
        TermSource src;
        src.smooth = fn_prod(fn_outer_power(s1), fn_inner_ascending(s2, ctx));
        SeriesValue out = sum_em(src, ctx);
        out.notes.push_back("inner partial sums in closed form");
        return out;
    }
    if (outer.sign < 0 && inner.sign > 0) {
        const Complex full = (s2 == 1) ? Complex(0) : slot_full_sum(s2, +1);
        const Real gamma_c = const_euler_gamma(ctx);
        TermSource src;
        src.term = [s1, s2, full, gamma_c](std::uint64_t n) {
            const Complex t = Complex(pow(Real(n), -int(s1))) *
                              inner_ascending_at(s2, full, gamma_c, n);
            return (n % 2 == 0) ? t : -t;
        };
        SeriesValue out = sum_alternating(src, ctx);
        out.notes.push_back("inner partial sums in closed form");
        return out;
    }

    // An alternating inner slot: split off its full sum S. The remainder
    // over the interlaced tail is alternating when the outer slot is plain
    // and smooth when the outer slot alternates.
    const Complex full_inner = slot_full_sum(s2, -1);
    const Complex head = full_inner * slot_full_sum(s1, outer.sign);
    SeriesValue tail;
    if (outer.sign > 0) {
        TermSource src;
        src.term = [s1, s2](std::uint64_t n) {
            const Complex t =
                Complex(pow(Real(n), -int(s1))) * interlaced_tail_at(s2, n);
            return (n % 2 == 0) ? t : -t;
        };
        tail = sum_alternating(src, ctx);
    } else {
        TermSource src;
        src.smooth = fn_prod(fn_outer_power(s1), fn_inner_interlaced(s2));
        tail = sum_em(src, ctx);
    }
    SeriesValue out;
    out.value = head - tail.value;
    out.error_bound = closed(head, ctx).error_bound + tail.error_bound +
                      rounding_floor(out.value, ctx);
    out.terms_used = tail.terms_used;
    out.method = tail.method;
    out.notes = std::move(tail.notes);
    out.notes.push_back("inner alternating partial sums in closed form");
    return out;
}

// Depths 3 and 4: nested cumulative arrays in extended machine precision,
// with a fitted logarithmic tail (plain outer slot) or a midpoint estimate
// (alternating outer slot). The bound is measured against a run truncated
// at half the term budget, so it is honest rather than tight.
SeriesValue eval_deep(const MZVIndex& idx, const PrecisionContext& ctx) {
    const std::size_t d = idx.depth();
    const std::uint64_t N = std::min<std::uint64_t>(1000000, ctx.max_terms);
    if (N < 5000)
        throw CapExceeded(
            "mzv_eval: the depth-3/4 path needs a term budget of at least 5000");
    const unsigned s1 = idx.slots[0].exponent;
    const bool alt_outer = idx.slots[0].sign < 0;

    auto weight = [&idx](std::size_t slot, std::uint64_t k) -> long double {
        long double v =
            std::pow(static_cast<long double>(k),
                     -static_cast<long double>(idx.slots[slot].exponent));
        return (idx.slots[slot].sign < 0 && (k & 1)) ? -v : v;
    };

    const std::uint64_t H = N / 2;
    std::vector<std::uint64_t> nodes_full, nodes_half;
    std::map<std::uint64_t, long double> samples;
    if (!alt_outer) {
        nodes_full = tailfit::fit_nodes(N, 8);
        nodes_half = tailfit::fit_nodes(H, 8);
        for (std::uint64_t k : nodes_full) samples[k] = 0;
        for (std::uint64_t k : nodes_half) samples[k] = 0;
    }

    // Compensated accumulators: plain sequential addition over 10^6 terms
    // drifts by about N*eps, which would dwarf the tail estimates below.
    struct Kahan {
        long double s = 0, c = 0;
        void add(long double x) {
            const long double y = x - c;
            const long double t = s + y;
            c = (t - s) - y;
            s = t;
        }
    };
    Kahan total, p2, p3, p4;
    long double total_half = 0, abs_acc = 0;
    long double after_full[2] = {0, 0}, after_half[2] = {0, 0};
    for (std::uint64_t k = 1; k <= N + 2; ++k) {
        const long double g = weight(0, k) * p2.s;
        if (k <= N) {
            total.add(g);
            abs_acc += std::abs(g);
            if (auto it = samples.find(k); it != samples.end()) it->second = g;
        }
        if (k == H) total_half = total.s;
        if (k == H + 1) after_half[0] = g;
        if (k == H + 2) after_half[1] = g;
        if (k == N + 1) after_full[0] = g;
        if (k == N + 2) after_full[1] = g;
        // Each level consumes the state its inner neighbour had before k.
        if (d == 4) {
            p2.add(weight(1, k) * p3.s);
            p3.add(weight(2, k) * p4.s);
            p4.add(weight(3, k));
        } else {
            p2.add(weight(1, k) * p3.s);
            p3.add(weight(2, k));
        }
    }

    long double value, value_half, tail_bound = 0;
    const long double total_v = total.s;
    if (!alt_outer) {
        std::vector<tailfit::LogPow> basis;
        for (unsigned a = 0; a <= 3; ++a) {
            basis.push_back({a, s1});
            basis.push_back({a, s1 + 1});
        }
        auto gather = [&samples](const std::vector<std::uint64_t>& nodes) {
            std::vector<long double> out;
            out.reserve(nodes.size());
            for (std::uint64_t k : nodes) out.push_back(samples.at(k));
            return out;
        };
        value = total_v + tailfit::fitted_tail<long double, long double>(
                            basis, nodes_full, gather(nodes_full), N);
        value_half = total_half + tailfit::fitted_tail<long double, long double>(
                                      basis, nodes_half, gather(nodes_half), H);
    } else {
        value = total_v + after_full[0] / 2;
        value_half = total_half + after_half[0] / 2;
        tail_bound = std::abs(after_full[0]) / 2 + std::abs(after_full[1]);
    }

    const long double noise = 1e-17L * (abs_acc + 1);
    const long double bound =
        10 * std::abs(value - value_half) + tail_bound + noise;

    SeriesValue out;
    out.value = Complex(Real(value));
    out.error_bound = Real(bound);
    out.terms_used = N;
    out.method = Method::direct;
    std::ostringstream note;
    note << "reduced precision: nested cumulative arrays to N=" << N
         << (alt_outer ? ", alternating-outer midpoint tail"
                       : ", fitted logarithmic tail");
    out.notes.push_back(note.str());
    return out;
}

} // namespace

unsigned MZVIndex::weight() const {
    unsigned w = 0;
    for (const Slot& s : slots) w += s.exponent;
    return w;
}

MZVIndex MZVIndex::parse(const std::string& text) {
    MZVIndex idx;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() &&
               std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i == text.size()) return idx;
    while (true) {
        skip_ws();
        const std::size_t start = i;
        unsigned long long e = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
            e = e * 10 + static_cast<unsigned>(text[i] - '0');
            if (e > 1000000)
                throw DomainError("mzv index: exponent too large in '" + text + "'");
            ++i;
        }
        if (i == start)
            throw DomainError("mzv index: expected an exponent in '" + text + "'");
        if (e == 0)
            throw DomainError("mzv index: exponents must be >= 1 in '" + text + "'");
        int sign = +1;
        if (i < text.size() && text[i] == '~') {
            sign = -1;
            ++i;
        }
        idx.slots.push_back({static_cast<unsigned>(e), sign});
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != ',')
            throw DomainError("mzv index: unexpected character '" +
                              std::string(1, text[i]) + "' in '" + text + "'");
        ++i;
    }
    return idx;
}

std::string MZVIndex::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) out << ',';
        out << slots[i].exponent;
        if (slots[i].sign < 0) out << '~';
    }
    return out.str();
}

SeriesValue mzv_eval(const MZVIndex& idx, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    for (const Slot& s : idx.slots) {
        if (s.exponent == 0)
            throw DomainError("mzv_eval: slot exponents must be >= 1");
        if (s.sign != 1 && s.sign != -1)
            throw DomainError("mzv_eval: slot signs must be +1 or -1");
    }
    if (idx.slots.empty()) {
        SeriesValue out = closed(Complex(1), ctx);
        out.notes.push_back("empty index");
        return out;
    }
    if (idx.slots.front() == Slot{1, +1})
        throw DivergentIndex("mzv_eval: a leading (1,+) slot diverges");
    switch (idx.depth()) {
    case 1: return eval_depth1(idx.slots[0], ctx);
    case 2: return eval_depth2(idx.slots[0], idx.slots[1], ctx);
    case 3:
    case 4: return eval_deep(idx, ctx);
    default: throw DepthUnsupported("mzv_eval: depth > 4 is not supported");
    }
}

SeriesValue block_closed_form(BlockKind kind, unsigned n,
                              const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    const Real pi = const_pi(ctx);
    Real v;
    if (kind == BlockKind::two_block)
        v = pow(pi, 2 * int(n)) / detail::factorial_real(2 * n + 1);
    else
        v = 2 * pow(pi, 4 * int(n)) / detail::factorial_real(4 * n + 2);
    return closed(Complex(v), ctx);
}

SidePair sin_product_sides(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    const Complex x = to_working(x_in);
    if (!(abs(x) < 1))
        throw DomainError("sin_product_sides: requires |x| < 1");
    const Real pi = const_pi(ctx);
    const Complex px = Complex(pi) * x;

    SeriesValue lhs =
        is_zero(x) ? closed(Complex(1), ctx) : closed(sin(px) / px, ctx);

    // sum_n (-1)^n (pi x)^(2n) / (2n+1)!
    const Complex step = -px * px;
    Complex term(1), acc(0);
    const Real eps = pow10_neg(ctx.working_digits());
    unsigned n = 0;
    for (; n <= 400; ++n) {
        acc += term;
        term = term * step /
               Complex(Real(std::uint64_t(2 * n + 2) * (2 * n + 3)));
        if (abs(term) < eps) break;
    }
    SeriesValue rhs;
    rhs.value = acc;
    rhs.error_bound = 2 * abs(term) + rounding_floor(acc, ctx);
    rhs.terms_used = n + 1;
    rhs.method = Method::direct;
    rhs.notes.push_back("two-block series, factorial convergence");
    return make_side_pair(std::move(lhs), std::move(rhs));
}

ZagierTriple zagier_gf_sides(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    const Complex x = to_working(x_in);
    if (!(abs(x) < 1))
        throw DomainError("zagier_gf_sides: requires |x| < 1");
    const Real pi = const_pi(ctx);
    const Complex px = Complex(pi) * x;

    ZagierTriple out;

    // sum_n 2 (pi x)^(4n) / (4n+2)!
    {
        const Complex step = pow(px, long(4));
        Complex term(1), acc(0);
        const Real eps = pow10_neg(ctx.working_digits());
        unsigned n = 0;
        for (; n <= 300; ++n) {
            acc += term;
            const std::uint64_t m = 4ull * n;
            term = term * step /
                   Complex(Real((m + 3) * (m + 4) * (m + 5) * (m + 6)));
            if (abs(term) < eps) break;
        }
        out.blocks.value = acc;
        out.blocks.error_bound = 2 * abs(term) + rounding_floor(acc, ctx);
        out.blocks.terms_used = n + 1;
        out.blocks.method = Method::direct;
        out.blocks.notes.push_back("block series, factorial convergence");
    }

    out.cosh_form = is_zero(x)
                        ? closed(Complex(1), ctx)
                        : closed((cosh(px) - cos(px)) / (px * px), ctx);

    const Real half = Real(1) / 2;
    const Complex t = Complex(half, half) * x;
    const Complex it = times_i(t);
    const SeriesValue f1 = gauss_2f1_unit(t, -t, Complex(1), ctx);
    const SeriesValue f2 = gauss_2f1_unit(it, -it, Complex(1), ctx);
    SeriesValue prod;
    prod.value = f1.value * f2.value;
    prod.error_bound = abs(f1.value) * f2.error_bound +
                       abs(f2.value) * f1.error_bound +
                       f1.error_bound * f2.error_bound +
                       rounding_floor(prod.value, ctx);
    prod.method = Method::closed_form;
    prod.notes.push_back("hypergeometric factorization at unit argument");
    out.hypergeometric = std::move(prod);
    return out;
}

namespace {

// e_0..e_nmax with e_n = zeta({3}_n), the elementary symmetric functions
// of {k^-3}, via Newton's identities over the power sums zeta(3i).
std::vector<Real> three_block_coefficients(unsigned nmax) {
    std::vector<Real> p(nmax + 1), e(nmax + 1);
    for (unsigned i = 1; i <= nmax; ++i)
        p[i] = detail::zeta_raw(Real(3 * int(i)));
    e[0] = 1;
    for (unsigned n = 1; n <= nmax; ++n) {
        Real acc(0);
        for (unsigned i = 1; i <= n; ++i) {
            const Real contrib = e[n - i] * p[i];
            acc += (i % 2 == 1) ? contrib : -contrib;
        }
        e[n] = acc / n;
    }
    return e;
}

} // namespace

SeriesValue cube_gamma_coefficient(unsigned n, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    const std::vector<Real> e = three_block_coefficients(n);
    SeriesValue out = closed(Complex(e[n]), ctx);
    out.error_bound *= int(n) + 1;
    out.notes.push_back("Newton's identities over the power sums zeta(3i)");
    return out;
}

SidePair cube_gamma_sides(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    const Complex x = to_working(x_in);
    if (!(abs(x) < 1))
        throw DomainError("cube_gamma_sides: requires |x| < 1");

    const unsigned nmax = ctx.working_digits() + 10;
    const std::vector<Real> e = three_block_coefficients(nmax);
    const Complex cube = x * x * x;
    Complex acc(0), xpow(1);
    for (unsigned n = 0; n <= nmax; ++n) {
        acc += Complex(e[n]) * xpow;
        xpow = xpow * cube;
    }
    SeriesValue lhs;
    lhs.value = acc;
    // first omitted coefficient is below e_nmax * zeta(3)/(nmax+1)
    lhs.error_bound = 2 * e[nmax] * abs(xpow) / (int(nmax) + 1) +
                      (int(nmax) + 1) * rounding_floor(acc, ctx);
    lhs.terms_used = nmax + 1;
    lhs.method = Method::direct;
    lhs.notes.push_back("three-block series via Newton's identities");

    const Real s3 = sqrt(Real(3)) / 2;
    const Real half = Real(1) / 2;
    const Complex w(-half, s3), w2(-half, -s3);
    const Complex g = detail::gamma_raw(Complex(1) + x) *
                      detail::gamma_raw(Complex(1) + w * x) *
                      detail::gamma_raw(Complex(1) + w2 * x);
    SeriesValue rhs = closed(Complex(1) / g, ctx);
    rhs.notes.push_back("reciprocal gamma product at the cube roots of unity");
    return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair open_conj_sides(unsigned n, const PrecisionContext& ctx) {
    if (n > 2)
        throw DepthUnsupported(
            "open_conj_sides: only n <= 2 is evaluable at depth <= 4");
    if (n == 0) {
        ctx.validate();
        PrecisionGuard guard(ctx.working_digits());
        return make_side_pair(closed(Complex(1), ctx), closed(Complex(1), ctx));
    }
    MZVIndex plain, alternating;
    for (unsigned i = 0; i < n; ++i) {
        plain.slots.push_back({2, +1});
        plain.slots.push_back({1, +1});
        alternating.slots.push_back({2, -1});
        alternating.slots.push_back({1, +1});
    }
    const Complex scale = Complex(int(1u << (3 * n)));
    SeriesValue lhs = mzv_eval(plain, ctx);
    SeriesValue rhs = sv_scale(scale, mzv_eval(alternating, ctx), ctx);
    return make_side_pair(std::move(lhs), std::move(rhs));
}

DepthFourCheck depth4_check(const PrecisionContext& ctx) {
    DepthFourCheck out;
    const MZVIndex plain{{{2, +1}, {1, +1}, {2, +1}, {1, +1}}};
    const MZVIndex alternating{{{2, -1}, {1, +1}, {2, -1}, {1, +1}}};
    const MZVIndex pair33{{{3, +1}, {3, +1}}};
    out.nonalternating = mzv_eval(plain, ctx);
    out.alternating_scaled = sv_scale(Complex(64), mzv_eval(alternating, ctx), ctx);
    out.reference = mzv_eval(pair33, ctx);
    return out;
}

} // namespace eulerlab::mzv

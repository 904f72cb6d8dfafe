#include "eulerlab/parametric.hpp"

#include "eulerlab/engine.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/smooth_fn.hpp"
#include "eulerlab/special.hpp"
#include "eulerlab/tail_fit.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace eulerlab::parametric {

namespace {

// ---------------------------------------------------------------------
// SeriesValue algebra
// ---------------------------------------------------------------------

Real rounding_floor(const Complex& v, const PrecisionContext& ctx) {
    unsigned k = ctx.working_digits() >= 4 ? ctx.working_digits() - 4 : 1;
    return (abs(v) + 1) * pow10_neg(k);
}

SeriesValue closed(Complex v, const PrecisionContext& ctx) {
    unsigned bound_digits =
        ctx.digits + (ctx.guard_digits >= 3 ? ctx.guard_digits - 3 : 1);
    Real bound = (abs(v) + 1) * pow10_neg(bound_digits);
    return {std::move(v), std::move(bound), 0, Method::closed_form, {}};
}

void merge_notes(SeriesValue& a, const SeriesValue& b) {
    for (const auto& n : b.notes) a.notes.push_back(n);
}

SeriesValue sv_add(SeriesValue a, const SeriesValue& b) {
    a.value += b.value;
    a.error_bound += b.error_bound;
    a.terms_used += b.terms_used;
    if (b.method != Method::closed_form && a.method == Method::closed_form)
        a.method = b.method;
    merge_notes(a, b);
    return a;
}

SeriesValue sv_sub(SeriesValue a, const SeriesValue& b) {
    a.value -= b.value;
    a.error_bound += b.error_bound;
    a.terms_used += b.terms_used;
    if (b.method != Method::closed_form && a.method == Method::closed_form)
        a.method = b.method;
    merge_notes(a, b);
    return a;
}

SeriesValue sv_scale(const Complex& c, SeriesValue a,
                     const PrecisionContext& ctx) {
    a.value = c * a.value;
    a.error_bound = abs(c) * a.error_bound + rounding_floor(a.value, ctx);
    return a;
}

// ---------------------------------------------------------------------
// pole guards
// ---------------------------------------------------------------------

Real round_to_integer(const Real& x) { return floor(x + Real(1) / 2); }

// distance from z to {1, 2, 3, ...}
Real positive_integer_distance(const Complex& z) {
    Real k = round_to_integer(z.re);
    if (k < 1) k = 1;
    return hypot(z.re - k, z.im);
}

// distance from z to (Z minus {0})
Real nonzero_integer_distance(const Complex& z) {
    Real k = round_to_integer(z.re);
    if (k == 0) k = z.re >= 0 ? Real(1) : Real(-1);
    return hypot(z.re - k, z.im);
}

void guard_positive_integer(const Complex& z, const PrecisionContext& ctx,
                            const char* what) {
    Real d = positive_integer_distance(z);
    if (d == 0)
        throw PoleError(std::string(what) + ": parameter " + to_string(z, 8) +
                        " is a positive integer");
    if (d < pow10_neg(ctx.digits / 2))
        throw PrecisionLossError(std::string(what) +
                                 ": parameter within 10^(-digits/2) of a "
                                 "positive integer");
}

void guard_nonzero_integer(const Complex& z, const PrecisionContext& ctx,
                           const char* what) {
    Real d = nonzero_integer_distance(z);
    if (d == 0)
        throw PoleError(std::string(what) + ": combination " +
                        to_string(z, 8) + " is a nonzero integer");
    if (d < pow10_neg(ctx.digits / 2))
        throw PrecisionLossError(std::string(what) +
                                 ": combination within 10^(-digits/2) of a "
                                 "nonzero integer");
}

// square of the parameter must avoid the positive integers
void guard_square(const Complex& v, const PrecisionContext& ctx,
                  const char* what) {
    guard_positive_integer(v * v, ctx, what);
}

bool is_zero(const Complex& z) { return z.re == 0 && z.im == 0; }

Complex imag_unit() { return Complex(Real(0), Real(1)); }

Complex times_i(const Complex& z) { return {-z.im, z.re}; }

// ---------------------------------------------------------------------
// shared series builders
// ---------------------------------------------------------------------

SeriesValue em_sum_of(FnPtr f, const PrecisionContext& ctx) {
    TermSource src;
    src.smooth = std::move(f);
    return sum_em(src, ctx);
}

// sum_n 1/(n^a (n-x)^b)
SeriesValue rational_sum(unsigned a, unsigned b, const Complex& x,
                         const PrecisionContext& ctx) {
    std::vector<std::pair<Complex, unsigned>> poles;
    if (a) poles.emplace_back(Complex(0), a);
    if (b) poles.emplace_back(x, b);
    return em_sum_of(fn_rational({Complex(1)}, std::move(poles)), ctx);
}

// digamma factor  psi(t + shift) + offset
FnPtr fn_digamma_plus(const Complex& shift, const Complex& offset) {
    return fn_sum({fn_polygamma(0, Real(1), shift), fn_const(offset)});
}

// H_{t-1} = psi(t) + gamma as a smooth factor
FnPtr fn_harmonic_prev() {
    return fn_digamma_plus(Complex(0), Complex(const_euler_gamma()));
}

// lhs of the dual identity: sum_n (psi(n-x) - psi(1-x)) / (n(n-x))
SeriesValue eu_dual_lhs(const Complex& x, const PrecisionContext& ctx) {
    Complex psi_1mx = detail::digamma_raw(Complex(1) - x);
    FnPtr f = fn_prod(fn_rational({Complex(1)}, {{Complex(0), 1}, {x, 1}}),
                      fn_digamma_plus(-x, -psi_1mx));
    return em_sum_of(std::move(f), ctx);
}

// sum_n H_{n-1}/(n(n-x))
SeriesValue harmonic_weighted_sum(const Complex& x,
                                  const PrecisionContext& ctx) {
    FnPtr f = fn_prod(fn_rational({Complex(1)}, {{Complex(0), 1}, {x, 1}}),
                      fn_harmonic_prev());
    return em_sum_of(std::move(f), ctx);
}

// rhs combination  S2 - (x/2)(S3 + S4^2) given the three pieces
SeriesValue weight_shift_rhs(const Complex& x, const SeriesValue& s2,
                             const SeriesValue& s3, const SeriesValue& s4,
                             const PrecisionContext& ctx) {
    Complex half_x = x / Complex(2);
    Complex v = s2.value - half_x * (s3.value + s4.value * s4.value);
    Real bound = s2.error_bound +
                 abs(half_x) * (s3.error_bound +
                                2 * abs(s4.value) * s4.error_bound +
                                s4.error_bound * s4.error_bound) +
                 rounding_floor(v, ctx);
    SeriesValue out{std::move(v), std::move(bound),
                    s2.terms_used + s3.terms_used + s4.terms_used,
                    Method::euler_maclaurin, {}};
    return out;
}

// ---------------------------------------------------------------------
// two-variable generating-function machinery
// ---------------------------------------------------------------------

// (pi/2) z cot(pi z), with the value 1/2 continued across z = 0
Complex half_pi_cot(const Complex& z) {
    if (is_zero(z)) return Complex(Real(1) / 2);
    Real pi = const_pi();
    return Complex(pi) / 2 * z * cot(Complex(pi) * z);
}

// lhs of the two-variable generating function
SeriesValue gf2_lhs(const Complex& x, const Complex& y,
                    const PrecisionContext& ctx) {
    Complex half(Real(1) / 2);
    Complex psi_edge = Complex(half) * (detail::digamma_raw(Complex(1) - y) +
                                        detail::digamma_raw(Complex(1) + y));
    FnPtr inner = fn_sum({fn_scale(half, fn_polygamma(0, Real(1), -y)),
                          fn_scale(half, fn_polygamma(0, Real(1), y)),
                          fn_const(-psi_edge)});
    FnPtr f = fn_prod(fn_rational({y}, {{x, 1}, {-x, 1}}), std::move(inner));
    return em_sum_of(std::move(f), ctx);
}

// The four addends of the right side, prefactors included.
std::array<SeriesValue, 4> gf2_rhs_terms(const Complex& x, const Complex& y,
                                         const PrecisionContext& ctx) {
    Complex px = half_pi_cot(x);
    Complex py = half_pi_cot(y);

    // n y (4y^2 - x^2) / ((n^2-y^2)((n+x)^2-y^2)((n-x)^2-y^2))
    SeriesValue s1 = em_sum_of(
        fn_rational({Complex(0), y * (Complex(4) * y * y - x * x)},
                    {{y, 1},
                     {-y, 1},
                     {-x + y, 1},
                     {-x - y, 1},
                     {x + y, 1},
                     {x - y, 1}}),
        ctx);
    // n y / ((n+x)^2-y^2)((n-x)^2-y^2)
    SeriesValue s2 = em_sum_of(
        fn_rational({Complex(0), y},
                    {{-x + y, 1}, {-x - y, 1}, {x + y, 1}, {x - y, 1}}),
        ctx);
    // 2 n y / ((n+x)^2-y^2)((n-x)^2-y^2)
    SeriesValue s3 = em_sum_of(
        fn_rational({Complex(0), Complex(2) * y},
                    {{-x + y, 1}, {-x - y, 1}, {x + y, 1}, {x - y, 1}}),
        ctx);
    // n y / ((n^2-y^2)(n^2-x^2))
    SeriesValue s4 = em_sum_of(
        fn_rational({Complex(0), y}, {{y, 1}, {-y, 1}, {x, 1}, {-x, 1}}),
        ctx);

    return {sv_scale(px, std::move(s1), ctx), sv_scale(px, std::move(s2), ctx),
            sv_scale(py, std::move(s3), ctx),
            sv_scale(Complex(Real(-1) / 2), std::move(s4), ctx)};
}

// Validates the parameter pair and reports whether it sits on the removable
// set of the right side: x = +-y or +-2y, or x +- y a nonzero integer (the
// series poles there cancel against prefactor zeros only in the limit).
bool gf2_guards(const Complex& x, const Complex& y,
                const PrecisionContext& ctx, bool limit_path,
                const char* what) {
    guard_square(x, ctx, what);
    guard_square(y, ctx, what);
    bool removable = false;
    for (const Complex& c : {x + y, x - y}) {
        if (is_zero(c)) continue;
        Real d = nonzero_integer_distance(c);
        if (d == 0) {
            removable = true;
        } else if (d < pow10_neg(ctx.digits / 2)) {
            throw PrecisionLossError(
                std::string(what) +
                ": x+-y within 10^(-digits/2) of a nonzero integer");
        }
    }
    if (!is_zero(x) &&
        (is_zero(x - y) || is_zero(x + y) || is_zero(x - Complex(2) * y) ||
         is_zero(x + Complex(2) * y)))
        removable = true;
    if (removable && !limit_path)
        throw RemovableSingularity(
            std::string(what) + ": removable point; request the limit path");
    return removable;
}

SeriesValue average_sides(const SeriesValue& p, const SeriesValue& m,
                          const PrecisionContext& ctx) {
    Complex v = (p.value + m.value) / Complex(2);
    Real bound = (p.error_bound + m.error_bound) / 2 +
                 abs(p.value - m.value) / 2 + rounding_floor(v, ctx);
    SeriesValue out{std::move(v), std::move(bound),
                    p.terms_used + m.terms_used, p.method, p.notes};
    out.notes.push_back("two-point limit path average");
    return out;
}

SidePair gf2_eval(const Complex& x, const Complex& y,
                  const PrecisionContext& ctx) {
    SeriesValue lhs = gf2_lhs(x, y, ctx);
    auto terms = gf2_rhs_terms(x, y, ctx);
    SeriesValue rhs = sv_add(sv_add(std::move(terms[0]), terms[1]),
                             sv_add(std::move(terms[2]), terms[3]));
    return make_side_pair(std::move(lhs), std::move(rhs));
}

// ---------------------------------------------------------------------
// coefficient extraction by circle finite differences
// ---------------------------------------------------------------------

constexpr unsigned kCoeffPoints = 64;
constexpr unsigned kCoeffMaxOrder = 4;

struct CoeffTable {
    std::vector<SidePair> at_point; // dual identity sides at the 64 points
};

const CoeffTable& coefficient_table(const PrecisionContext& ctx) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>,
                    std::unique_ptr<CoeffTable>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(ctx.digits, ctx.guard_digits);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto table = std::make_unique<CoeffTable>();
    table->at_point.reserve(kCoeffPoints);
    Real two_pi = 2 * const_pi();
    Real radius = Real(1) / 4;
    for (unsigned j = 0; j < kCoeffPoints; ++j) {
        Real theta = two_pi * int(j) / int(kCoeffPoints);
        Complex xi(radius * cos(theta), radius * sin(theta));
        table->at_point.push_back(eu_dual_sides(xi, ctx));
    }
    auto& slot = cache[key];
    slot = std::move(table);
    return *slot;
}

// k-th Taylor coefficient of one column (true = lhs) of the point table
SeriesValue circle_coefficient(const CoeffTable& table, bool lhs_column,
                               unsigned k, const PrecisionContext& ctx) {
    const unsigned m = kCoeffPoints;
    Real two_pi = 2 * const_pi();
    Real radius = Real(1) / 4;

    Complex full(0), half(0);
    Real bound_sum(0);
    std::uint64_t terms = 0;
    for (unsigned j = 0; j < m; ++j) {
        const SeriesValue& sv = lhs_column ? table.at_point[j].lhs
                                           : table.at_point[j].rhs;
        Real theta = two_pi * int(j * k % m) / int(m);
        Complex rot(cos(theta), -sin(theta));
        Complex contrib = sv.value * rot;
        full += contrib;
        if (j % 2 == 0) half += contrib;
        bound_sum += sv.error_bound;
        terms += sv.terms_used;
    }
    Real scale = pow(radius, int(k));
    full = full / Complex(Real(int(m)) * scale);
    half = half / Complex(Real(int(m / 2)) * scale);

    Real bound = bound_sum / (int(m) * scale) + 10 * abs(full - half) +
                 rounding_floor(full, ctx);
    SeriesValue out{std::move(full), std::move(bound), terms, Method::direct,
                    {"circle finite differences, radius 1/4, 64 points"}};
    return out;
}

} // namespace

// ---------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------

SidePair eu_dual_sides(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    guard_positive_integer(x, ctx, "eu_dual_sides");
    SeriesValue lhs = eu_dual_lhs(x, ctx);
    SeriesValue rhs = rational_sum(2, 1, x, ctx);
    return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair eu_dual_coefficient(unsigned k, const PrecisionContext& ctx) {
    ctx.validate();
    if (k > kCoeffMaxOrder)
        throw DomainError("eu_dual_coefficient: order above 4 unsupported");
    PrecisionGuard guard(ctx.working_digits());
    const CoeffTable& table = coefficient_table(ctx);
    SeriesValue lhs = circle_coefficient(table, true, k, ctx);
    SeriesValue rhs = circle_coefficient(table, false, k, ctx);
    return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair z_gen(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    guard_positive_integer(x, ctx, "z_gen");
    SeriesValue lhs = em_sum_of(
        fn_rational({x}, {{Complex(0), 1}, {x, 1}}), ctx);
    Complex v = -detail::digamma_raw(Complex(1) - x) - const_euler_gamma();
    return make_side_pair(std::move(lhs), closed(std::move(v), ctx));
}

SidePair zetas1_gf_sides(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    guard_positive_integer(x, ctx, "zetas1_gf_sides");
    SeriesValue lhs = harmonic_weighted_sum(x, ctx);
    SeriesValue s2 = rational_sum(1, 2, x, ctx);
    SeriesValue s3 = rational_sum(2, 2, x, ctx);
    SeriesValue s4 = rational_sum(1, 1, x, ctx);
    return make_side_pair(std::move(lhs),
                          weight_shift_rhs(x, s2, s3, s4, ctx));
}

SSuite s_suite(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    guard_positive_integer(x, ctx, "s_suite");

    SSuite out{{harmonic_weighted_sum(x, ctx), rational_sum(1, 2, x, ctx),
                rational_sum(2, 2, x, ctx), rational_sum(1, 1, x, ctx),
                rational_sum(2, 1, x, ctx), eu_dual_lhs(x, ctx)},
               Real(0),
               Real(0)};
    const auto& s = out.s;
    Complex half_x = x / Complex(2);
    Complex combo = s[0].value - s[1].value +
                    half_x * (s[2].value + s[3].value * s[3].value) -
                    (s[5].value - s[4].value);
    out.combination_residual = abs(combo);
    out.combined_bound =
        s[0].error_bound + s[1].error_bound +
        abs(half_x) * (s[2].error_bound +
                       2 * abs(s[3].value) * s[3].error_bound +
                       s[3].error_bound * s[3].error_bound) +
        s[5].error_bound + s[4].error_bound + rounding_floor(combo, ctx);
    return out;
}

SidePair sum_formula_sides(unsigned r, const Complex& x_in,
                           const PrecisionContext& ctx) {
    ctx.validate();
    if (r < 1 || r > 3)
        throw DepthUnsupported("sum_formula_sides: r must be 1, 2, or 3");
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    guard_positive_integer(x, ctx, "sum_formula_sides");

    SeriesValue rhs = rational_sum(r, 1, x, ctx);

    std::uint64_t n_total = std::max<std::uint64_t>(40000, 1500 * ctx.digits);
    if (n_total > ctx.max_terms) n_total = ctx.max_terms;
    if (n_total < 8000)
        throw CapExceeded("sum_formula_sides: max_terms too small for the "
                          "nested partial-sum path");

    const std::size_t p = 3 * r;
    std::vector<tailfit::LogPow> basis;
    for (unsigned b = 2; b <= 4; ++b)
        for (unsigned a = 0; a < r; ++a) basis.push_back({a, b});
    auto nodes_full = tailfit::fit_nodes(n_total, p);
    auto nodes_half = tailfit::fit_nodes(n_total / 2, p);

    std::map<std::uint64_t, Complex> wanted;
    for (auto n : nodes_full) wanted[n] = Complex(0);
    for (auto n : nodes_half) wanted[n] = Complex(0);

    Complex c1(0), c2(0), total(0), total_half(0);
    for (std::uint64_t n = 1; n <= n_total; ++n) {
        Complex invnx = Complex(1) / (Complex(Real(double(n))) - x);
        Complex term = invnx / Complex(Real(double(n)));
        if (r == 2) term *= c1;
        if (r == 3) term *= c2;
        total += term;
        auto it = wanted.find(n);
        if (it != wanted.end()) it->second = term;
        if (n == n_total / 2) total_half = total;
        if (r == 3) c2 += c1 * invnx;
        if (r >= 2) c1 += invnx;
    }

    auto gather = [&](const std::vector<std::uint64_t>& nodes) {
        std::vector<Complex> samples;
        samples.reserve(nodes.size());
        for (auto n : nodes) samples.push_back(wanted.at(n));
        return samples;
    };
    Complex value =
        total + tailfit::fitted_tail<Real, Complex>(
                    basis, nodes_full, gather(nodes_full), n_total);
    Complex value_half =
        total_half + tailfit::fitted_tail<Real, Complex>(
                         basis, nodes_half, gather(nodes_half), n_total / 2);

    Real bound = 10 * abs(value - value_half) + rounding_floor(value, ctx);
    SeriesValue lhs{std::move(value), std::move(bound), n_total,
                    Method::direct,
                    {"nested partial sums, fitted logarithmic tail"}};
    return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair log_identity_sides(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    guard_positive_integer(x, ctx, "log_identity_sides");

    SeriesValue lhs = em_sum_of(
        fn_prod(fn_rational({Complex(1)}, {{Complex(0), 2}}), fn_log1m(x)),
        ctx);

    // reorder the double sum with sum_{n>m} 1/(n(n-m)) = H_m/m:
    //   A = sum_m log(1-x/m) H_m / m,  B = sum_n log(1-x/n) H_{n-1} / n
    FnPtr one_over_t = fn_rational({Complex(1)}, {{Complex(0), 1}});
    FnPtr harmonic_here =
        fn_digamma_plus(Complex(1), Complex(const_euler_gamma()));
    SeriesValue a = em_sum_of(
        fn_prod(one_over_t, fn_prod(harmonic_here, fn_log1m(x))), ctx);
    SeriesValue b = em_sum_of(
        fn_prod(one_over_t, fn_prod(fn_harmonic_prev(), fn_log1m(x))), ctx);
    SeriesValue rhs = sv_sub(std::move(a), b);
    rhs.notes.push_back(
        "double sum evaluated as a difference of two reordered series");

    for (long m = 1; m <= 3 + long(std::llround(double(abs(x)))); ++m) {
        Complex arg = Complex(1) - x / Complex(m);
        if (arg.re < 0) {
            lhs.notes.push_back("branch-warning: log argument with negative "
                                "real part at small indices");
            rhs.notes.push_back("branch-warning: log argument with negative "
                                "real part at small indices");
            break;
        }
    }
    return make_side_pair(std::move(lhs), std::move(rhs));
}

ArctanTriple arctan_triple(const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());

    // v1 reordered exactly like the log identity, after
    // arctan(m/(n^2-mn+1)) = arctan(1/(n-m)) - arctan(1/n):
    //   A = sum_j arctan(1/j) H_j / j,  B = sum_n arctan(1/n) H_{n-1} / n
    FnPtr one_over_t = fn_rational({Complex(1)}, {{Complex(0), 1}});
    FnPtr harmonic_here =
        fn_digamma_plus(Complex(1), Complex(const_euler_gamma()));
    SeriesValue a = em_sum_of(
        fn_prod(one_over_t, fn_prod(harmonic_here, fn_atan_recip())), ctx);
    SeriesValue b = em_sum_of(
        fn_prod(one_over_t, fn_prod(fn_harmonic_prev(), fn_atan_recip())),
        ctx);
    SeriesValue v1 = sv_sub(std::move(a), b);
    v1.notes.push_back(
        "double sum evaluated as a difference of two reordered series");

    SeriesValue v2 = em_sum_of(
        fn_prod(fn_rational({Complex(1)}, {{Complex(0), 2}}),
                fn_atan_recip()),
        ctx);

    TermSource alt;
    alt.term = [](std::uint64_t n) {
        Real z = detail::zeta_raw(Real(double(2 * n + 3)));
        Real v = z / int(2 * n + 1);
        return (n % 2 == 0) ? Complex(v) : Complex(-v);
    };
    SeriesValue tail = sum_alternating(alt, ctx);
    SeriesValue v3 =
        sv_add(closed(Complex(detail::zeta_raw(Real(3))), ctx), tail);

    return {std::move(v1), std::move(v2), std::move(v3)};
}

TangentSums tangent_sums(const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex i = imag_unit();
    Real pi = const_pi();

    SeriesValue l1 = em_sum_of(
        fn_rational({Complex(1)}, {{Complex(0), 1}, {i, 1}, {-i, 1}}), ctx);
    Complex r1 = Complex(const_euler_gamma()) +
                 Complex(detail::digamma_raw(Complex(1) + i).re);

    SeriesValue l2 = em_sum_of(
        fn_rational({Complex(1)}, {{Complex(0), 2}, {i, 1}, {-i, 1}}), ctx);
    Real coth_pi = cosh(pi) / sinh(pi);
    Complex r2 = Complex(pi * pi / 6 - (pi * coth_pi - 1) / 2);

    return {make_side_pair(std::move(l1), closed(std::move(r1), ctx)),
            make_side_pair(std::move(l2), closed(std::move(r2), ctx))};
}

SidePair gf2_sides(const Complex& x_in, const Complex& y_in,
                   const PrecisionContext& ctx, bool limit_path) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    Complex y = to_working(y_in);
    bool removable = gf2_guards(x, y, ctx, limit_path, "gf2_sides");
    if (!removable) return gf2_eval(x, y, ctx);

    Real eps = pow10_neg(ctx.digits / 3);
    SidePair plus = gf2_eval(x * (Complex(1) + Complex(eps)), y, ctx);
    SidePair minus = gf2_eval(x * (Complex(1) - Complex(eps)), y, ctx);
    return make_side_pair(average_sides(plus.lhs, minus.lhs, ctx),
                          average_sides(plus.rhs, minus.rhs, ctx));
}

SigmaClosed sigma_closed(const Complex& x_in, const Complex& y_in,
                         const PrecisionContext& ctx, bool limit_path) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    Complex y = to_working(y_in);
    bool removable = gf2_guards(x, y, ctx, limit_path, "sigma_closed");
    if (is_zero(x) || is_zero(y))
        throw DomainError("sigma_closed: x = 0 or y = 0 not supported by "
                          "the closed forms");

    auto closed_forms = [&ctx](const Complex& xx, const Complex& yy) {
        Real pi = const_pi();
        Complex picot = Complex(pi) * cot(Complex(pi) * xx);
        Complex pa = detail::digamma_raw(Complex(1) + xx + yy);
        Complex pb = detail::digamma_raw(Complex(1) + xx - yy);
        Complex pc = detail::digamma_raw(Complex(1) - xx + yy);
        Complex pd = detail::digamma_raw(Complex(1) - xx - yy);
        Complex br = pa - pb - pc + pd;
        Complex sym4 = pa + pb + pc + pd;
        Complex psi_y = detail::digamma_raw(Complex(1) + yy) +
                        detail::digamma_raw(Complex(1) - yy);

        std::array<Complex, 4> v;
        v[0] = picot * (br / Complex(16) -
                        yy * sym4 / (Complex(8) * xx) +
                        yy * psi_y / (Complex(4) * xx));
        v[1] = -(picot / Complex(16)) * br;
        Complex picot_y = Complex(pi) * cot(Complex(pi) * yy);
        v[2] = -(picot_y / Complex(8)) * (yy / xx) * br;
        Complex bracket = detail::digamma_raw(Complex(1) + xx) -
                          detail::digamma_raw(Complex(1) - yy) +
                          detail::digamma_raw(xx) - detail::digamma_raw(yy) +
                          picot;
        v[3] = (Complex(1) - yy * bracket) /
               (Complex(4) * (yy * yy - xx * xx));
        std::array<SeriesValue, 4> out;
        for (int j = 0; j < 4; ++j) out[j] = closed(v[j], ctx);
        return out;
    };

    std::array<SeriesValue, 4> series;
    std::array<SeriesValue, 4> forms;
    if (!removable) {
        Real gap = abs(y * y - x * x);
        if (gap < pow10_neg(ctx.digits / 2))
            throw PrecisionLossError(
                "sigma_closed: x too close to +-y for the closed forms");
        series = gf2_rhs_terms(x, y, ctx);
        forms = closed_forms(x, y);
    } else {
        Real eps = pow10_neg(ctx.digits / 3);
        Complex xp = x * (Complex(1) + Complex(eps));
        Complex xm = x * (Complex(1) - Complex(eps));
        auto sp = gf2_rhs_terms(xp, y, ctx);
        auto sm = gf2_rhs_terms(xm, y, ctx);
        auto fp = closed_forms(xp, y);
        auto fm = closed_forms(xm, y);
        for (int j = 0; j < 4; ++j) {
            series[j] = average_sides(sp[j], sm[j], ctx);
            forms[j] = average_sides(fp[j], fm[j], ctx);
        }
    }

    SigmaClosed out{std::move(series), std::move(forms), {}};
    for (int j = 0; j < 4; ++j)
        out.residual[j] = abs(out.series[j].value - out.closed[j].value);
    return out;
}

SidePair thm2_sides(const Complex& x_in, const Complex& y_in,
                    const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    Complex y = to_working(y_in);
    Complex ix = times_i(x), iy = times_i(y);
    guard_square(ix, ctx, "thm2_sides");
    guard_square(iy, ctx, "thm2_sides");
    if (!is_zero(ix + iy)) guard_nonzero_integer(ix + iy, ctx, "thm2_sides");
    if (!is_zero(ix - iy)) guard_nonzero_integer(ix - iy, ctx, "thm2_sides");

    // lhs: sum_n [ n/(n^2+y^2) + psi(n-iy)+psi(n+iy)-psi(1-iy)-psi(1+iy) ]
    //            / (n^2+x^2)
    Complex psi_edge = detail::digamma_raw(Complex(1) - iy) +
                       detail::digamma_raw(Complex(1) + iy);
    FnPtr inner =
        fn_sum({fn_rational({Complex(0), Complex(1)}, {{iy, 1}, {-iy, 1}}),
                fn_polygamma(0, Real(1), -iy), fn_polygamma(0, Real(1), iy),
                fn_const(-psi_edge)});
    SeriesValue lhs = em_sum_of(
        fn_prod(fn_rational({Complex(1)}, {{ix, 1}, {-ix, 1}}),
                std::move(inner)),
        ctx);

    // prefactors pi z coth(pi z) with value 1 continued across z = 0
    Real pi = const_pi();
    auto pi_coth = [&pi](const Complex& z) {
        if (is_zero(z)) return Complex(1);
        return Complex(pi) * z * coth(Complex(pi) * z);
    };
    Complex phx = pi_coth(x);
    Complex phy = pi_coth(y);

    // n / ((n^2+y^2) ((n^2-x^2+y^2)^2 + 4n^2x^2))
    SeriesValue t1 = em_sum_of(
        fn_rational({Complex(0), Complex(1)},
                    {{iy, 1},
                     {-iy, 1},
                     {-ix + iy, 1},
                     {-ix - iy, 1},
                     {ix + iy, 1},
                     {ix - iy, 1}}),
        ctx);
    // n / ((n^2-x^2+y^2)^2 + 4n^2x^2)
    SeriesValue t2 = em_sum_of(
        fn_rational({Complex(0), Complex(1)},
                    {{-ix + iy, 1}, {-ix - iy, 1}, {ix + iy, 1}, {ix - iy, 1}}),
        ctx);

    SeriesValue rhs =
        sv_add(sv_scale((x * x - Complex(4) * y * y) * phx, std::move(t1), ctx),
               sv_scale(Complex(2) * phy + phx, std::move(t2), ctx));
    return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair gf2_3_sides(const Complex& y_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex y = to_working(y_in);
    if (is_zero(y))
        throw DomainError("gf2_3_sides: y = 0 requires the limit value");
    Complex iy = times_i(y);
    guard_square(iy, ctx, "gf2_3_sides");
    guard_nonzero_integer(Complex(2) * iy, ctx, "gf2_3_sides");
    guard_nonzero_integer(Complex(3) * iy, ctx, "gf2_3_sides");

    Complex psi_edge = detail::digamma_raw(Complex(1) - iy) +
                       detail::digamma_raw(Complex(1) + iy);
    FnPtr inner =
        fn_sum({fn_rational({Complex(0), Complex(1)}, {{iy, 1}, {-iy, 1}}),
                fn_polygamma(0, Real(1), -iy), fn_polygamma(0, Real(1), iy),
                fn_const(-psi_edge)});
    Complex two_iy = Complex(2) * iy;
    SeriesValue lhs = em_sum_of(
        fn_prod(fn_rational({Complex(1)}, {{two_iy, 1}, {-two_iy, 1}}),
                std::move(inner)),
        ctx);

    Real pi = const_pi();
    Complex coth_sum = coth(Complex(pi) * y) + coth(Complex(2) * Complex(pi) * y);
    // n / ((n^2+y^2)(n^2+9y^2))
    Complex three_iy = Complex(3) * iy;
    SeriesValue s = em_sum_of(
        fn_rational({Complex(0), Complex(1)},
                    {{iy, 1}, {-iy, 1}, {three_iy, 1}, {-three_iy, 1}}),
        ctx);
    SeriesValue rhs =
        sv_scale(Complex(2) * Complex(pi) * y * coth_sum, std::move(s), ctx);
    return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair half_half_value(const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex half(Real(1) / 2);
    Real pi = const_pi();

    // inner: sum_{m<n} m/(4m^2-1) = [psi(n-1/2)+psi(n+1/2)-psi(1/2)-psi(3/2)]/8
    Complex eighth(Real(1) / 8);
    Complex psi_edge = detail::digamma_raw(Complex(half)) +
                       detail::digamma_raw(Complex(Real(3) / 2));
    FnPtr inner = fn_sum({fn_scale(eighth, fn_polygamma(0, Real(1), -half)),
                          fn_scale(eighth, fn_polygamma(0, Real(1), half)),
                          fn_const(-eighth * psi_edge)});
    // 1/(4n^2-1) = (1/4)/((n-1/2)(n+1/2))
    FnPtr outer = fn_rational({Complex(1)}, {{half, 1}, {-half, 1}},
                              Complex(Real(1) / 4));
    SeriesValue lhs = em_sum_of(fn_prod(std::move(outer), std::move(inner)),
                                ctx);
    Complex rhs(pi * pi / 64 - Real(1) / 16);
    return make_side_pair(std::move(lhs), closed(std::move(rhs), ctx));
}

SidePair cot_expansion_check(const Complex& x_in, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex x = to_working(x_in);
    if (is_zero(x))
        throw DomainError("cot_expansion_check: x = 0 is a pole of both sides");
    guard_nonzero_integer(x, ctx, "cot_expansion_check");
    guard_square(x, ctx, "cot_expansion_check");

    Real pi = const_pi();
    Complex lhs_v = Complex(pi) * cot(Complex(pi) * x) / (Complex(2) * x);

    SeriesValue s = em_sum_of(
        fn_rational({Complex(1)}, {{x, 1}, {-x, 1}}), ctx);
    Complex rv = Complex(1) / (Complex(2) * x * x) - s.value;
    Real rbound = s.error_bound + rounding_floor(rv, ctx);
    SeriesValue rhs{std::move(rv), std::move(rbound), s.terms_used,
                    Method::euler_maclaurin, {}};
    return make_side_pair(closed(std::move(lhs_v), ctx), std::move(rhs));
}

} // namespace eulerlab::parametric

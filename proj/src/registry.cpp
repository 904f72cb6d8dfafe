#include "eulerlab/registry.hpp"

#include "eulerlab/bernoulli.hpp"
#include "eulerlab/complex.hpp"
#include "eulerlab/conjecture.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/mzv.hpp"
#include "eulerlab/parametric.hpp"
#include "eulerlab/precision.hpp"
#include "eulerlab/reduction.hpp"
#include "eulerlab/series_value.hpp"
#include "eulerlab/special.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ios>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace eulerlab::registry {
namespace {

constexpr unsigned kCore = 1u;
constexpr unsigned kParam = 2u;
constexpr unsigned kMzv = 4u;
constexpr unsigned kRed = 8u;
constexpr unsigned kConj = 16u;

unsigned suite_mask(const std::string& name) {
    if (name == "core") return kCore;
    if (name == "parametric") return kParam;
    if (name == "mzv") return kMzv;
    if (name == "reduction") return kRed;
    if (name == "conjecture") return kConj;
    if (name == "all") return kCore | kParam | kMzv | kRed | kConj;
    throw DomainError("run_suite: unknown suite '" + name +
                      "' (expected core, parametric, mzv, reduction, conjecture, all)");
}

// ---------------------------------------------------------------------------
// Deterministic sampling.
//
// Every identity family owns a splitmix64 stream seeded with
// seed ^ fnv1a(family name), so adding cases to one family never shifts the
// parameter points of another.  Points are drawn from the dyadic grid of
// step 1/1024: such values are exactly representable both in an IEEE double
// and in the multiprecision type at any precision, which keeps the rendered
// parameter strings (and hence case identity) independent of the digits
// setting.
// ---------------------------------------------------------------------------

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class FamilyStream {
public:
    FamilyStream(std::uint64_t seed, std::string_view family)
        : state_(seed ^ fnv1a(family)) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw from the 1/1024 grid on [lo, hi]; lo and hi must be
    // multiples of 1/1024 themselves.
    double grid(double lo, double hi) {
        const auto steps = static_cast<std::uint64_t>(std::llround((hi - lo) * 1024.0));
        return lo + static_cast<double>(next() % (steps + 1)) / 1024.0;
    }

    template <class Reject>
    std::pair<double, double> disc(double radius, Reject reject) {
        for (;;) {
            const double re = grid(-radius, radius);
            const double im = grid(-radius, radius);
            if (re * re + im * im > radius * radius) continue;
            if (reject(re, im)) continue;
            return {re, im};
        }
    }

private:
    std::uint64_t state_;
};

// Distance from a complex point to the nearest positive integer / integer /
// negative integer; used to reject samples within 1e-3 of a pole set.
double dist_pos_int(double re, double im) {
    const double n = std::max(1.0, std::round(re));
    return std::hypot(re - n, im);
}

double dist_int(double re, double im) { return std::hypot(re - std::round(re), im); }

double dist_neg_int(double re, double im) {
    const double n = std::min(-1.0, std::round(re));
    return std::hypot(re - n, im);
}

std::pair<double, double> csq(double re, double im) {
    return {re * re - im * im, 2.0 * re * im};
}

std::string fmt_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

std::string fmt_complex(double re, double im) {
    if (im == 0.0) return fmt_num(re);
    std::string s = fmt_num(re);
    s += (im < 0.0) ? "-" : "+";
    s += fmt_num(std::fabs(im));
    s += "i";
    return s;
}

// ---------------------------------------------------------------------------
// Case table.
// ---------------------------------------------------------------------------

struct CaseOutcome {
    Complex lhs;
    Complex rhs;
    Real bound;
};

struct IdentityCase {
    std::string id;
    std::string params;
    double tol_override = 0; // relaxed tolerance for reduced-precision paths
    std::function<CaseOutcome(const PrecisionContext&)> eval;
};

CaseOutcome from_values(const SeriesValue& a, const SeriesValue& b) {
    return {a.value, b.value, a.error_bound + b.error_bound};
}

IdentityCase pair_case(std::string id, std::string params, double tol,
                       std::function<SidePair(const PrecisionContext&)> f) {
    return {std::move(id), std::move(params), tol,
            [f = std::move(f)](const PrecisionContext& ctx) {
                const SidePair sp = f(ctx);
                return CaseOutcome{sp.lhs.value, sp.rhs.value,
                                   sp.lhs.error_bound + sp.rhs.error_bound};
            }};
}

// Exact (rational / structural) checks: lhs is 0 on success and 1 on
// failure, so the generic residual logic applies unchanged.
IdentityCase flag_case(std::string id, std::string params, std::function<bool()> check) {
    return {std::move(id), std::move(params), 0,
            [check = std::move(check)](const PrecisionContext&) {
                return CaseOutcome{Complex(Real(check() ? 0 : 1)), Complex(Real(0)), Real(0)};
            }};
}

mzv::MZVIndex make_index(std::initializer_list<unsigned> args) {
    mzv::MZVIndex idx;
    for (unsigned a : args) idx.slots.push_back({a, +1});
    return idx;
}

Real product_bound(const SeriesValue& a, const SeriesValue& b) {
    return abs(a.value) * b.error_bound + abs(b.value) * a.error_bound +
           a.error_bound * b.error_bound;
}

std::string u2(std::string_view k1, unsigned v1, std::string_view k2, unsigned v2) {
    std::string s(k1);
    s += "=" + std::to_string(v1) + " ";
    s += k2;
    s += "=" + std::to_string(v2);
    return s;
}

// ---------------------------------------------------------------------------
// Family builders.  Each is tagged with the suites it belongs to; shared
// families draw from their stream identically for every suite selection.
// ---------------------------------------------------------------------------

void add_eu_dual(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & (kCore | kParam))) return;
    FamilyStream rng(seed, "eu-dual");
    const auto reject = [](double re, double im) { return dist_pos_int(re, im) < 1e-3; };
    for (int i = 0; i < 5; ++i) {
        const auto [re, im] = rng.disc(2.0, reject);
        out.push_back(pair_case("eu-dual", "x=" + fmt_complex(re, im), 0,
                                [re = re, im = im](const PrecisionContext& ctx) {
                                    return parametric::eu_dual_sides(
                                        Complex(Real(re), Real(im)), ctx);
                                }));
    }
    out.push_back(pair_case("eu-dual", "x=0", 0, [](const PrecisionContext& ctx) {
        return parametric::eu_dual_sides(Complex(Real(0), Real(0)), ctx);
    }));
}

void add_eu_dual_coeff(std::vector<IdentityCase>& out, unsigned mask) {
    const auto coeff = [](unsigned k) {
        return [k](const PrecisionContext& ctx) {
            return parametric::eu_dual_coefficient(k, ctx);
        };
    };
    if (mask & (kCore | kParam))
        out.push_back(pair_case("eu-dual-coeff", "k=1", 0, coeff(1)));
    if (mask & kParam)
        out.push_back(pair_case("eu-dual-coeff", "k=2", 0, coeff(2)));
}

void add_z_gen(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & (kCore | kParam))) return;
    FamilyStream rng(seed, "z-gen");
    const auto reject = [](double re, double im) { return dist_pos_int(re, im) < 1e-3; };
    for (int i = 0; i < 3; ++i) {
        const auto [re, im] = rng.disc(2.0, reject);
        out.push_back(pair_case("z-gen", "x=" + fmt_complex(re, im), 0,
                                [re = re, im = im](const PrecisionContext& ctx) {
                                    return parametric::z_gen(Complex(Real(re), Real(im)), ctx);
                                }));
    }
}

void add_s_suite(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & (kCore | kParam))) return;
    FamilyStream rng(seed, "s-suite");
    const auto reject = [](double re, double im) { return dist_pos_int(re, im) < 1e-3; };
    for (int i = 0; i < 3; ++i) {
        const auto [re, im] = rng.disc(1.5, reject);
        out.push_back({"s-suite", "x=" + fmt_complex(re, im), 0,
                       [re = re, im = im](const PrecisionContext& ctx) {
                           const auto r =
                               parametric::s_suite(Complex(Real(re), Real(im)), ctx);
                           return CaseOutcome{Complex(r.combination_residual),
                                              Complex(Real(0)), r.combined_bound};
                       }});
    }
}

void add_tangent(std::vector<IdentityCase>& out, unsigned mask) {
    if (!(mask & (kCore | kParam))) return;
    out.push_back(pair_case("tangent", "pair=1", 0, [](const PrecisionContext& ctx) {
        return parametric::tangent_sums(ctx).first;
    }));
    out.push_back(pair_case("tangent", "pair=2", 0, [](const PrecisionContext& ctx) {
        return parametric::tangent_sums(ctx).second;
    }));
}

void add_arctan(std::vector<IdentityCase>& out, unsigned mask) {
    if (!(mask & (kCore | kParam))) return;
    out.push_back({"arctan", "diff=v1-v2", 0, [](const PrecisionContext& ctx) {
                       const auto t = parametric::arctan_triple(ctx);
                       return from_values(t.v1, t.v2);
                   }});
    out.push_back({"arctan", "diff=v2-v3", 0, [](const PrecisionContext& ctx) {
                       const auto t = parametric::arctan_triple(ctx);
                       return from_values(t.v2, t.v3);
                   }});
}

void add_half_half(std::vector<IdentityCase>& out, unsigned mask) {
    if (!(mask & (kCore | kParam))) return;
    out.push_back(pair_case("half-half", "x=0.5 y=0.5", 0,
                            [](const PrecisionContext& ctx) {
                                return parametric::half_half_value(ctx);
                            }));
}

void add_zetas1(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    FamilyStream rng(seed, "zetas1");
    const auto reject = [](double re, double im) { return dist_pos_int(re, im) < 1e-3; };
    for (int i = 0; i < 3; ++i) {
        const auto [re, im] = rng.disc(1.5, reject);
        out.push_back(pair_case("zetas1", "x=" + fmt_complex(re, im), 0,
                                [re = re, im = im](const PrecisionContext& ctx) {
                                    return parametric::zetas1_gf_sides(
                                        Complex(Real(re), Real(im)), ctx);
                                }));
    }
    out.push_back(pair_case("zetas1", "x=-1", 0, [](const PrecisionContext& ctx) {
        return parametric::zetas1_gf_sides(Complex(Real(-1), Real(0)), ctx);
    }));
}

void add_sum_formula(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    FamilyStream rng(seed, "sum-formula");
    const auto reject = [](double re, double im) { return dist_pos_int(re, im) < 1e-3; };
    for (unsigned r = 1; r <= 2; ++r) {
        for (int i = 0; i < 3; ++i) {
            const auto [re, im] = rng.disc(1.25, reject);
            out.push_back(pair_case(
                "sum-formula", "r=" + std::to_string(r) + " x=" + fmt_complex(re, im),
                1e-10, [r, re = re, im = im](const PrecisionContext& ctx) {
                    return parametric::sum_formula_sides(r, Complex(Real(re), Real(im)),
                                                         ctx);
                }));
        }
    }
    out.push_back(pair_case("sum-formula", "r=3 x=0", 1e-6,
                            [](const PrecisionContext& ctx) {
                                return parametric::sum_formula_sides(
                                    3, Complex(Real(0), Real(0)), ctx);
                            }));
    const auto [re, im] = rng.disc(0.75, reject);
    out.push_back(pair_case("sum-formula", "r=3 x=" + fmt_complex(re, im), 1e-6,
                            [re = re, im = im](const PrecisionContext& ctx) {
                                return parametric::sum_formula_sides(
                                    3, Complex(Real(re), Real(im)), ctx);
                            }));
}

void add_log(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    FamilyStream rng(seed, "log");
    for (int i = 0; i < 2; ++i) {
        const double x = rng.grid(-1.5, 0.875);
        out.push_back(pair_case("log", "x=" + fmt_num(x), 0,
                                [x](const PrecisionContext& ctx) {
                                    return parametric::log_identity_sides(
                                        Complex(Real(x), Real(0)), ctx);
                                }));
    }
    for (int i = 0; i < 2; ++i) {
        const auto [re, im] = rng.disc(0.5, [](double, double) { return false; });
        out.push_back(pair_case("log", "x=" + fmt_complex(re, im), 0,
                                [re = re, im = im](const PrecisionContext& ctx) {
                                    return parametric::log_identity_sides(
                                        Complex(Real(re), Real(im)), ctx);
                                }));
    }
}

bool gf2_reject(double xr, double xi, double yr, double yi) {
    const auto [sxr, sxi] = csq(xr, xi);
    const auto [syr, syi] = csq(yr, yi);
    if (dist_pos_int(sxr, sxi) < 1e-3 || dist_pos_int(syr, syi) < 1e-3) return true;
    if (std::hypot(xr, xi) < 1e-3 || std::hypot(yr, yi) < 1e-3) return true;
    if (std::hypot(xr - yr, xi - yi) < 1e-3 || std::hypot(xr + yr, xi + yi) < 1e-3)
        return true;
    if (std::hypot(xr - 2 * yr, xi - 2 * yi) < 1e-3 ||
        std::hypot(xr + 2 * yr, xi + 2 * yi) < 1e-3)
        return true;
    return false;
}

std::array<double, 4> draw_gf2_point(FamilyStream& rng, double radius) {
    for (;;) {
        const auto [xr, xi] = rng.disc(radius, [](double, double) { return false; });
        const auto [yr, yi] = rng.disc(radius, [](double, double) { return false; });
        if (!gf2_reject(xr, xi, yr, yi)) return {xr, xi, yr, yi};
    }
}

void add_gf2(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    FamilyStream rng(seed, "gf2");
    for (int i = 0; i < 3; ++i) {
        const auto p = draw_gf2_point(rng, 1.375);
        out.push_back(pair_case(
            "gf2", "x=" + fmt_complex(p[0], p[1]) + " y=" + fmt_complex(p[2], p[3]), 0,
            [p](const PrecisionContext& ctx) {
                return parametric::gf2_sides(Complex(Real(p[0]), Real(p[1])),
                                             Complex(Real(p[2]), Real(p[3])), ctx);
            }));
    }
}

void add_gf2_parity(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    {
        FamilyStream rng(seed, "gf2-parity-y");
        for (int i = 0; i < 5; ++i) {
            const auto p = draw_gf2_point(rng, 1.375);
            out.push_back(
                {"gf2-parity-y",
                 "x=" + fmt_complex(p[0], p[1]) + " y=" + fmt_complex(p[2], p[3]), 0,
                 [p](const PrecisionContext& ctx) {
                     const Complex x{Real(p[0]), Real(p[1])};
                     const Complex y{Real(p[2]), Real(p[3])};
                     const Complex ny{Real(-p[2]), Real(-p[3])};
                     const auto a = parametric::gf2_sides(x, y, ctx);
                     const auto b = parametric::gf2_sides(x, ny, ctx);
                     const Real v =
                         abs(a.lhs.value + b.lhs.value) + abs(a.rhs.value + b.rhs.value);
                     const Real bound = a.lhs.error_bound + a.rhs.error_bound +
                                        b.lhs.error_bound + b.rhs.error_bound;
                     return CaseOutcome{Complex(v), Complex(Real(0)), bound};
                 }});
        }
    }
    {
        FamilyStream rng(seed, "gf2-parity-x");
        for (int i = 0; i < 5; ++i) {
            const auto p = draw_gf2_point(rng, 1.375);
            out.push_back(
                {"gf2-parity-x",
                 "x=" + fmt_complex(p[0], p[1]) + " y=" + fmt_complex(p[2], p[3]), 0,
                 [p](const PrecisionContext& ctx) {
                     const Complex x{Real(p[0]), Real(p[1])};
                     const Complex nx{Real(-p[0]), Real(-p[1])};
                     const Complex y{Real(p[2]), Real(p[3])};
                     const auto a = parametric::gf2_sides(x, y, ctx);
                     const auto b = parametric::gf2_sides(nx, y, ctx);
                     const Real v =
                         abs(a.lhs.value - b.lhs.value) + abs(a.rhs.value - b.rhs.value);
                     const Real bound = a.lhs.error_bound + a.rhs.error_bound +
                                        b.lhs.error_bound + b.rhs.error_bound;
                     return CaseOutcome{Complex(v), Complex(Real(0)), bound};
                 }});
        }
    }
}

void add_sigma(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    FamilyStream rng(seed, "sigma");
    for (int i = 0; i < 2; ++i) {
        const auto p = draw_gf2_point(rng, 1.25);
        out.push_back(
            {"sigma", "x=" + fmt_complex(p[0], p[1]) + " y=" + fmt_complex(p[2], p[3]),
             0, [p](const PrecisionContext& ctx) {
                 const auto r = parametric::sigma_closed(Complex(Real(p[0]), Real(p[1])),
                                                         Complex(Real(p[2]), Real(p[3])),
                                                         ctx);
                 Real v(0);
                 Real bound(0);
                 for (std::size_t k = 0; k < 4; ++k) {
                     v = std::max(v, r.residual[k]);
                     bound = std::max(bound, r.series[k].error_bound +
                                                 r.closed[k].error_bound);
                 }
                 return CaseOutcome{Complex(v), Complex(Real(0)), bound};
             }});
    }
}

void add_thm2(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    FamilyStream rng(seed, "thm2");
    for (int i = 0; i < 5; ++i) {
        const double y = rng.grid(1.0 / 1024, 2.0);
        const double x = rng.grid(-2.0, 2.0);
        out.push_back(pair_case("thm2", "x=" + fmt_num(x) + " y=" + fmt_num(y), 1e-15,
                                [x, y](const PrecisionContext& ctx) {
                                    return parametric::thm2_sides(
                                        Complex(Real(x), Real(0)),
                                        Complex(Real(y), Real(0)), ctx);
                                }));
    }
    const auto reject_sq = [](double re, double im) {
        const auto [sr, si] = csq(re, im);
        return dist_neg_int(sr, si) < 1e-3;
    };
    for (int i = 0; i < 5; ++i) {
        const auto [xr, xi] = rng.disc(1.125, reject_sq);
        const auto [yr, yi] = rng.disc(1.125, [&](double re, double im) {
            return reject_sq(re, im) || std::hypot(re, im) < 1e-3;
        });
        out.push_back(pair_case(
            "thm2", "x=" + fmt_complex(xr, xi) + " y=" + fmt_complex(yr, yi), 1e-15,
            [xr = xr, xi = xi, yr = yr, yi = yi](const PrecisionContext& ctx) {
                return parametric::thm2_sides(Complex(Real(xr), Real(xi)),
                                              Complex(Real(yr), Real(yi)), ctx);
            }));
    }
}

void add_gf2_3(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    FamilyStream rng(seed, "gf2-3");
    for (int i = 0; i < 3; ++i) {
        const double y = rng.grid(1.0 / 1024, 2.0);
        out.push_back(pair_case("gf2-3", "y=" + fmt_num(y), 1e-15,
                                [y](const PrecisionContext& ctx) {
                                    return parametric::gf2_3_sides(
                                        Complex(Real(y), Real(0)), ctx);
                                }));
    }
}

void add_cot(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kParam)) return;
    FamilyStream rng(seed, "cot");
    const auto reject = [](double re, double im) { return dist_int(re, im) < 1e-3; };
    for (int i = 0; i < 3; ++i) {
        const auto [re, im] = rng.disc(1.5, reject);
        out.push_back(pair_case("cot", "x=" + fmt_complex(re, im), 0,
                                [re = re, im = im](const PrecisionContext& ctx) {
                                    return parametric::cot_expansion_check(
                                        Complex(Real(re), Real(im)), ctx);
                                }));
    }
}

void add_reflection(std::vector<IdentityCase>& out, unsigned mask) {
    if (!(mask & (kCore | kMzv))) return;
    for (unsigned s = 2; s <= 6; ++s) {
        for (unsigned t = s; t <= 6; ++t) {
            out.push_back({"reflection", u2("s", s, "t", t), 0,
                           [s, t](const PrecisionContext& ctx) {
                               const auto m1 = mzv::mzv_eval(make_index({s, t}), ctx);
                               const auto m2 = mzv::mzv_eval(make_index({t, s}), ctx);
                               const auto zsum = riemann_zeta(
                                   Complex(Real(int(s + t)), Real(0)), ctx);
                               const auto za =
                                   riemann_zeta(Complex(Real(int(s)), Real(0)), ctx);
                               const auto zb =
                                   riemann_zeta(Complex(Real(int(t)), Real(0)), ctx);
                               const Complex lhs = m1.value + m2.value + zsum.value;
                               const Complex rhs = za.value * zb.value;
                               const Real bound = m1.error_bound + m2.error_bound +
                                                  zsum.error_bound +
                                                  product_bound(za, zb);
                               return CaseOutcome{lhs, rhs, bound};
                           }});
        }
    }
}

void add_reduce_core(std::vector<IdentityCase>& out, unsigned mask) {
    if (!(mask & (kCore | kRed))) return;
    for (unsigned s = 2; s <= 4; ++s) {
        out.push_back({"reduce-s1", "s=" + std::to_string(s), 1e-20,
                       [s](const PrecisionContext& ctx) {
                           const auto e =
                               reduction::expr_eval(reduction::reduce_s1(s), ctx);
                           const auto m = mzv::mzv_eval(make_index({s, 1}), ctx);
                           return from_values(e, m);
                       }});
    }
    out.push_back({"reduce-even-odd", "a=2 b=3", 1e-20, [](const PrecisionContext& ctx) {
                       const auto e =
                           reduction::expr_eval(reduction::reduce_even_odd(2, 3), ctx);
                       const auto m = mzv::mzv_eval(make_index({2, 3}), ctx);
                       return from_values(e, m);
                   }});
    out.push_back(flag_case("reduce-golden", "a=2 b=3", [] {
        return reduction::reduce_even_odd(2, 3).to_string() == "9/2*z(5) - 2*z(2)*z(3)";
    }));
}

void add_reduce_consistency(std::vector<IdentityCase>& out, unsigned mask) {
    // b >= 3: the swapped companion has a divergent leading slot at b = 1.
    for (unsigned a = 2; a <= 12; a += 2) {
        for (unsigned b = 3; a + b <= 13; b += 2) {
            const bool shared = (a == 2 && b == 3); // also exercised by core
            if (!(mask & (shared ? (kCore | kRed) : kRed))) continue;
            out.push_back(flag_case("reduce-consistency", u2("a", a, "b", b), [a, b] {
                const auto sum =
                    reduction::reduce_even_odd(a, b) + reduction::reduce_swap(b, a);
                return sum == reduction::reflect(a, b);
            }));
        }
    }
}

void add_reduce_extra(std::vector<IdentityCase>& out, unsigned mask) {
    if (!(mask & kRed)) return;
    const std::array<std::pair<unsigned, unsigned>, 10> faithful = {
        {{2, 1}, {2, 3}, {2, 5}, {2, 7}, {4, 1}, {4, 3}, {4, 5}, {6, 1}, {6, 3}, {8, 1}}};
    for (const auto& [a, b] : faithful) {
        out.push_back({"reduce-faithful", u2("a", a, "b", b), 1e-20,
                       [a = a, b = b](const PrecisionContext& ctx) {
                           const auto e = reduction::expr_eval(
                               reduction::reduce_even_odd(a, b), ctx);
                           const auto m = mzv::mzv_eval(make_index({a, b}), ctx);
                           return from_values(e, m);
                       }});
    }
    out.push_back({"reduce-swap", "b=3 a=2", 1e-20, [](const PrecisionContext& ctx) {
                       const auto e =
                           reduction::expr_eval(reduction::reduce_swap(3, 2), ctx);
                       const auto m = mzv::mzv_eval(make_index({3, 2}), ctx);
                       return from_values(e, m);
                   }});
    out.push_back({"reduce-s1-pi4", "s=3", 1e-20, [](const PrecisionContext& ctx) {
                       const auto e = reduction::expr_eval(reduction::reduce_s1(3), ctx);
                       const auto p = reduction::expr_eval(
                           Rational(1, 360) * reduction::ZetaExpression::pi_power(4),
                           ctx);
                       return from_values(e, p);
                   }});
    for (unsigned s = 0; s <= 2; ++s) {
        out.push_back({"reduce-inversion", "s=" + std::to_string(s), 0,
                       [s](const PrecisionContext& ctx) {
                           Complex lhs(Real(0));
                           Real bound(0);
                           for (unsigned a = 0; a <= s; ++a) {
                               const auto v =
                                   mzv::mzv_eval(make_index({2 + a, 1 + s - a}), ctx);
                               lhs += v.value;
                               bound += v.error_bound;
                           }
                           const auto z =
                               riemann_zeta(Complex(Real(int(s + 3)), Real(0)), ctx);
                           return CaseOutcome{lhs, z.value, bound + z.error_bound};
                       }});
    }
    out.push_back(flag_case("comp-count", "grid r<=3 s<=3", [] {
        for (unsigned r = 1; r <= 3; ++r) {
            for (unsigned s = 0; s <= 3; ++s) {
                const auto comps = reduction::sum_formula_compositions(r, s);
                if (Rational(comps.size()) != binomial_rational(r + s - 1, s))
                    return false;
                for (const auto& idx : comps) {
                    if (idx.depth() != r) return false;
                    if (idx.weight() != r + s + 1) return false;
                    if (idx.slots.front().exponent < 2) return false;
                    for (const auto& slot : idx.slots)
                        if (slot.sign != +1 || slot.exponent == 0) return false;
                }
            }
        }
        return true;
    }));
    out.push_back(flag_case("reduce-idem", "a=4 b=3", [] {
        const auto e = reduction::reduce_even_odd(4, 3);
        const auto c = e.canonicalized();
        return c == c.canonicalized() && e == c;
    }));
}

void add_mzv_extra(std::vector<IdentityCase>& out, unsigned mask, std::uint64_t seed) {
    if (!(mask & kMzv)) return;
    out.push_back({"mzv-stuffle", "s=2 t=3", 0, [](const PrecisionContext& ctx) {
                       const auto a = mzv::mzv_eval(make_index({2, 3}), ctx);
                       const auto b = mzv::mzv_eval(make_index({3, 2}), ctx);
                       const auto z5 =
                           riemann_zeta(Complex(Real(5), Real(0)), ctx);
                       const auto z2 = riemann_zeta(Complex(Real(2), Real(0)), ctx);
                       const auto z3 = riemann_zeta(Complex(Real(3), Real(0)), ctx);
                       const Complex lhs = a.value + b.value + z5.value;
                       const Complex rhs = z2.value * z3.value;
                       const Real bound = a.error_bound + b.error_bound +
                                          z5.error_bound + product_bound(z2, z3);
                       return CaseOutcome{lhs, rhs, bound};
                   }});
    out.push_back({"mzv-alt-1", "s=1~", 0, [](const PrecisionContext& ctx) {
                       const auto v = mzv::mzv_eval(mzv::MZVIndex::parse("1~"), ctx);
                       const Real ln2 = log(to_working(Real(2)));
                       const Real floor =
                           pow10_neg(ctx.working_digits() >= 5 ? ctx.working_digits() - 4
                                                                : 1) *
                           (ln2 + Real(1));
                       return CaseOutcome{v.value, Complex(-ln2, Real(0)),
                                          v.error_bound + floor};
                   }});
    for (unsigned n = 1; n <= 3; ++n) {
        mzv::MZVIndex idx;
        for (unsigned i = 0; i < n; ++i) idx.slots.push_back({2, +1});
        out.push_back({"block-two", "n=" + std::to_string(n), n >= 3 ? 1e-6 : 0,
                       [idx, n](const PrecisionContext& ctx) {
                           const auto lhs = mzv::mzv_eval(idx, ctx);
                           const auto rhs =
                               mzv::block_closed_form(mzv::BlockKind::two_block, n, ctx);
                           return from_values(lhs, rhs);
                       }});
    }
    for (unsigned n = 1; n <= 2; ++n) {
        mzv::MZVIndex idx;
        for (unsigned i = 0; i < n; ++i) {
            idx.slots.push_back({3, +1});
            idx.slots.push_back({1, +1});
        }
        out.push_back({"block-three-one", "n=" + std::to_string(n), n >= 2 ? 1e-6 : 0,
                       [idx, n](const PrecisionContext& ctx) {
                           const auto lhs = mzv::mzv_eval(idx, ctx);
                           const auto rhs = mzv::block_closed_form(
                               mzv::BlockKind::three_one_block, n, ctx);
                           return from_values(lhs, rhs);
                       }});
    }
    for (unsigned r = 1; r <= 3; ++r) {
        for (unsigned s = 0; r + s + 1 <= 5; ++s) {
            out.push_back({"sumf-comp", u2("r", r, "s", s), r >= 3 ? 1e-6 : 0,
                           [r, s](const PrecisionContext& ctx) {
                               const auto comps =
                                   reduction::sum_formula_compositions(r, s);
                               Complex lhs(Real(0));
                               Real bound(0);
                               for (const auto& idx : comps) {
                                   const auto v = mzv::mzv_eval(idx, ctx);
                                   lhs += v.value;
                                   bound += v.error_bound;
                               }
                               const auto z = riemann_zeta(
                                   Complex(Real(int(r + s + 1)), Real(0)), ctx);
                               return CaseOutcome{lhs, z.value, bound + z.error_bound};
                           }});
        }
    }
    {
        FamilyStream rng(seed, "sin-product");
        for (const double x : {0.25, 0.5}) {
            out.push_back(pair_case("sin-product", "x=" + fmt_num(x), 0,
                                    [x](const PrecisionContext& ctx) {
                                        return mzv::sin_product_sides(
                                            Complex(Real(x), Real(0)), ctx);
                                    }));
        }
        const auto [re, im] = rng.disc(0.875, [](double, double) { return false; });
        out.push_back(pair_case("sin-product", "x=" + fmt_complex(re, im), 0,
                                [re = re, im = im](const PrecisionContext& ctx) {
                                    return mzv::sin_product_sides(
                                        Complex(Real(re), Real(im)), ctx);
                                }));
    }
    for (const double x : {0.25, 0.5}) {
        out.push_back({"zagier-gf", "x=" + fmt_num(x) + " cmp=cosh", 1e-15,
                       [x](const PrecisionContext& ctx) {
                           const auto t =
                               mzv::zagier_gf_sides(Complex(Real(x), Real(0)), ctx);
                           return from_values(t.blocks, t.cosh_form);
                       }});
        out.push_back({"zagier-gf", "x=" + fmt_num(x) + " cmp=hypergeometric", 1e-15,
                       [x](const PrecisionContext& ctx) {
                           const auto t =
                               mzv::zagier_gf_sides(Complex(Real(x), Real(0)), ctx);
                           return from_values(t.blocks, t.hypergeometric);
                       }});
    }
    out.push_back({"cube-coeff", "n=2", 1e-20, [](const PrecisionContext& ctx) {
                       const auto c = mzv::cube_gamma_coefficient(2, ctx);
                       using reduction::ZetaExpression;
                       const auto expr = Rational(1, 2) * (ZetaExpression::zeta(3) *
                                                               ZetaExpression::zeta(3) -
                                                           ZetaExpression::zeta(6));
                       const auto closed = reduction::expr_eval(expr, ctx);
                       return from_values(c, closed);
                   }});
    {
        FamilyStream rng(seed, "cube-gamma");
        out.push_back(pair_case("cube-gamma", "x=0.5", 0,
                                [](const PrecisionContext& ctx) {
                                    return mzv::cube_gamma_sides(
                                        Complex(Real(0.5), Real(0)), ctx);
                                }));
        const auto [re, im] = rng.disc(0.6875, [](double, double) { return false; });
        out.push_back(pair_case("cube-gamma", "x=" + fmt_complex(re, im), 0,
                                [re = re, im = im](const PrecisionContext& ctx) {
                                    return mzv::cube_gamma_sides(
                                        Complex(Real(re), Real(im)), ctx);
                                }));
    }
    out.push_back(pair_case("open-n", "n=1", 1e-12, [](const PrecisionContext& ctx) {
        return mzv::open_conj_sides(1, ctx);
    }));
    out.push_back(pair_case("open-n", "n=2", 1e-6, [](const PrecisionContext& ctx) {
        return mzv::open_conj_sides(2, ctx);
    }));
    out.push_back({"depth4", "pair=plain", 1e-6, [](const PrecisionContext& ctx) {
                       const auto d = mzv::depth4_check(ctx);
                       return from_values(d.nonalternating, d.reference);
                   }});
    out.push_back({"depth4", "pair=alternating", 1e-6, [](const PrecisionContext& ctx) {
                       const auto d = mzv::depth4_check(ctx);
                       return from_values(d.alternating_scaled, d.reference);
                   }});
}

void add_conjecture(std::vector<IdentityCase>& out, unsigned mask) {
    if (!(mask & kConj)) return;
    out.push_back(flag_case("conj-recurrence", "n<=200", [] {
        for (unsigned n = 1; n + 2 <= 200; ++n) {
            const auto a0 = conjecture::a_poly(n);
            const auto a1 = conjecture::a_poly(n + 1);
            const auto a2 = conjecture::a_poly(n + 2);
            const std::size_t len = std::max({a2.coefficients.size(),
                                              a1.coefficients.size(),
                                              a0.coefficients.size() + 1});
            std::vector<Rational> acc(len, Rational(0));
            const Rational c2 = Rational(n) * (n + 1) * (n + 1);
            const Rational c1 = Rational(n) * (2 * n + 1);
            const Rational c0 = Rational(n) * n * n;
            for (std::size_t i = 0; i < a2.coefficients.size(); ++i)
                acc[i] += c2 * a2.coefficients[i];
            for (std::size_t i = 0; i < a1.coefficients.size(); ++i)
                acc[i] -= c1 * a1.coefficients[i];
            for (std::size_t i = 0; i < a0.coefficients.size(); ++i)
                acc[i] -= c0 * a0.coefficients[i];
            const int sign = (n % 2 == 1) ? +1 : -1; // (-1)^(n+1)
            for (std::size_t i = 0; i < a0.coefficients.size(); ++i)
                acc[i + 1] -= Rational(sign) * a0.coefficients[i];
            for (const auto& q : acc)
                if (q != 0) return false;
        }
        return true;
    }));
    out.push_back(flag_case("conj-hand", "n=1", [] {
        return conjecture::a_poly(1).coefficients ==
               std::vector<Rational>{Rational(0), Rational(1)};
    }));
    out.push_back(flag_case("conj-hand", "n=2", [] {
        return conjecture::a_poly(2).coefficients ==
               std::vector<Rational>{Rational(0), Rational(1)};
    }));
    out.push_back(flag_case("conj-hand", "n=3", [] {
        return conjecture::a_poly(3).coefficients ==
               std::vector<Rational>{Rational(0), Rational(1), Rational(1, 4)};
    }));
    out.push_back(flag_case("conj-hand", "n=4", [] {
        return conjecture::a_poly(4).coefficients ==
               std::vector<Rational>{Rational(0), Rational(1), Rational(1, 12)};
    }));
    for (const double t : {0.25, 1.0, 1.5}) {
        out.push_back({"conj-float-exact", "t=" + fmt_num(t) + " n=200", 0,
                       [t](const PrecisionContext& ctx) {
                           const Real tr{t};
                           const Real exact = conjecture::a_eval(200, tr, ctx);
                           const Real fl = conjecture::a_recurrence_float(200, tr, ctx);
                           const Real bound = pow10_neg(ctx.working_digits() - 8) *
                                              (abs(exact) + Real(1));
                           return CaseOutcome{Complex(exact, Real(0)),
                                              Complex(fl, Real(0)), bound};
                       }});
    }
    const auto gap_case = [](const char* id, double t, unsigned n1, unsigned n2) {
        return IdentityCase{
            id, "t=" + fmt_num(t) + " " + u2("n1", n1, "n2", n2), 0,
            [t, n1, n2](const PrecisionContext& ctx) {
                const Real tr{t};
                const Real g1 = conjecture::gap(n1, tr, ctx);
                const Real g2 = conjecture::gap(n2, tr, ctx);
                const Real viol = g2 > g1 ? Real(g2 - g1) : Real(0);
                const Real bound =
                    pow10_neg(ctx.working_digits() - 8) * (g1 + g2 + Real(1));
                return CaseOutcome{Complex(viol), Complex(Real(0)), bound};
            }};
    };
    for (const double t : {0.25, 0.5, 1.0, 1.5}) {
        out.push_back(gap_case("conj-gap", t, 10, 20));
        out.push_back(gap_case("conj-gap", t, 20, 30));
    }
    for (const double t : {0.25, 0.5, 1.0}) {
        out.push_back(gap_case("conj-gap-long", t, 10, 100));
        out.push_back(gap_case("conj-gap-long", t, 100, 1000));
    }
    for (const double x : {0.25, 0.5}) {
        out.push_back({"conj-product-gamma", "x=" + fmt_num(x), 0,
                       [x](const PrecisionContext& ctx) {
                           const Complex xc{Real(x), Real(0)};
                           const auto pl = conjecture::product_limit(
                               Complex(Real(2 * x), Real(0)), ctx);
                           const auto side = mzv::cube_gamma_sides(xc, ctx);
                           const Complex rhs =
                               Complex(Real(8), Real(0)) * xc * xc * xc * side.rhs.value;
                           const Real scale = Real(8) * abs(xc) * abs(xc) * abs(xc);
                           const Real bound =
                               pl.error_bound + scale * side.rhs.error_bound;
                           return CaseOutcome{pl.value, rhs, bound};
                       }});
    }
    out.push_back({"conj-limit-zero", "t=0", 0, [](const PrecisionContext& ctx) {
                       const auto pl =
                           conjecture::product_limit(Complex(Real(0), Real(0)), ctx);
                       return CaseOutcome{pl.value, Complex(Real(0)),
                                          pl.error_bound +
                                              pow10_neg(ctx.working_digits())};
                   }});
}

std::vector<IdentityCase> build_cases(unsigned mask, std::uint64_t seed) {
    std::vector<IdentityCase> out;
    add_eu_dual(out, mask, seed);
    add_eu_dual_coeff(out, mask);
    add_z_gen(out, mask, seed);
    add_s_suite(out, mask, seed);
    add_tangent(out, mask);
    add_arctan(out, mask);
    add_half_half(out, mask);
    add_zetas1(out, mask, seed);
    add_sum_formula(out, mask, seed);
    add_log(out, mask, seed);
    add_gf2(out, mask, seed);
    add_gf2_parity(out, mask, seed);
    add_sigma(out, mask, seed);
    add_thm2(out, mask, seed);
    add_gf2_3(out, mask, seed);
    add_cot(out, mask, seed);
    add_reflection(out, mask);
    add_reduce_core(out, mask);
    add_reduce_consistency(out, mask);
    add_reduce_extra(out, mask);
    add_mzv_extra(out, mask, seed);
    add_conjecture(out, mask);
    return out;
}

// ---------------------------------------------------------------------------
// Execution.
// ---------------------------------------------------------------------------

CaseResult run_case(const IdentityCase& c, const PrecisionContext& ctx) {
    CaseResult r;
    r.id = c.id;
    r.params = c.params;
    PrecisionGuard guard(ctx.working_digits());
    Real tol = pow10_neg(ctx.digits - 5);
    if (c.tol_override > 0) tol = std::max(tol, Real(c.tol_override));
    r.tolerance = tol;
    try {
        const CaseOutcome o = c.eval(ctx);
        r.lhs = o.lhs;
        r.rhs = o.rhs;
        r.bound = o.bound;
        r.residual = abs(o.lhs - o.rhs);
        r.pass = r.residual <= r.tolerance;
    } catch (const PrecisionLossError& e) {
        r.error = e.what();
        r.precision_failure = true;
    } catch (const CapExceeded& e) {
        r.error = e.what();
        r.precision_failure = true;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Parallel execution.
//
// The working precision of the multiprecision type is a process-wide
// setting, so two threads evaluating at once would trample each other the
// moment one of them restores its caller's precision.  Parallel runs
// therefore isolate every case in a forked worker process: each child gets
// a private copy of the numeric state (and a crash in one case cannot take
// the suite down), and results come back over a pipe as exact decimal
// strings, which keeps reports byte-identical to the sequential path.
// ---------------------------------------------------------------------------

void wire_put(std::string& out, const std::string& field) {
    out += std::to_string(field.size());
    out += ':';
    out += field;
}

std::string wire_real(const Real& v) { return v.str(0, std::ios_base::scientific); }

std::string serialize_result(const CaseResult& r) {
    std::string out;
    wire_put(out, wire_real(r.lhs.re));
    wire_put(out, wire_real(r.lhs.im));
    wire_put(out, wire_real(r.rhs.re));
    wire_put(out, wire_real(r.rhs.im));
    wire_put(out, wire_real(r.residual));
    wire_put(out, wire_real(r.bound));
    wire_put(out, wire_real(r.tolerance));
    wire_put(out, r.pass ? "1" : "0");
    wire_put(out, r.precision_failure ? "1" : "0");
    wire_put(out, r.error);
    return out;
}

bool parse_result(const std::string& blob, CaseResult& r, unsigned working_digits) {
    PrecisionGuard guard(working_digits);
    std::size_t pos = 0;
    const auto take = [&](std::string& dst) {
        const std::size_t colon = blob.find(':', pos);
        if (colon == std::string::npos || colon == pos) return false;
        std::size_t len = 0;
        for (std::size_t i = pos; i < colon; ++i) {
            if (blob[i] < '0' || blob[i] > '9') return false;
            len = len * 10 + static_cast<std::size_t>(blob[i] - '0');
        }
        if (colon + 1 + len > blob.size()) return false;
        dst.assign(blob, colon + 1, len);
        pos = colon + 1 + len;
        return true;
    };
    std::array<std::string, 10> f;
    for (auto& field : f)
        if (!take(field)) return false;
    try {
        r.lhs = Complex(Real(f[0]), Real(f[1]));
        r.rhs = Complex(Real(f[2]), Real(f[3]));
        r.residual = Real(f[4]);
        r.bound = Real(f[5]);
        r.tolerance = Real(f[6]);
    } catch (const std::exception&) {
        return false;
    }
    r.pass = (f[7] == "1");
    r.precision_failure = (f[8] == "1");
    r.error = f[9];
    return pos == blob.size();
}

void run_sequential(const std::vector<IdentityCase>& cases, const PrecisionContext& ctx,
                    std::vector<CaseResult>& out) {
    for (std::size_t i = 0; i < cases.size(); ++i) out[i] = run_case(cases[i], ctx);
}

void run_forked(const std::vector<IdentityCase>& cases, const PrecisionContext& ctx,
                unsigned jobs, std::vector<CaseResult>& out) {
    struct Worker {
        pid_t pid;
        int fd;
        std::size_t index;
        std::string buf;
    };
    std::vector<Worker> active;
    std::size_t next = 0;

    const auto finish = [&](const Worker& w, bool read_ok) {
        int status = 0;
        while (waitpid(w.pid, &status, 0) < 0 && errno == EINTR) {}
        CaseResult r;
        r.id = cases[w.index].id;
        r.params = cases[w.index].params;
        const bool clean_exit = WIFEXITED(status) && WEXITSTATUS(status) == 0;
        if (read_ok && clean_exit && parse_result(w.buf, r, ctx.working_digits())) {
            out[w.index] = std::move(r);
        } else {
            r.tolerance = pow10_neg(ctx.digits - 5);
            r.error = "verification worker failed";
            out[w.index] = std::move(r);
        }
    };

    while (next < cases.size() || !active.empty()) {
        while (active.size() < jobs && next < cases.size()) {
            const std::size_t index = next++;
            int fds[2];
            if (pipe(fds) != 0) {
                out[index] = run_case(cases[index], ctx);
                continue;
            }
            const pid_t pid = fork();
            if (pid < 0) {
                close(fds[0]);
                close(fds[1]);
                out[index] = run_case(cases[index], ctx);
                continue;
            }
            if (pid == 0) {
                close(fds[0]);
                const std::string blob = serialize_result(run_case(cases[index], ctx));
                const char* p = blob.data();
                std::size_t left = blob.size();
                while (left > 0) {
                    const ssize_t w = write(fds[1], p, left);
                    if (w <= 0) {
                        if (w < 0 && errno == EINTR) continue;
                        break;
                    }
                    p += static_cast<std::size_t>(w);
                    left -= static_cast<std::size_t>(w);
                }
                close(fds[1]);
                _exit(0);
            }
            close(fds[1]);
            active.push_back(Worker{pid, fds[0], index, {}});
        }

        if (active.empty()) continue;
        std::vector<pollfd> pfds;
        pfds.reserve(active.size());
        for (const auto& w : active) pfds.push_back(pollfd{w.fd, POLLIN, 0});
        int ready = poll(pfds.data(), static_cast<nfds_t>(pfds.size()), -1);
        if (ready < 0) {
            if (errno == EINTR) continue;
            break;
        }
        for (std::size_t k = active.size(); k-- > 0;) {
            if (!(pfds[k].revents & (POLLIN | POLLHUP | POLLERR))) continue;
            Worker& w = active[k];
            char chunk[4096];
            const ssize_t got = read(w.fd, chunk, sizeof chunk);
            if (got > 0) {
                w.buf.append(chunk, static_cast<std::size_t>(got));
                continue;
            }
            if (got < 0 && errno == EINTR) continue;
            close(w.fd);
            finish(w, got == 0);
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(k));
        }
    }
    // If poll failed outright, fall back to evaluating anything unfinished.
    for (auto& w : active) {
        close(w.fd);
        finish(w, false);
    }
    for (std::size_t i = 0; i < cases.size(); ++i)
        if (out[i].id.empty()) out[i] = run_case(cases[i], ctx);
}

} // namespace

VerificationReport run_suite(const std::string& name, unsigned digits,
                             std::uint64_t seed, unsigned parallelism,
                             std::uint64_t max_terms) {
    if (digits < 10)
        throw DomainError("run_suite: digits must be at least 10");
    const unsigned mask = suite_mask(name);
    PrecisionContext ctx;
    ctx.digits = digits;
    if (max_terms > 0) ctx.max_terms = max_terms;
    ctx.validate();

    const auto t0 = std::chrono::steady_clock::now();
    auto cases = build_cases(mask, seed);
    std::sort(cases.begin(), cases.end(), [](const IdentityCase& a, const IdentityCase& b) {
        return std::tie(a.id, a.params) < std::tie(b.id, b.params);
    });

    VerificationReport rep;
    rep.suite = name;
    rep.digits = digits;
    rep.seed = seed;
    rep.cases.resize(cases.size());

    unsigned jobs = std::max(1u, parallelism);
    jobs = static_cast<unsigned>(
        std::min<std::size_t>(jobs, std::max<std::size_t>(cases.size(), 1)));
    if (jobs <= 1)
        run_sequential(cases, ctx, rep.cases);
    else
        run_forked(cases, ctx, jobs, rep.cases);

    for (const auto& cr : rep.cases) {
        if (!cr.error.empty())
            ++rep.errored;
        else if (cr.pass)
            ++rep.passed;
        else
            ++rep.failed;
        rep.precision_failure = rep.precision_failure || cr.precision_failure;
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

std::string fmt_sci(const Real& v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v.convert_to<double>());
    return buf;
}

std::string case_status(const CaseResult& c) {
    if (!c.error.empty()) return "ERROR";
    return c.pass ? "PASS" : "FAIL";
}

} // namespace

std::string render_report(const VerificationReport& r, ReportFormat f) {
    if (f == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["digits"] = r.digits;
        j["seed"] = r.seed;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : r.cases) {
            nlohmann::ordered_json o;
            o["id"] = c.id;
            o["params"] = c.params;
            o["lhs"] = to_string(c.lhs, r.digits);
            o["rhs"] = to_string(c.rhs, r.digits);
            o["residual"] = fmt_sci(c.residual);
            o["bound"] = fmt_sci(c.bound);
            o["tolerance"] = fmt_sci(c.tolerance);
            o["pass"] = c.pass;
            if (!c.error.empty()) {
                o["error"] = c.error;
                o["precision_failure"] = c.precision_failure;
            }
            arr.push_back(std::move(o));
        }
        j["cases"] = std::move(arr);
        j["summary"] = nlohmann::ordered_json{{"pass", r.passed},
                                              {"fail", r.failed},
                                              {"error", r.errored},
                                              {"precision_failure", r.precision_failure}};
        j["wall_seconds"] = r.wall_seconds;
        return j.dump(2) + "\n";
    }
    if (f == ReportFormat::csv) {
        std::string s = "id,params,residual,bound,tolerance,status\n";
        for (const auto& c : r.cases) {
            s += c.id + "," + c.params + "," + fmt_sci(c.residual) + "," +
                 fmt_sci(c.bound) + "," + fmt_sci(c.tolerance) + "," + case_status(c) +
                 "\n";
        }
        return s;
    }
    std::string s = "suite " + r.suite + " digits " + std::to_string(r.digits) +
                    " seed " + std::to_string(r.seed) + "\n";
    for (const auto& c : r.cases) {
        s += c.id + " " + c.params + " " + fmt_sci(c.residual) + " " + fmt_sci(c.bound) +
             " " + case_status(c);
        if (!c.error.empty()) s += " [" + c.error + "]";
        s += "\n";
    }
    s += "pass " + std::to_string(r.passed) + " fail " + std::to_string(r.failed) +
         " error " + std::to_string(r.errored) + "\n";
    return s;
}

} // namespace eulerlab::registry

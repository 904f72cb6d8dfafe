#include "eulerlab/reduction.hpp"

#include "eulerlab/errors.hpp"
#include "eulerlab/special.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace eulerlab::reduction {

namespace {

bool term_before(const ZetaTerm& a, const ZetaTerm& b) {
    if (a.zeta_args.size() != b.zeta_args.size())
        return a.zeta_args.size() < b.zeta_args.size();
    if (a.zeta_args != b.zeta_args) return a.zeta_args < b.zeta_args;
    return a.pi_power < b.pi_power;
}

// Renders a positive rational, "9/2" or "3".
std::string rational_text(const Rational& q) {
    std::ostringstream out;
    out << numerator(q);
    if (denominator(q) != 1) out << '/' << denominator(q);
    return out.str();
}

} // namespace

void ZetaExpression::canonicalize() {
    for (ZetaTerm& t : terms_)
        std::sort(t.zeta_args.begin(), t.zeta_args.end());
    std::sort(terms_.begin(), terms_.end(), term_before);
    std::vector<ZetaTerm> merged;
    for (ZetaTerm& t : terms_) {
        if (!merged.empty() && merged.back().zeta_args == t.zeta_args &&
            merged.back().pi_power == t.pi_power)
            merged.back().coefficient += t.coefficient;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const ZetaTerm& t) { return t.coefficient == 0; });
    terms_ = std::move(merged);
}

ZetaExpression ZetaExpression::canonicalized() const {
    ZetaExpression out = *this;
    out.canonicalize();
    return out;
}

ZetaExpression ZetaExpression::constant(Rational c) {
    ZetaExpression e;
    if (c != 0) e.terms_.push_back({std::move(c), {}, 0});
    return e;
}

ZetaExpression ZetaExpression::zeta(unsigned s) {
    if (s == 0) throw DomainError("ZetaExpression::zeta: argument must be >= 1");
    ZetaExpression e;
    if (s == 1) return e; // zeta(1) = 0 by convention
    e.terms_.push_back({Rational(1), {s}, 0});
    return e;
}

ZetaExpression ZetaExpression::pi_power(unsigned k) {
    if (k % 2 != 0)
        throw DomainError("ZetaExpression::pi_power: exponent must be even");
    ZetaExpression e;
    e.terms_.push_back({Rational(1), {}, k});
    return e;
}

ZetaExpression& ZetaExpression::operator+=(const ZetaExpression& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize();
    return *this;
}

ZetaExpression& ZetaExpression::operator-=(const ZetaExpression& o) {
    for (const ZetaTerm& t : o.terms_) {
        ZetaTerm neg = t;
        neg.coefficient = -neg.coefficient;
        terms_.push_back(std::move(neg));
    }
    canonicalize();
    return *this;
}

ZetaExpression operator*(const ZetaExpression& a, const ZetaExpression& b) {
    ZetaExpression out;
    for (const ZetaTerm& x : a.terms_)
        for (const ZetaTerm& y : b.terms_) {
            ZetaTerm t;
            t.coefficient = x.coefficient * y.coefficient;
            t.zeta_args = x.zeta_args;
            t.zeta_args.insert(t.zeta_args.end(), y.zeta_args.begin(),
                               y.zeta_args.end());
            t.pi_power = x.pi_power + y.pi_power;
            out.terms_.push_back(std::move(t));
        }
    out.canonicalize();
    return out;
}

ZetaExpression operator*(const Rational& c, ZetaExpression e) {
    for (ZetaTerm& t : e.terms_) t.coefficient *= c;
    e.canonicalize();
    return e;
}

std::string ZetaExpression::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const ZetaTerm& t : terms_) {
        const bool negative = t.coefficient < 0;
        const Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        std::vector<std::string> factors;
        if (mag != 1 || (t.zeta_args.empty() && t.pi_power == 0))
            factors.push_back(rational_text(mag));
        for (unsigned s : t.zeta_args) {
            std::ostringstream f;
            f << "z(" << s << ')';
            factors.push_back(f.str());
        }
        if (t.pi_power != 0) {
            std::ostringstream f;
            f << "pi^" << t.pi_power;
            factors.push_back(f.str());
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << '*';
            out << factors[i];
        }
    }
    return out.str();
}

ZetaExpression reduce_s1(unsigned s) {
    if (s < 2) throw DomainError("reduce_s1: requires s >= 2");
    ZetaExpression e =
        Rational(s, 2) * ZetaExpression::zeta(s + 1);
    for (unsigned k = 1; k + 2 <= s; ++k)
        e -= Rational(1, 2) * (ZetaExpression::zeta(k + 1) *
                               ZetaExpression::zeta(s - k));
    return e;
}

ZetaExpression reduce_even_odd(unsigned a, unsigned b) {
    if (a == 0 || a % 2 != 0)
        throw ParityError("reduce_even_odd: the first argument must be even and positive");
    if (b % 2 != 1)
        throw ParityError("reduce_even_odd: the second argument must be odd");
    const unsigned N = (a + b - 1) / 2;
    ZetaExpression e = ZetaExpression::zeta(a) * ZetaExpression::zeta(b);
    e += Rational(1, 2) * ((binomial_rational(a + b, a) - 1) *
                           ZetaExpression::zeta(a + b));
    for (unsigned r = 1; r + 1 <= N; ++r) {
        const Rational c =
            binomial_rational(2 * r, a - 1) + binomial_rational(2 * r, b - 1);
        e -= c * (ZetaExpression::zeta(2 * r + 1) *
                  ZetaExpression::zeta(a + b - 1 - 2 * r));
    }
    return e;
}

ZetaExpression reduce_swap(unsigned b, unsigned a) {
    if (a == 0 || a % 2 != 0)
        throw ParityError("reduce_swap: the second argument must be even and positive");
    if (b % 2 != 1)
        throw ParityError("reduce_swap: the first argument must be odd");
    if (b == 1) throw DomainError("reduce_swap: zeta(1,a) diverges");
    const unsigned N = (a + b - 1) / 2;
    ZetaExpression e =
        Rational(-1, 2) * ((1 + binomial_rational(a + b, a)) *
                           ZetaExpression::zeta(a + b));
    for (unsigned r = 1; r + 1 <= N; ++r) {
        const Rational c =
            binomial_rational(2 * r, a - 1) + binomial_rational(2 * r, b - 1);
        e += c * (ZetaExpression::zeta(2 * r + 1) *
                  ZetaExpression::zeta(a + b - 1 - 2 * r));
    }
    return e;
}

ZetaExpression reflect(unsigned s, unsigned t) {
    if (s < 2 || t < 2) throw DomainError("reflect: requires s, t >= 2");
    return ZetaExpression::zeta(s) * ZetaExpression::zeta(t) -
           ZetaExpression::zeta(s + t);
}

std::vector<mzv::MZVIndex> sum_formula_compositions(unsigned r, unsigned s) {
    if (r < 1) throw DomainError("sum_formula_compositions: requires r >= 1");
    std::vector<mzv::MZVIndex> out;
    std::vector<unsigned> a(r, 0);
    // Enumerate compositions of s into r nonnegative parts, a1 descending.
    const auto emit = [&] {
        mzv::MZVIndex idx;
        idx.slots.push_back({a[0] + 2, +1});
        for (unsigned i = 1; i < r; ++i) idx.slots.push_back({a[i] + 1, +1});
        out.push_back(std::move(idx));
    };
    const auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
        if (pos + 1 == r) {
            a[pos] = left;
            emit();
            return;
        }
        for (unsigned v = left; v + 1 > 0; --v) {
            a[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, s);
    return out;
}

SeriesValue expr_eval(const ZetaExpression& e, const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits());
    Complex acc(0);
    Real magnitude(0);
    for (const ZetaTerm& t : e.terms()) {
        Real v = Real(numerator(t.coefficient).str()) /
                 Real(denominator(t.coefficient).str());
        for (unsigned s : t.zeta_args) v *= detail::zeta_raw(Real(int(s)));
        if (t.pi_power != 0) v *= pow(const_pi(ctx), int(t.pi_power));
        acc += Complex(v);
        magnitude += abs(v);
    }
    const unsigned bound_digits =
        ctx.digits + (ctx.guard_digits >= 3 ? ctx.guard_digits - 3 : 1);
    SeriesValue out;
    out.value = acc;
    out.error_bound = pow10_neg(bound_digits) * (magnitude + 1);
    out.method = Method::closed_form;
    out.notes.push_back("rational combination of zeta values");
    return out;
}

} // namespace eulerlab::reduction

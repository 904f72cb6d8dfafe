#include "eulerlab/smooth_fn.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/special.hpp"

#include <algorithm>

namespace eulerlab {

namespace {

// C(n, k) for the small orders Leibniz needs.
Real binom_real(unsigned n, unsigned k) {
    if (k > n) return Real(0);
    if (k > n - k) k = n - k;
    Real r(1);
    for (unsigned i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// rising factorial j (j+1) ... (j+k-1)
Real rising_real(unsigned j, unsigned k) {
    Real r(1);
    for (unsigned i = 0; i < k; ++i) r *= (j + i);
    return r;
}

Complex rising_complex(const Complex& s, unsigned k) {
    Complex r(1);
    for (unsigned i = 0; i < k; ++i) r *= s + Complex(i);
    return r;
}

class ConstFn final : public SmoothFn {
public:
    explicit ConstFn(Complex c) : c_(std::move(c)) {}
    Complex eval(const Real&) const override { return c_; }
    Complex deriv(unsigned k, const Real& t) const override {
        return k == 0 ? eval(t) : Complex(0);
    }
    std::optional<Complex> tail_integral(const Real&) const override {
        if (c_.re == 0 && c_.im == 0) return Complex(0);
        return std::nullopt; // divergent
    }

private:
    Complex c_;
};

class SumFn final : public SmoothFn {
public:
    explicit SumFn(std::vector<FnPtr> parts) : parts_(std::move(parts)) {}
    Complex eval(const Real& t) const override {
        Complex acc(0);
        for (const auto& p : parts_) acc += p->eval(t);
        return acc;
    }
    Complex deriv(unsigned k, const Real& t) const override {
        Complex acc(0);
        for (const auto& p : parts_) acc += p->deriv(k, t);
        return acc;
    }
    std::optional<Complex> tail_integral(const Real& N) const override {
        Complex acc(0);
        for (const auto& p : parts_) {
            auto v = p->tail_integral(N);
            if (!v) return std::nullopt;
            acc += *v;
        }
        return acc;
    }

private:
    std::vector<FnPtr> parts_;
};

class ScaleFn final : public SmoothFn {
public:
    ScaleFn(Complex c, FnPtr f) : c_(std::move(c)), f_(std::move(f)) {}
    Complex eval(const Real& t) const override { return c_ * f_->eval(t); }
    Complex deriv(unsigned k, const Real& t) const override {
        return c_ * f_->deriv(k, t);
    }
    std::optional<Complex> tail_integral(const Real& N) const override {
        if (c_.re == 0 && c_.im == 0) return Complex(0);
        auto v = f_->tail_integral(N);
        if (!v) return std::nullopt;
        return c_ * *v;
    }

private:
    Complex c_;
    FnPtr f_;
};

class ProdFn final : public SmoothFn {
public:
    ProdFn(FnPtr a, FnPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    Complex eval(const Real& t) const override {
        return a_->eval(t) * b_->eval(t);
    }
    Complex deriv(unsigned k, const Real& t) const override {
        if (k == 0) return eval(t);
        Complex acc(0);
        for (unsigned i = 0; i <= k; ++i)
            acc += Complex(binom_real(k, i)) * a_->deriv(i, t) * b_->deriv(k - i, t);
        return acc;
    }

private:
    FnPtr a_;
    FnPtr b_;
};

// ---- rational functions via partial fractions ----

using Series = std::vector<Complex>; // truncated power series, ascending

Series series_mul(const Series& a, const Series& b, std::size_t order) {
    Series out(order, Complex(0));
    for (std::size_t i = 0; i < a.size() && i < order; ++i)
        for (std::size_t j = 0; j + i < order && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

class RationalFn final : public SmoothFn {
public:
    RationalFn(std::vector<Complex> numer,
               std::vector<std::pair<Complex, unsigned>> poles, Complex scale)
        : numer_(std::move(numer)), scale_(std::move(scale)) {
        // merge exactly coincident poles
        for (auto& [c, m] : poles) {
            bool merged = false;
            for (auto& [c2, m2] : poles_) {
                if (c2.re == c.re && c2.im == c.im) {
                    m2 += m;
                    merged = true;
                    break;
                }
            }
            if (!merged) poles_.emplace_back(c, m);
        }
        while (numer_.size() > 1 && abs(numer_.back()) == 0) numer_.pop_back();
        unsigned total = 0;
        for (auto& [c, m] : poles_) total += m;
        if (numer_.size() > total)
            throw DomainError("fn_rational: numerator degree too large");
        degree_gap_ = total - static_cast<unsigned>(numer_.size() - 1);
        build_partial_fractions();
    }

    Complex eval(const Real& t) const override {
        Complex num = poly_at(t);
        Complex den(1);
        for (const auto& [c, m] : poles_) den *= pow(Complex(t) - c, static_cast<long>(m));
        return scale_ * num / den;
    }

    Complex deriv(unsigned k, const Real& t) const override {
        if (k == 0) return eval(t);
        // d^k (t-c)^(-j) = (-1)^k j(j+1)...(j+k-1) (t-c)^(-j-k)
        Complex acc(0);
        Real sign = (k % 2 == 0) ? Real(1) : Real(-1);
        for (const auto& pf : pf_) {
            Complex base = Complex(1) / (Complex(t) - pf.pole);
            Complex p = pow(base, static_cast<long>(k));
            for (unsigned j = 1; j <= pf.coeff.size(); ++j) {
                p *= base; // (t-c)^-(j+k)
                acc += Complex(rising_real(j, k)) * pf.coeff[j - 1] * p;
            }
        }
        return Complex(sign) * acc;
    }

    std::optional<Complex> tail_integral(const Real& N) const override {
        // Needs overall decay at least 1/t^2. When deg p <= total - 2 the
        // order-1 residues cancel and the log terms pair up convergently.
        if (degree_gap_ < 2) return std::nullopt;
        Complex acc(0);
        for (const auto& pf : pf_) {
            Complex base = Complex(1) / (Complex(N) - pf.pole);
            acc -= pf.coeff[0] * log(Complex(N) - pf.pole);
            Complex p = base;
            for (unsigned j = 2; j <= pf.coeff.size(); ++j) {
                // int_N^inf (t-c)^(-j) dt = (N-c)^(1-j) / (j-1)
                acc += pf.coeff[j - 1] * p / Complex(j - 1);
                p *= base;
            }
        }
        return acc;
    }

private:
    struct PF {
        Complex pole;
        Series coeff; // coeff[j-1] multiplies (t-pole)^(-j)
    };

    Complex poly_at(const Real& t) const {
        Complex acc(0);
        for (std::size_t i = numer_.size(); i-- > 0;)
            acc = acc * Complex(t) + numer_[i];
        return acc;
    }

    void build_partial_fractions() {
        for (std::size_t i = 0; i < poles_.size(); ++i) {
            const auto& [ci, mi] = poles_[i];
            // Taylor-expand g(t) = scale * p(t) * prod_{k != i} (t-c_k)^(-m_k)
            // around c_i to order m_i - 1; those coefficients are the
            // partial-fraction numerators (highest inverse power first).
            std::size_t order = mi;
            Series g(order, Complex(0));
            // p(c_i + u), scale folded into the polynomial
            for (std::size_t r = 0; r < numer_.size(); ++r) {
                Complex cr = scale_ * numer_[r];
                for (std::size_t j = 0; j <= r && j < order; ++j) {
                    g[j] += Complex(binom_real(static_cast<unsigned>(r),
                                               static_cast<unsigned>(j))) *
                            cr * pow(ci, static_cast<long>(r - j));
                }
            }
            for (std::size_t k = 0; k < poles_.size(); ++k) {
                if (k == i) continue;
                const auto& [ck, mk] = poles_[k];
                Complex d = ci - ck;
                if (abs(d) == 0)
                    throw DomainError("fn_rational: coincident poles after merge");
                // (d + u)^(-m) = d^(-m) sum_j C(m+j-1, j) (-u/d)^j
                Series h(order, Complex(0));
                Complex dm = pow(Complex(1) / d, static_cast<long>(mk));
                Complex w = dm;
                for (std::size_t j = 0; j < order; ++j) {
                    h[j] = Complex(binom_real(mk + static_cast<unsigned>(j) - 1,
                                              static_cast<unsigned>(j))) *
                           w;
                    w = w * (Complex(-1) / d);
                }
                g = series_mul(g, h, order);
            }
            PF pf;
            pf.pole = ci;
            pf.coeff.assign(mi, Complex(0));
            // f = g(u)/u^m  =>  coefficient of (t-c)^(-j) is g_{m-j}
            for (unsigned j = 1; j <= mi; ++j) pf.coeff[j - 1] = g[mi - j];
            pf_.push_back(std::move(pf));
        }
    }

    std::vector<Complex> numer_;
    std::vector<std::pair<Complex, unsigned>> poles_;
    Complex scale_;
    unsigned degree_gap_ = 0;
    std::vector<PF> pf_;
};

class PolygammaFn final : public SmoothFn {
public:
    PolygammaFn(unsigned j, Real alpha, Complex c)
        : j_(j), alpha_(std::move(alpha)), c_(std::move(c)) {}
    Complex eval(const Real& t) const override {
        return detail::polygamma_raw(j_, arg_at(t));
    }
    Complex deriv(unsigned k, const Real& t) const override {
        Complex v = detail::polygamma_raw(j_ + k, arg_at(t));
        return Complex(pow(alpha_, static_cast<int>(k))) * v;
    }
    std::optional<Complex> tail_integral(const Real& N) const override {
        if (j_ < 2) return std::nullopt;
        Complex v = detail::polygamma_raw(j_ - 1, arg_at(N));
        return -v / Complex(alpha_);
    }

private:
    Complex arg_at(const Real& t) const { return Complex(alpha_ * t) + c_; }
    unsigned j_;
    Real alpha_;
    Complex c_;
};

class HurwitzFn final : public SmoothFn {
public:
    HurwitzFn(Complex s, Real alpha, Complex c)
        : s_(std::move(s)), alpha_(std::move(alpha)), c_(std::move(c)) {}
    Complex eval(const Real& t) const override {
        return detail::hurwitz_raw(s_, arg_at(t));
    }
    Complex deriv(unsigned k, const Real& t) const override {
        if (k == 0) return eval(t);
        // d^k H(s, a(t)) = (-alpha)^k (s)_k H(s+k, a(t))
        Complex v = detail::hurwitz_raw(s_ + Complex(k), arg_at(t));
        return Complex(pow(-alpha_, static_cast<int>(k))) * rising_complex(s_, k) * v;
    }
    std::optional<Complex> tail_integral(const Real& N) const override {
        if (s_.re <= 2) return std::nullopt;
        Complex v = detail::hurwitz_raw(s_ - Complex(1), arg_at(N));
        return v / (Complex(alpha_) * (s_ - Complex(1)));
    }

private:
    Complex arg_at(const Real& t) const { return Complex(alpha_ * t) + c_; }
    Complex s_;
    Real alpha_;
    Complex c_;
};

class Log1mFn final : public SmoothFn {
public:
    explicit Log1mFn(Complex x) : x_(std::move(x)) {}
    Complex eval(const Real& t) const override {
        return log(Complex(1) - x_ / Complex(t));
    }
    Complex deriv(unsigned k, const Real& t) const override {
        if (k == 0) return eval(t);
        // (-1)^(k-1) (k-1)! ((t-x)^-k - t^-k)
        Complex a = pow(Complex(1) / (Complex(t) - x_), static_cast<long>(k));
        Complex b = pow(Complex(1) / Complex(t), static_cast<long>(k));
        Real c = detail::factorial_real(k - 1);
        if (k % 2 == 0) c = -c;
        return Complex(c) * (a - b);
    }

private:
    Complex x_;
};

class AtanRecipFn final : public SmoothFn {
public:
    Complex eval(const Real& t) const override { return Complex(atan(1 / t)); }
    Complex deriv(unsigned k, const Real& t) const override {
        if (k == 0) return eval(t);
        // f' = -1/(1+t^2) = -(1/2i)((t-i)^-1 - (t+i)^-1)
        Complex i(Real(0), Real(1));
        Complex a = pow(Complex(1) / (Complex(t) - i), static_cast<long>(k));
        Complex b = pow(Complex(1) / (Complex(t) + i), static_cast<long>(k));
        Real c = detail::factorial_real(k - 1);
        if (k % 2 == 0) c = -c;
        Complex half_over_i = Complex(Real(0), Real(-1) / 2); // 1/(2i)
        return Complex(-1) * half_over_i * Complex(c) * (a - b);
    }
};

} // namespace

FnPtr fn_const(Complex c) {
    return std::make_shared<ConstFn>(to_working(c));
}

FnPtr fn_sum(std::vector<FnPtr> parts) {
    return std::make_shared<SumFn>(std::move(parts));
}

FnPtr fn_scale(Complex c, FnPtr f) {
    return std::make_shared<ScaleFn>(to_working(c), std::move(f));
}

FnPtr fn_prod(FnPtr a, FnPtr b) {
    return std::make_shared<ProdFn>(std::move(a), std::move(b));
}

FnPtr fn_sub(FnPtr a, FnPtr b) {
    return fn_sum({std::move(a), fn_scale(Complex(-1), std::move(b))});
}

FnPtr fn_rational(std::vector<Complex> numer,
                  std::vector<std::pair<Complex, unsigned>> poles, Complex scale) {
    // Promote all inputs so partial fractions come out at full working
    // precision even when the caller built the parameters earlier, under a
    // coarser default.
    for (auto& c : numer) c = to_working(c);
    for (auto& [c, m] : poles) c = to_working(c);
    return std::make_shared<RationalFn>(std::move(numer), std::move(poles),
                                        to_working(scale));
}

FnPtr fn_polygamma(unsigned j, Real alpha, Complex c) {
    return std::make_shared<PolygammaFn>(j, to_working(alpha), to_working(c));
}

FnPtr fn_hurwitz(Complex s, Real alpha, Complex c) {
    return std::make_shared<HurwitzFn>(to_working(s), to_working(alpha),
                                       to_working(c));
}

FnPtr fn_log1m(Complex x) {
    return std::make_shared<Log1mFn>(to_working(x));
}

FnPtr fn_atan_recip() { return std::make_shared<AtanRecipFn>(); }

} // namespace eulerlab

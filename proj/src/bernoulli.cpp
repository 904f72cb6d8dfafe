#include "eulerlab/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace eulerlab {

namespace {

std::mutex cache_mutex;
// deque: growth never invalidates references to existing elements, so the
// by-reference return below stays valid while other threads extend.
std::deque<Rational> cache; // cache[m] = B_m

using Int = boost::multiprecision::cpp_int;

Int binom_int(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

void extend_cache(unsigned m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m.
    while (cache.size() <= m) {
        unsigned n = static_cast<unsigned>(cache.size());
        if (n == 0) {
            cache.emplace_back(1);
            continue;
        }
        Rational acc = 0;
        for (unsigned j = 0; j < n; ++j)
            acc += Rational(binom_int(n + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(n + 1));
    }
}

} // namespace

const Rational& bernoulli_rational(unsigned m) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    extend_cache(m);
    return cache[m];
}

Real bernoulli_real(unsigned m) {
    // Tail expansions request these in tight loops; keep a per-thread cache
    // that is invalidated whenever the working precision changes.
    thread_local std::vector<Real> rcache;
    thread_local unsigned rcache_digits = 0;
    unsigned cur = Real::default_precision();
    if (cur != rcache_digits) {
        rcache.clear();
        rcache_digits = cur;
    }
    while (rcache.size() <= m) {
        unsigned k = static_cast<unsigned>(rcache.size());
        Rational b = bernoulli_rational(k);
        rcache.push_back(Real(numerator(b).str()) / Real(denominator(b).str()));
    }
    return rcache[m];
}

Rational binomial_rational(unsigned n, unsigned k) {
    return Rational(binom_int(n, k));
}

} // namespace eulerlab

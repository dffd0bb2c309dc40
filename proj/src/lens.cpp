/* Lens-space correction terms, their sums, and Hirzebruch-Jung expansions. */

#include "cfk/lens.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cfk/errors.hpp"
#include "cfk/intmath.hpp"

namespace cfk {

namespace {

// All p correction terms of L(p,q) for 0 < q < p coprime, index ascending.
// Memoized: batch pipelines hit the same lens spaces repeatedly.
const std::vector<Rational>& d_table(long long p, long long q);

std::vector<Rational> compute_d_table(long long p, long long q) {
    std::vector<Rational> out;
    out.reserve(p);
    if (p == 1) {
        out.push_back(Rational(0));
        return out;
    }
    long long r = p % q;
    const std::vector<Rational>* sub = nullptr;
    if (q > 1) sub = &d_table(q, r);
    for (long long i = 0; i < p; ++i) {
        long long base = 2 * i + 1 - p - q;
        Rational d = Rational(-1, 4) + Rational(base * base, 4 * p * q);
        if (q > 1) d = d - (*sub)[i % q];
        // denominators divide 4pq throughout the recursion
        if ((4 * p * q) % d.den() != 0)
            throw invariant_error("d_invariant: denominator " + std::to_string(d.den()) +
                                  " does not divide 4pq at (p,q) = (" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
        out.push_back(d);
    }
    return out;
}

// lock only guards the cache; the recursion runs unlocked (map references
// stay valid because entries are never erased)
const std::vector<Rational>& d_table(long long p, long long q) {
    static std::map<std::pair<long long, long long>, std::vector<Rational>> cache;
    static std::mutex mutex;
    auto key = std::make_pair(p, q);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<Rational> table = compute_d_table(p, q);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

Rational d_invariant(long long p, long long q, long long i) {
    if (p <= 0) throw std::domain_error("d_invariant: p must be positive");
    if (i < 0 || i >= p) throw std::domain_error("d_invariant: index out of range [0, p)");
    if (std::gcd(p, q < 0 ? -q : q) != 1)
        throw std::domain_error("d_invariant: p and q must be coprime");
    if (q < 0) return -d_invariant(p, pos_mod(-q, p), i);
    q = pos_mod(q, p == 1 ? 1 : p);
    if (p == 1) return Rational(0);
    if (q == 0) throw std::domain_error("d_invariant: q = 0 only makes sense for p = 1");
    return d_table(p, q)[i];
}

std::vector<long long> hj_expansion(long long p, long long q) {
    if (!(0 < q && q < p)) throw std::domain_error("hj_expansion: need 0 < q < p");
    if (std::gcd(p, q) != 1) throw std::domain_error("hj_expansion: p and q must be coprime");
    std::vector<long long> out;
    while (q > 0) {
        long long a = ceil_div(p, q);
        out.push_back(a);
        long long np = q, nq = a * q - p;
        p = np;
        q = nq;
    }
    return out;
}

DSumResult d_sum(long long p, long long q) {
    if (!(0 < q && q < p)) throw std::domain_error("d_sum: need 0 < q < p");
    if (std::gcd(p, q) != 1) throw std::domain_error("d_sum: p and q must be coprime");
    DSumResult res;
    res.recursive_sum = Rational(0);
    for (long long i = 0; i < p; ++i) res.recursive_sum += d_invariant(p, q, i);

    long long qp = mod_inverse(q, p);
    long long correction = 0;
    for (long long a : hj_expansion(p, q)) correction += a - 3;
    res.closed_form = Rational(-(q + qp + p * correction), 12);
    res.lambda = res.recursive_sum / Rational(p);
    return res;
}

Rational first_q_sum(long long p, long long q) {
    if (!(0 < q && q < p)) throw std::domain_error("first_q_sum: need 0 < q < p");
    if (std::gcd(p, q) != 1) throw std::domain_error("first_q_sum: p and q must be coprime");
    Rational sum(0);
    for (long long i = 0; i < q; ++i) sum += d_invariant(p, q, i);
    return sum;
}

}  // namespace cfk

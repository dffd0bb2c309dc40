#pragma once

#include <vector>

#include "cfk/rational.hpp"

namespace cfk {

/* Correction terms of lens spaces, exact. Convention: the recursion
       d(p, q, i) = -1/4 + (2i + 1 - p - q)^2 / (4pq) - d(q, p mod q, i mod q)
   with d(1, *, 0) = 0, normalized so d(2, 1, 0) = +1/4. Negative q flips the
   orientation: d(p, -q, i) = -d(p, q, i). Results are memoized per (p, q). */
Rational d_invariant(long long p, long long q, long long i);

// Hirzebruch-Jung expansion p/q = a1 - 1/(a2 - 1/(... - 1/an)), all ai >= 2.
std::vector<long long> hj_expansion(long long p, long long q);

struct DSumResult {
    Rational recursive_sum;  // sum_i d(p, q, i) via the recursion
    Rational closed_form;    // -(1/12) [ q + q' + p * sum(ai - 3) ]
    Rational lambda;         // recursive_sum / p (Casson-Walker of L(p,q))
};

/* Both evaluations of sum_{i<p} d(L(p,q), i). The two orientation conventions
   are opposite: recursive_sum == -closed_form, exactly, for all coprime
   0 < q < p. Both are exposed; downstream vanishing tests are sign-blind. */
DSumResult d_sum(long long p, long long q);

// sum_{i=0}^{q-1} d(p, q, i), the first-q partial sum.
Rational first_q_sum(long long p, long long q);

}  // namespace cfk

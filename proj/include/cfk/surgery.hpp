#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cfk/curve.hpp"
#include "cfk/rational.hpp"

namespace cfk {

/* The slope pair {p/q, -p/q}; p, q > 0 coprime. */
struct SlopePair {
    long long p = 1;
    long long q = 1;
    friend bool operator==(const SlopePair&, const SlopePair&) = default;
    friend bool operator<(const SlopePair& a, const SlopePair& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
};

struct SpinCGradings {
    Rational d_plus;   // d(L(p, q), i)
    Rational d_minus;  // d(L(p,-q), i) = -d(L(p, q), i)
    std::vector<Rational> multiset_plus;   // absolute gradings, sorted
    std::vector<Rational> multiset_minus;  // image under the reflection map, sorted
};

struct GradedSurgeryComparison {
    SlopePair slope;
    std::vector<SpinCGradings> spin_c;  // indexed by i in [0, p)
    bool match = false;
    std::optional<std::vector<int>> sigma;  // witness permutation when match
};

/* Number of crossings of the slope-(p/q) line for spin-c index i with the
   height-s window of the meridian: #{ t : qs <= i + tp <= q(s+1) - 1 } for
   q > 0, mirrored in s for q < 0. */
long long spin_c_crossings(long long p, long long q, long long i, long long s);

// The t parameters of those crossings, ascending (q > 0 only).
std::vector<long long> crossing_params(long long p, long long q, long long i, long long s);

/* Marked points inside the triangle cut off by the meridian, the surgery line
   and the horizontal curve, for the j-th crossing (by ascending t) in window
   s. Exact lattice count; the line carries an infinitesimal upward shift, so
   points on the unshifted line are interior and meridian points are boundary.
   k = 0 for s = 0 by definition. */
long long triangle_count(long long p, long long q, long long i, long long s, long long j);

// rank of the hat invariant of p/q surgery: |p - m q| + n |q|.
long long total_rank(long long p, long long q, long long m, long long n);

/* Absolutely graded comparison of the two surgery orientations on a box-class
   profile with epsilon = 0. Every simple figure eight at (s, d) contributes,
   per crossing, a generator pair at relative gradings
       (-1 + 2k + |s| - d,  2k + |s| - d),
   anchored at d(L(p, q), i); the minus side applies the grading shift
   1 - 2|s| - 4k per generator and anchors at d(L(p, -q), i). match is true
   iff some permutation of spin-c indices aligns all graded multisets. */
GradedSurgeryComparison graded_surgery(const CurveProfile& profile, SlopePair slope);

/* Slope-1 figure-eight ledger: every height-0 delta-grading D is balanced by
   the window sums of the nonzero heights,
       e_0^D = sum_{s != 0} sum_{d = D - s^2 + 1}^{D + s^2 - 1} e_s^d.
   Equivalent to graded_surgery(profile, {1,1}).match; kept as an independent
   code path. */
bool figure_eight_balance(const std::map<std::pair<int, int>, long long>& census);

}  // namespace cfk

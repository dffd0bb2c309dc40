#pragma once

#include <map>
#include <optional>
#include <utility>

#include "cfk/rational.hpp"
#include "cfk/reduction.hpp"

namespace cfk {

/* Numerical shadow of the immersed multicurve: slope m of the non-vertical
   segment, vertical segment counts n_s, and the graded census e_s^d of simple
   figure-eight components. n and e are only defined when epsilon = 0 (the
   distinguished curve is horizontal); e additionally needs box_class. */
struct CurveProfile {
    int genus = 0;
    int thickness = 0;
    int tau = 0;
    int epsilon = 0;
    int m = 0;  // = 2*tau - epsilon
    bool box_class = false;  // every acyclic summand is a simple figure eight
    std::optional<std::map<int, long long>> n;                       // s -> n_s (nonzero entries)
    std::optional<std::map<std::pair<int, int>, long long>> e;       // (s, d) -> count
};

/* F2 homology dimension of the level-s hook subquotient: column copies of
   generators with A <= s joined to row copies with A >= s (identified at
   A = s); V-arrows act between columns when A(src) <= s, U-arrows between
   rows when A(src) >= s. Requires a single-generator staircase (epsilon 0). */
long long hook_homology_rank(const UVZeroComplex& reduced, int s);

CurveProfile curve_profile(const Decomposition& decomp, const KnotInvariants& inv,
                           const UVZeroComplex& reduced);

/* q* = (n_0 + 2*sum_{s>=1} n_s) / (4*sum_{s>=1} s^2 n_s), exact.
   Requires epsilon = 0 and genus >= 2. */
Rational candidate_q(const CurveProfile& profile);

}  // namespace cfk

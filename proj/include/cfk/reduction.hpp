#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cfk/complex.hpp"

namespace cfk {

/* Integer Laurent polynomial, exponent -> coefficient, zero entries absent. */
struct LaurentPoly {
    std::map<int, long long> coeff;

    long long at(int s) const {
        auto it = coeff.find(s);
        return it == coeff.end() ? 0 : it->second;
    }
    long long eval_one() const;
    // sum_s a_s * s * (s-1), the second derivative at t = 1
    long long second_derivative_one() const;
    bool symmetric() const;  // a_s == a_{-s}
    int span() const;        // max |s| with a_s != 0
    std::vector<long long> coeff_span() const;  // ascending, from -span to span
    std::string str() const;
};

struct Summand {
    enum class Variant { Staircase, Box, Exotic };
    Variant variant = Variant::Exotic;
    std::vector<std::string> gens;  // ordered along the zigzag for staircases, sorted otherwise
    // Box fields
    int height = 0;      // s: Alexander grading of the source/sink pair
    int delta = 0;       // d = A - M of the source
    bool simple = false; // all four powers equal 1
};

struct Decomposition {
    Summand staircase;
    std::vector<Summand> boxes;
    std::vector<Summand> exotics;
};

struct KnotInvariants {
    int genus = 0;
    int thickness = 0;
    int tau = 0;
    int epsilon = 0;  // -1, 0, or 1
    std::map<std::pair<int, int>, long long> hfk;  // (A, M) -> rank
    LaurentPoly alexander;
    long long alex_dd1 = 0;  // Delta''(1)
};

/* Gaussian cancellation of all power-0 arrows, in sorted order. Preserves the
   homotopy type; output has every power >= 1 and still validates. */
UVZeroComplex reduce(const UVZeroComplex& c);

/* Split a reduced, valid complex into connected components of the undirected
   arrow graph and classify them. Exactly one component carries vertical
   homology (rank 1); anything else is corrupt input. */
Decomposition decompose(const UVZeroComplex& reduced);

KnotInvariants knot_invariants(const Decomposition& decomp, const UVZeroComplex& reduced);

}  // namespace cfk

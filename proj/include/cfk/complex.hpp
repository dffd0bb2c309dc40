#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cfk/errors.hpp"

namespace cfk {

enum class ArrowKind { U, V };

inline const char* kind_name(ArrowKind k) { return k == ArrowKind::U ? "U" : "V"; }

struct Generator {
    std::string id;
    int alexander = 0;  // A grading
    int maslov = 0;     // M grading
};

/* Arrow (from -> to, kind^power): the term kind^power * to appears in d(from).
   power 0 is the plain coefficient 1 (unreduced inputs carry these). */
struct Arrow {
    std::string from;
    std::string to;
    ArrowKind kind = ArrowKind::U;
    int power = 0;
};

/* A finite based chain complex over F2[U,V]/(UV=0). Coefficients are implicit:
   an arrow is present or absent. Immutable by convention after construction. */
struct UVZeroComplex {
    std::string name;
    std::vector<Generator> generators;
    std::vector<Arrow> arrows;
};

struct Violation {
    enum class Kind { GradingLaw, DSquared };
    Kind kind;
    std::string detail;
};

// Thrown by CLI helpers when an operation requires a violation-free complex.
struct validation_failure : std::runtime_error {
    std::vector<Violation> violations;
    explicit validation_failure(std::vector<Violation> v)
        : std::runtime_error("complex fails validation"), violations(std::move(v)) {}
};

/* Document parsing. The canonical form is JSON with fields name, generators
   [{id, alexander, maslov}], arrows [{from, to, kind, power}]; serialization
   sorts generators by id and arrows by (from, to, kind, power) and is
   byte-stable. parse accepts any ordering and checks structure only. */
UVZeroComplex parse_complex(const std::string& text);
std::string serialize_complex(const UVZeroComplex& c);
UVZeroComplex load_complex_file(const std::string& path);

// Grading-law and d^2-parity violations; empty result means valid.
std::vector<Violation> validate(const UVZeroComplex& c);

std::unordered_map<std::string, int> generator_index(const UVZeroComplex& c);

// In-place canonical ordering (the order serialize_complex emits).
void sort_canonical(UVZeroComplex& c);

}  // namespace cfk

#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/pipeline.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& stem) {
    return std::string(CFK_FIXTURE_DIR) + "/" + stem + ".cfk";
}

inline cfk::UVZeroComplex fixture(const std::string& stem) {
    return cfk::load_complex_file(fixture_path(stem));
}

inline cfk::UVZeroComplex figure8() {
    using cfk::ArrowKind;
    cfk::UVZeroComplex c;
    c.name = "figure8";
    c.generators = {{"a", 1, 1}, {"b", 0, 0}, {"c", 0, 0}, {"d", 0, 0}, {"e", -1, -1}};
    c.arrows = {{"a", "b", ArrowKind::V, 1},
                {"c", "e", ArrowKind::V, 1},
                {"c", "a", ArrowKind::U, 1},
                {"e", "b", ArrowKind::U, 1}};
    return c;
}

inline cfk::UVZeroComplex trefoil_rh() {
    using cfk::ArrowKind;
    cfk::UVZeroComplex c;
    c.name = "trefoil_rh";
    c.generators = {{"a", 1, 0}, {"b", 0, -1}, {"c", -1, -2}};
    c.arrows = {{"b", "a", ArrowKind::U, 1}, {"b", "c", ArrowKind::V, 1}};
    return c;
}

inline cfk::UVZeroComplex unknot() {
    cfk::UVZeroComplex c;
    c.name = "unknot";
    c.generators = {{"u", 0, 0}};
    return c;
}

/* Random symmetric census of simple figure eights; heights up to 3, deltas in
   [-3, 3]. Always nonempty. */
inline std::vector<std::tuple<int, int, long long>> random_census(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_kinds(1, 4), height(0, 3), delta(-3, 3), count(1, 3);
    std::vector<std::tuple<int, int, long long>> boxes;
    int kinds = n_kinds(rng);
    for (int k = 0; k < kinds; ++k) {
        int s = height(rng), d = delta(rng);
        long long c = count(rng);
        boxes.emplace_back(s, d, c);
        if (s != 0) boxes.emplace_back(-s, d, c);
    }
    return boxes;
}

inline cfk::UVZeroComplex random_box_complex(std::mt19937_64& rng) {
    return cfk::synthesize_box_complex(true, random_census(rng));
}

}  // namespace testutil

/* Writes the bundled fixture corpus into fixtures/ (or argv[1]). The files
   are committed; this tool only exists to regenerate them deterministically. */

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cfk/complex.hpp"
#include "cfk/pipeline.hpp"

using cfk::Arrow;
using cfk::ArrowKind;
using cfk::UVZeroComplex;

namespace {

void write(const std::filesystem::path& dir, const std::string& stem, const UVZeroComplex& c) {
    std::ofstream out(dir / (stem + ".cfk"), std::ios::binary);
    out << cfk::serialize_complex(c);
    std::cout << "wrote " << (dir / (stem + ".cfk")).string() << "\n";
}

UVZeroComplex unknot() {
    UVZeroComplex c;
    c.name = "unknot";
    c.generators = {{"x0", 0, 0}};
    return c;
}

UVZeroComplex trefoil_rh() {
    UVZeroComplex c;
    c.name = "trefoil_rh";
    c.generators = {{"a", 1, 0}, {"b", 0, -1}, {"c", -1, -2}};
    c.arrows = {{"b", "a", ArrowKind::U, 1}, {"b", "c", ArrowKind::V, 1}};
    return c;
}

UVZeroComplex figure8() {
    UVZeroComplex c;
    c.name = "figure8";
    c.generators = {{"a", 1, 1}, {"b", 0, 0}, {"c", 0, 0}, {"d", 0, 0}, {"e", -1, -1}};
    c.arrows = {{"a", "b", ArrowKind::V, 1},
                {"c", "e", ArrowKind::V, 1},
                {"c", "a", ArrowKind::U, 1},
                {"e", "b", ArrowKind::U, 1}};
    return c;
}

void add_thick_box(UVZeroComplex& c, const std::string& p) {
    c.generators.push_back({p + "c", 0, 0});
    c.generators.push_back({p + "t", 2, 3});
    c.generators.push_back({p + "e", -2, -1});
    c.generators.push_back({p + "b", 0, 2});
    c.arrows.push_back({p + "c", p + "t", ArrowKind::U, 2});
    c.arrows.push_back({p + "t", p + "b", ArrowKind::V, 2});
    c.arrows.push_back({p + "c", p + "e", ArrowKind::V, 2});
    c.arrows.push_back({p + "e", p + "b", ArrowKind::U, 2});
}

/* Passes every numeric gate (epsilon 0, g = 2, Delta''(1) = 0, q* = 1,
   n_0 = 2 n_1) but carries two power-2 figure eights, so the graded
   comparison cannot run: the pipeline must answer Inconclusive {1/1, 2/1}. */
UVZeroComplex exotic_inconclusive() {
    UVZeroComplex c = cfk::synthesize_box_complex(
        true, {{0, 1, 5}, {0, 0, 3}, {1, 0, 3}, {-1, 0, 3}});
    add_thick_box(c, "g0");
    add_thick_box(c, "g1");
    c.name = "exotic_inconclusive";
    cfk::sort_canonical(c);
    return c;
}

UVZeroComplex thin_family(long long n) {
    UVZeroComplex c = cfk::synthesize_box_complex(
        true, {{0, 0, 2 * n}, {1, 0, n}, {-1, 0, n}});
    c.name = "thin_n" + std::to_string(n);
    return c;
}

UVZeroComplex nine_44() {
    UVZeroComplex c = cfk::synthesize_box_complex(true, {{1, 0, 1}, {-1, 0, 1}, {0, 0, 2}});
    c.name = "9_44";
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    write(dir, "unknot", unknot());
    write(dir, "trefoil_rh", trefoil_rh());
    write(dir, "figure8", figure8());
    write(dir, "9_44", nine_44());
    write(dir, "thin_n2", thin_family(2));
    write(dir, "thin_n3", thin_family(3));
    write(dir, "exotic_inconclusive", exotic_inconclusive());
    return 0;
}

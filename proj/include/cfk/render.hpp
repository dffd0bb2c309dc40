#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfk/curve.hpp"
#include "cfk/rational.hpp"
#include "cfk/surgery.hpp"

namespace cfk {

/* Static diagram of a box-class curve profile on the cylinder cut open to
   [0,1] x [-g-1, g+1]: the horizontal distinguished curve, one figure-eight
   path per simple box, pegs at the marked points, and optional surgery-line
   overlays at slope sign*p/q through (1/2, -1/2 + i/q + eps). */
struct DiagramSpec {
    CurveProfile profile;
    std::optional<SlopePair> overlay;
    int overlay_sign = 1;  // +1 or -1
};

using RatPoint = std::pair<Rational, Rational>;

struct DiagramPath {
    std::string id;
    std::vector<RatPoint> points;  // polyline vertices
    bool closed = false;
};

struct Diagram {
    int genus = 0;
    std::vector<DiagramPath> curves;    // gamma0 + figure eights
    std::vector<DiagramPath> overlays;  // surgery line segments
    std::vector<RatPoint> pegs;
};

Diagram build_diagram(const DiagramSpec& spec);

// Deterministic SVG 1.1 document, 100 units per lattice unit.
std::string diagram_svg(const Diagram& d);

inline std::string render_curves(const DiagramSpec& spec) { return diagram_svg(build_diagram(spec)); }

}  // namespace cfk

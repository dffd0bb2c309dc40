/* Static curve diagrams: the horizontal distinguished curve, figure-eight
   paths built from slope-(+-1) and vertical segments only, pegs, and surgery
   line overlays. All geometry is exact; SVG output is deterministic. */

#include "cfk/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cfk/intmath.hpp"

namespace cfk {

namespace {

Rational rat_floor(const Rational& r) { return Rational(floor_div(r.num(), r.den())); }

std::string fmt_coord(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r.to_double());
    return std::string(buf);
}

/* One simple figure eight at height s. tier 0 is innermost; eta spaces tiers.
   Every segment is vertical or has slope exactly +-1, so nested tiers stay
   parallel where they run close. The path crosses the meridian x = 1/2 four
   times: apex (window s+1), two bottom diagonals (window s), loop (s-1). */
DiagramPath figure_eight_path(int s, int d, int tier, int tiers_at_height) {
    Rational half(1, 2);
    Rational s_top = Rational(s) + half;
    Rational s_bot = Rational(s) - half;
    // 448 = 7 * 64 keeps tier offsets incommensurate with the overlay
    // anchors (thirds and q-ths), so lines never pass through vertices
    Rational eta(1, 448LL * tiers_at_height);
    Rational w = Rational(1, 16) + Rational(tier) * eta;
    Rational y_b = s_bot + Rational(1, 8) - Rational(tier) * eta;
    Rational gamma(1, 256);
    Rational y_c = y_b - gamma - gamma;
    Rational depth = Rational(1, 12) - Rational(tier) * eta / Rational(2);
    Rational x1 = (y_b + depth - s_bot) / Rational(2);
    Rational x2 = x1 - gamma;

    DiagramPath path;
    path.id = "fig8-s" + std::to_string(s) + "-d" + std::to_string(d) + "-n" +
              std::to_string(tier);
    path.closed = true;
    path.points = {
        {half, s_top + w},                        // apex, crosses mu in window s+1
        {half - w, s_top},
        {half - w, y_b + w},                      // left vertical segment
        {half, y_b},                              // mu crossing, window s
        {half + x1, y_b - x1},                    // continuing at slope -1
        {half, s_bot - depth},                    // loop bottom, window s-1
        {half - x2, s_bot - depth + x2},
        {half, y_c},                              // mu crossing, window s
        {half + w, y_c + w},                      // continuing at slope +1
        {half + w, s_top},                        // right vertical segment
    };
    return path;
}

}  // namespace

Diagram build_diagram(const DiagramSpec& spec) {
    const CurveProfile& p = spec.profile;
    if (p.epsilon != 0 || !p.box_class || !p.e)
        throw std::domain_error("build_diagram: requires a box-class profile with epsilon = 0");
    if (spec.overlay_sign != 1 && spec.overlay_sign != -1)
        throw std::domain_error("build_diagram: overlay sign must be +1 or -1");

    Diagram d;
    d.genus = p.genus;
    Rational half(1, 2);

    DiagramPath gamma0;
    gamma0.id = "gamma0";
    gamma0.closed = false;  // closes through the cut seam
    gamma0.points = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
    d.curves.push_back(std::move(gamma0));

    // tiers: boxes grouped per height, innermost first, ordered by delta
    std::map<int, long long> tiers_total;
    for (const auto& [sd, count] : *p.e) tiers_total[sd.first] += count;
    std::map<int, int> tier_cursor;
    for (const auto& [sd, count] : *p.e) {
        const auto [s, dgr] = sd;
        for (long long k = 0; k < count; ++k) {
            int tier = tier_cursor[s]++;
            d.curves.push_back(
                figure_eight_path(s, dgr, tier, static_cast<int>(tiers_total[s])));
        }
    }

    for (int k = -p.genus - 1; k <= p.genus; ++k)
        d.pegs.push_back({half, Rational(k) + half});

    if (spec.overlay) {
        const long long lp = spec.overlay->p, lq = spec.overlay->q;
        Rational slope = Rational(spec.overlay_sign * lp, lq);
        Rational ylo = Rational(-(d.genus + 1)), yhi = Rational(d.genus + 1);
        for (long long i = 0; i < lp; ++i) {
            // through (1/2, -1/2 + i/q + eps) with eps = 1/(3q)
            Rational y0 = -half + Rational(i, lq) + Rational(1, 3 * lq);
            Rational xa = half + (ylo - y0) / slope;
            Rational xb = half + (yhi - y0) / slope;
            if (xb < xa) std::swap(xa, xb);
            long long k0 = rat_floor(xa).num();
            long long k1 = rat_floor(xb).num();
            for (long long k = k0; k <= k1; ++k) {
                Rational lo = std::max(xa, Rational(k));
                Rational hi = std::min(xb, Rational(k + 1));
                if (!(lo < hi)) continue;
                DiagramPath seg;
                seg.id = "overlay-i" + std::to_string(i) + "-k" + std::to_string(k - k0);
                seg.points = {{lo - Rational(k), y0 + slope * (lo - half)},
                              {hi - Rational(k), y0 + slope * (hi - half)}};
                d.overlays.push_back(std::move(seg));
            }
        }
    }
    return d;
}

std::string diagram_svg(const Diagram& d) {
    const int height_units = 2 * (d.genus + 1);
    auto sx = [](const Rational& x) { return x * Rational(100); };
    auto sy = [&d](const Rational& y) { return (Rational(d.genus + 1) - y) * Rational(100); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "viewBox=\"0 0 100 " << height_units * 100 << "\" width=\"100\" height=\""
        << height_units * 100 << "\">\n";

    auto emit_path = [&](const DiagramPath& path, const char* stroke, const char* dash) {
        svg << "  <path id=\"" << path.id << "\" fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"1.5\"";
        if (dash) svg << " stroke-dasharray=\"" << dash << "\"";
        svg << " d=\"";
        for (size_t i = 0; i < path.points.size(); ++i) {
            svg << (i == 0 ? "M " : "L ") << fmt_coord(sx(path.points[i].first)) << ","
                << fmt_coord(sy(path.points[i].second)) << " ";
        }
        if (path.closed) svg << "Z";
        svg << "\"/>\n";
    };

    for (const auto& c : d.curves) emit_path(c, "#000000", nullptr);
    for (const auto& o : d.overlays) emit_path(o, "#999999", nullptr);
    int peg_index = 0;
    for (const auto& peg : d.pegs) {
        svg << "  <circle id=\"peg-" << peg_index++ << "\" cx=\"" << fmt_coord(sx(peg.first))
            << "\" cy=\"" << fmt_coord(sy(peg.second)) << "\" r=\"3\" fill=\"#000000\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace cfk

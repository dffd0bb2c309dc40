/* Vertical segment counts via hook subquotients, and the curve profile. */

#include "cfk/curve.hpp"

#include <stdexcept>
#include <string>

#include "cfk/gf2.hpp"

namespace cfk {

namespace {

long long hook_rank_unchecked(const UVZeroComplex& reduced, int s) {
    auto idx = generator_index(reduced);
    int n = static_cast<int>(reduced.generators.size());

    // basis: column copy for A <= s, row copy for A >= s, identified at A = s
    std::vector<int> col(n, -1), row(n, -1);
    int dim = 0;
    for (int i = 0; i < n; ++i) {
        int a = reduced.generators[i].alexander;
        if (a <= s) col[i] = dim++;
        if (a >= s) row[i] = (a == s) ? col[i] : dim++;
    }

    Gf2Matrix d(dim, dim);
    for (const auto& ar : reduced.arrows) {
        int from = idx.at(ar.from), to = idx.at(ar.to);
        int a_src = reduced.generators[from].alexander;
        if (ar.kind == ArrowKind::V && a_src <= s)
            d.flip(col[from], col[to]);  // V lowers A, so the target column exists
        if (ar.kind == ArrowKind::U && a_src >= s)
            d.flip(row[from], row[to]);  // U raises A, so the target row exists
    }
    return static_cast<long long>(dim) - 2 * static_cast<long long>(d.rank());
}

}  // namespace

long long hook_homology_rank(const UVZeroComplex& reduced, int s) {
    Decomposition d = decompose(reduced);
    if (d.staircase.gens.size() != 1)
        throw std::domain_error(
            "hook_homology_rank: requires epsilon = 0 (single-generator staircase)");
    return hook_rank_unchecked(reduced, s);
}

CurveProfile curve_profile(const Decomposition& decomp, const KnotInvariants& inv,
                           const UVZeroComplex& reduced) {
    CurveProfile p;
    p.genus = inv.genus;
    p.thickness = inv.thickness;
    p.tau = inv.tau;
    p.epsilon = inv.epsilon;
    p.m = 2 * inv.tau - inv.epsilon;

    p.box_class = decomp.exotics.empty();
    for (const auto& b : decomp.boxes)
        if (!b.simple) p.box_class = false;

    if (inv.epsilon != 0) return p;  // n and e undefined off the horizontal case

    std::map<int, long long> n;
    for (int s = -inv.genus; s <= inv.genus; ++s) {
        long long rank = hook_rank_unchecked(reduced, s);
        if (rank < 1)
            throw invariant_error("hook rank < 1 at level " + std::to_string(s));
        if (rank > 1) n[s] = rank - 1;
    }
    for (const auto& [s, count] : n) {
        auto it = n.find(-s);
        if (it == n.end() || it->second != count)
            throw invariant_error("vertical segment counts are asymmetric: n_" +
                                  std::to_string(s) + " = " + std::to_string(count) +
                                  " but n_" + std::to_string(-s) + " differs");
    }
    if (inv.genus > 0 && (n.count(inv.genus) || n.count(-inv.genus)))
        throw invariant_error("vertical segments at height |s| >= genus: complex is corrupt");
    p.n = std::move(n);

    if (p.box_class) {
        std::map<std::pair<int, int>, long long> e;
        for (const auto& b : decomp.boxes) e[{b.height, b.delta}] += 1;
        for (const auto& [sd, count] : e) {
            auto it = e.find({-sd.first, sd.second});
            if (it == e.end() || it->second != count)
                throw invariant_error("figure-eight census is asymmetric in height");
        }
        // box-count oracle: each simple figure eight carries two vertical segments
        std::map<int, long long> from_boxes;
        for (const auto& [sd, count] : e) from_boxes[sd.first] += 2 * count;
        std::erase_if(from_boxes, [](const auto& kv) { return kv.second == 0; });
        if (from_boxes != *p.n)
            throw invariant_error("hook ranks disagree with the figure-eight census");
        p.e = std::move(e);
    }
    return p;
}

Rational candidate_q(const CurveProfile& profile) {
    if (profile.epsilon != 0 || !profile.n)
        throw std::domain_error("candidate_q: requires epsilon = 0");
    if (profile.genus <= 1)
        throw std::domain_error("candidate_q: requires genus >= 2");
    long long n0 = 0, lin = 0, quad = 0;
    for (const auto& [s, count] : *profile.n) {
        if (s == 0) n0 = count;
        if (s >= 1) {
            lin += count;
            quad += static_cast<long long>(s) * s * count;
        }
    }
    if (quad == 0) throw std::domain_error("candidate_q: zero denominator");
    return Rational(n0 + 2 * lin, 4 * quad);
}

}  // namespace cfk

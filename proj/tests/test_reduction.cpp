#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cfk/gf2.hpp"
#include "helpers.hpp"

using namespace cfk;

namespace {

/* Independent oracle for the reduction contract: homology of the power-0
   differential, one bigrading at a time. */
std::map<std::pair<int, int>, long long> power0_homology(const UVZeroComplex& c) {
    auto idx = generator_index(c);
    std::map<std::pair<int, int>, std::vector<int>> slots;
    for (int i = 0; i < static_cast<int>(c.generators.size()); ++i)
        slots[{c.generators[i].alexander, c.generators[i].maslov}].push_back(i);

    auto rank_at = [&](int a, int m) -> long long {
        auto src = slots.find({a, m});
        auto dst = slots.find({a, m - 1});
        if (src == slots.end() || dst == slots.end()) return 0;
        std::map<int, int> row, col;
        for (size_t i = 0; i < src->second.size(); ++i) row[src->second[i]] = static_cast<int>(i);
        for (size_t i = 0; i < dst->second.size(); ++i) col[dst->second[i]] = static_cast<int>(i);
        Gf2Matrix mat(src->second.size(), dst->second.size());
        for (const auto& ar : c.arrows) {
            if (ar.power != 0) continue;
            auto r = row.find(idx.at(ar.from));
            auto cc = col.find(idx.at(ar.to));
            if (r != row.end() && cc != col.end()) mat.flip(r->second, cc->second);
        }
        return static_cast<long long>(mat.rank());
    };

    std::map<std::pair<int, int>, long long> h;
    for (const auto& [am, gens] : slots) {
        long long dim = static_cast<long long>(gens.size());
        long long out = rank_at(am.first, am.second);
        long long in = rank_at(am.first, am.second + 1);
        long long hd = dim - out - in;
        if (hd != 0) h[am] = hd;
    }
    return h;
}

std::map<std::pair<int, int>, long long> bigrading_counts(const UVZeroComplex& c) {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& g : c.generators) out[{g.alexander, g.maslov}] += 1;
    return out;
}

// split one V^1 top->sink arrow of a box through a cancelling pair
// (arguments by value: the vectors they may point into get modified)
void blow_up_one_box(UVZeroComplex& c, std::string top, std::string sink, int tag) {
    auto idx = generator_index(c);
    Generator b = c.generators[idx.at(sink)];
    std::string u = "u" + std::to_string(tag), v = "v" + std::to_string(tag);
    c.generators.push_back({u, b.alexander, b.maslov + 1});
    c.generators.push_back({v, b.alexander, b.maslov});
    auto it = std::find_if(c.arrows.begin(), c.arrows.end(), [&](const Arrow& a) {
        return a.from == top && a.to == sink && a.kind == ArrowKind::V && a.power == 1;
    });
    REQUIRE(it != c.arrows.end());
    c.arrows.erase(it);
    c.arrows.push_back({top, v, ArrowKind::V, 1});
    c.arrows.push_back({u, v, ArrowKind::U, 0});
    c.arrows.push_back({u, sink, ArrowKind::U, 0});
}

}  // namespace

TEST_CASE("reduce: already-reduced complex is a fixed point") {
    UVZeroComplex f8 = testutil::figure8();
    UVZeroComplex r = reduce(f8);
    CHECK(serialize_complex(r) == serialize_complex(f8));
    CHECK(serialize_complex(reduce(r)) == serialize_complex(r));  // idempotent
}

TEST_CASE("reduce: a lone cancelling pair vanishes; an isolated generator survives") {
    UVZeroComplex c;
    c.generators = {{"x", 0, 0}, {"y", 0, -1}};
    c.arrows = {{"x", "y", ArrowKind::U, 0}};
    REQUIRE(validate(c).empty());
    CHECK(reduce(c).generators.empty());

    c.generators.push_back({"d", 0, 0});
    UVZeroComplex r = reduce(c);
    REQUIRE(r.generators.size() == 1);
    CHECK(r.generators[0].id == "d");
    CHECK(r.arrows.empty());
}

TEST_CASE("reduce: zig-zag composition w -> x <- y -> z gives w -> z V^3") {
    UVZeroComplex c;
    c.generators = {{"w", 0, 0}, {"x", -1, -1}, {"y", -1, 0}, {"z", -3, -1}};
    c.arrows = {{"w", "x", ArrowKind::V, 1},
                {"y", "x", ArrowKind::U, 0},
                {"y", "z", ArrowKind::V, 2}};
    REQUIRE(validate(c).empty());
    UVZeroComplex r = reduce(c);
    REQUIRE(r.generators.size() == 2);
    CHECK(r.generators[0].id == "w");
    CHECK(r.generators[1].id == "z");
    REQUIRE(r.arrows.size() == 1);
    CHECK(r.arrows[0].from == "w");
    CHECK(r.arrows[0].to == "z");
    CHECK(r.arrows[0].kind == ArrowKind::V);
    CHECK(r.arrows[0].power == 3);
    CHECK(validate(r).empty());
}

TEST_CASE("reduce contract: output counts equal power-0 homology per bigrading") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        UVZeroComplex c = testutil::random_box_complex(rng);
        // blow up the V-arrow of up to three boxes through cancelling pairs
        Decomposition d = decompose(c);
        int tag = 0;
        for (const auto& box : d.boxes) {
            if (tag >= 3) break;
            // box gens sorted; find its top (unique generator with a V-arrow to the sink)
            for (const auto& a : c.arrows) {
                bool in_box = std::find(box.gens.begin(), box.gens.end(), a.from) != box.gens.end();
                if (in_box && a.kind == ArrowKind::V && a.power == 1) {
                    // top->sink is the V-arrow whose source receives U from the box source
                    bool src_is_target_of_u = false;
                    for (const auto& b : c.arrows)
                        if (b.to == a.from && b.kind == ArrowKind::U) src_is_target_of_u = true;
                    if (src_is_target_of_u) {
                        blow_up_one_box(c, a.from, a.to, tag++);
                        break;
                    }
                }
            }
        }
        REQUIRE(validate(c).empty());
        auto expected = power0_homology(c);
        UVZeroComplex r = reduce(c);
        CHECK(validate(r).empty());
        for (const auto& a : r.arrows) CHECK(a.power >= 1);
        CHECK(bigrading_counts(r) == expected);
    }
}

TEST_CASE("reduce output does not depend on input ordering") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        UVZeroComplex c = testutil::random_box_complex(rng);
        Decomposition d = decompose(c);
        int tag = 0;
        for (const auto& box : d.boxes) {
            if (tag >= 2) break;
            for (const auto& a : c.arrows) {
                bool in_box = std::find(box.gens.begin(), box.gens.end(), a.from) != box.gens.end();
                if (in_box && a.kind == ArrowKind::V && a.power == 1) {
                    bool src_is_target_of_u = false;
                    for (const auto& b : c.arrows)
                        if (b.to == a.from && b.kind == ArrowKind::U) src_is_target_of_u = true;
                    if (src_is_target_of_u) {
                        blow_up_one_box(c, a.from, a.to, tag++);
                        break;
                    }
                }
            }
        }
        std::string canonical = serialize_complex(reduce(c));
        UVZeroComplex shuffled = c;
        std::shuffle(shuffled.generators.begin(), shuffled.generators.end(), rng);
        std::shuffle(shuffled.arrows.begin(), shuffled.arrows.end(), rng);
        CHECK(serialize_complex(reduce(shuffled)) == canonical);
    }
}

TEST_CASE("decompose: figure eight = trivial staircase + one simple box at (0,0)") {
    Decomposition d = decompose(testutil::figure8());
    CHECK(d.staircase.gens == std::vector<std::string>{"d"});
    REQUIRE(d.boxes.size() == 1);
    CHECK(d.boxes[0].height == 0);
    CHECK(d.boxes[0].delta == 0);
    CHECK(d.boxes[0].simple);
    CHECK(d.exotics.empty());
}

TEST_CASE("decompose: right-handed trefoil is one length-3 staircase") {
    Decomposition d = decompose(testutil::trefoil_rh());
    CHECK(d.staircase.gens.size() == 3);
    CHECK(d.boxes.empty());
    CHECK(d.exotics.empty());
    // walk starts at the higher-A endpoint
    CHECK(d.staircase.gens == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("decompose: 9_44 = trivial staircase + boxes at heights 1, 0, 0, -1") {
    Decomposition d = decompose(testutil::fixture("9_44"));
    CHECK(d.staircase.gens.size() == 1);
    REQUIRE(d.boxes.size() == 4);
    std::multiset<int> heights;
    for (const auto& b : d.boxes) {
        heights.insert(b.height);
        CHECK(b.delta == 0);
        CHECK(b.simple);
    }
    CHECK(heights == std::multiset<int>{-1, 0, 0, 1});
}

TEST_CASE("decompose errors on corrupt vertical homology") {
    // two isolated generators: two non-acyclic components
    UVZeroComplex c;
    c.generators = {{"x", 0, 0}, {"y", 0, 0}};
    CHECK_THROWS_AS(decompose(c), invariant_error);

    // single-generator staircase away from (0,0)
    UVZeroComplex c2;
    c2.generators = {{"x", 1, 1}};
    CHECK_THROWS_AS(decompose(c2), invariant_error);
}

TEST_CASE("knot invariants: figure eight") {
    UVZeroComplex c = testutil::figure8();
    Decomposition d = decompose(c);
    KnotInvariants inv = knot_invariants(d, c);
    CHECK(inv.genus == 1);
    CHECK(inv.thickness == 0);
    CHECK(inv.tau == 0);
    CHECK(inv.epsilon == 0);
    CHECK(inv.alexander.coeff_span() == std::vector<long long>{-1, 3, -1});
    CHECK(inv.alex_dd1 == -2);
}

TEST_CASE("knot invariants: right-handed trefoil") {
    UVZeroComplex c = testutil::trefoil_rh();
    Decomposition d = decompose(c);
    KnotInvariants inv = knot_invariants(d, c);
    CHECK(inv.tau == 1);
    CHECK(inv.epsilon == 1);
    CHECK(inv.genus == 1);
    CHECK(inv.alexander.coeff_span() == std::vector<long long>{1, -1, 1});
}

TEST_CASE("knot invariants: left-handed trefoil has tau = epsilon = -1") {
    // pivot a sits at (A, M) = (-1, 0) and sources the U-arrow
    UVZeroComplex c;
    c.generators = {{"a", -1, 0}, {"b", 0, 1}, {"c", 1, 2}};
    c.arrows = {{"a", "b", ArrowKind::U, 1}, {"c", "b", ArrowKind::V, 1}};
    REQUIRE(validate(c).empty());
    Decomposition d = decompose(c);
    KnotInvariants inv = knot_invariants(d, c);
    CHECK(inv.tau == -1);
    CHECK(inv.epsilon == -1);
}

TEST_CASE("knot invariants: 9_44") {
    UVZeroComplex c = testutil::fixture("9_44");
    Decomposition d = decompose(c);
    KnotInvariants inv = knot_invariants(d, c);
    CHECK(inv.genus == 2);
    CHECK(inv.thickness == 0);
    CHECK(inv.tau == 0);
    CHECK(inv.epsilon == 0);
    CHECK(inv.alexander.coeff_span() == std::vector<long long>{1, -4, 7, -4, 1});
    CHECK(inv.alex_dd1 == 0);
}

TEST_CASE("HFK symmetry: rank(A, M) = rank(-A, M - 2A) on fixtures and samples") {
    std::mt19937_64 rng(23);
    std::vector<UVZeroComplex> cases = {testutil::figure8(), testutil::fixture("9_44"),
                                        testutil::fixture("thin_n2"),
                                        testutil::fixture("exotic_inconclusive")};
    for (int i = 0; i < 20; ++i) cases.push_back(testutil::random_box_complex(rng));
    for (const auto& c : cases) {
        Decomposition d = decompose(c);
        KnotInvariants inv = knot_invariants(d, c);
        for (const auto& [am, rank] : inv.hfk) {
            auto mirror = inv.hfk.find({-am.first, am.second - 2 * am.first});
            REQUIRE(mirror != inv.hfk.end());
            CHECK(mirror->second == rank);
        }
        CHECK(inv.alexander.eval_one() == 1);
        CHECK(inv.alexander.symmetric());
    }
}

TEST_CASE("per-box Euler contribution: alex_dd1 = -2 * sum of (-1)^(s-d)") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto census = testutil::random_census(rng);
        UVZeroComplex c = synthesize_box_complex(true, census);
        Decomposition d = decompose(c);
        KnotInvariants inv = knot_invariants(d, c);
        long long expected = 0;
        for (const auto& b : d.boxes)
            expected += ((b.height - b.delta) % 2 == 0) ? 1 : -1;
        CHECK(inv.alex_dd1 == -2 * expected);
    }
}

TEST_CASE("decompose is invariant under relabeling and arrow reordering") {
    UVZeroComplex c = testutil::fixture("9_44");
    UVZeroComplex shuffled = c;
    // rename f3.. to z.. and reverse the arrow list
    for (auto& g : shuffled.generators)
        if (g.id[0] == 'f') g.id = "z" + g.id.substr(1);
    for (auto& a : shuffled.arrows) {
        if (a.from[0] == 'f') a.from = "z" + a.from.substr(1);
        if (a.to[0] == 'f') a.to = "z" + a.to.substr(1);
    }
    std::reverse(shuffled.arrows.begin(), shuffled.arrows.end());
    std::reverse(shuffled.generators.begin(), shuffled.generators.end());
    Decomposition d1 = decompose(c), d2 = decompose(shuffled);
    auto census = [](const Decomposition& d) {
        std::multiset<std::pair<int, int>> out;
        for (const auto& b : d.boxes) out.insert({b.height, b.delta});
        return out;
    };
    CHECK(census(d1) == census(d2));
    CHECK(d1.staircase.gens.size() == d2.staircase.gens.size());
}

TEST_CASE("staircase pivot does not depend on traversal order (length <= 7)") {
    // staircases tau = 2, epsilon = 1: a1 <-U b1 ->V a2 <-U b2 ->V a3
    UVZeroComplex c;
    c.generators = {{"a1", 2, 0}, {"b1", 1, -1}, {"a2", 0, -2}, {"b2", -1, -3}, {"a3", -2, -4}};
    c.arrows = {{"b1", "a1", ArrowKind::U, 1},
                {"b1", "a2", ArrowKind::V, 1},
                {"b2", "a2", ArrowKind::U, 1},
                {"b2", "a3", ArrowKind::V, 1}};
    REQUIRE(validate(c).empty());
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 24; ++trial) {
        UVZeroComplex p = c;
        std::shuffle(p.generators.begin(), p.generators.end(), rng);
        std::shuffle(p.arrows.begin(), p.arrows.end(), rng);
        Decomposition d = decompose(p);
        KnotInvariants inv = knot_invariants(d, p);
        CHECK(inv.tau == 2);
        CHECK(inv.epsilon == 1);
    }
}

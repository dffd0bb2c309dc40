/* Gaussian cancellation, summand decomposition, and the classical invariants. */

#include "cfk/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "cfk/gf2.hpp"

namespace cfk {

long long LaurentPoly::eval_one() const {
    long long s = 0;
    for (const auto& [e, a] : coeff) s += a;
    return s;
}

long long LaurentPoly::second_derivative_one() const {
    long long s = 0;
    for (const auto& [e, a] : coeff) s += a * static_cast<long long>(e) * (e - 1);
    return s;
}

bool LaurentPoly::symmetric() const {
    for (const auto& [e, a] : coeff)
        if (at(-e) != a) return false;
    return true;
}

int LaurentPoly::span() const {
    int s = 0;
    for (const auto& [e, a] : coeff) s = std::max(s, std::abs(e));
    return s;
}

std::vector<long long> LaurentPoly::coeff_span() const {
    int s = span();
    std::vector<long long> out;
    out.reserve(2 * s + 1);
    for (int e = -s; e <= s; ++e) out.push_back(at(e));
    return out;
}

std::string LaurentPoly::str() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
        auto [e, a] = *it;
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        long long mag = a > 0 ? a : -a;
        if (mag != 1 || e == 0) os << mag;
        if (e != 0) {
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

// power-0 arrows are coefficient 1 regardless of nominal kind; normalize to U
// so cancellation toggles land on one key.
struct ArrowKey {
    std::string from, to;
    int kind;  // 0 = U, 1 = V
    int power;
    auto operator<=>(const ArrowKey&) const = default;
};

ArrowKey key_of(const Arrow& a) {
    int kind = (a.power == 0) ? 0 : (a.kind == ArrowKind::U ? 0 : 1);
    return {a.from, a.to, kind, a.power};
}

// U^p * K^q composition; nullopt when the product is UV-divisible.
std::optional<std::pair<int, int>> compose(int kind1, int p1, int kind2, int p2) {
    if (p1 == 0) return std::make_pair(p2 == 0 ? 0 : kind2, p1 + p2);
    if (p2 == 0) return std::make_pair(kind1, p1 + p2);
    if (kind1 != kind2) return std::nullopt;
    return std::make_pair(kind1, p1 + p2);
}

}  // namespace

UVZeroComplex reduce(const UVZeroComplex& c) {
    std::set<std::string> alive;
    for (const auto& g : c.generators) alive.insert(g.id);

    std::set<ArrowKey> arrows;
    for (const auto& a : c.arrows) arrows.insert(key_of(a));

    auto toggle = [&arrows](const ArrowKey& k) {
        auto it = arrows.find(k);
        if (it != arrows.end()) arrows.erase(it);
        else arrows.insert(k);
    };

    for (;;) {
        // first power-0 arrow in sorted order
        const ArrowKey* pivot = nullptr;
        for (const auto& k : arrows) {
            if (k.power == 0) { pivot = &k; break; }
        }
        if (!pivot) break;
        std::string x = pivot->from, y = pivot->to;

        std::vector<ArrowKey> into_y, out_of_x, drop;
        for (const auto& k : arrows) {
            bool touches = (k.from == x || k.to == x || k.from == y || k.to == y);
            if (touches) drop.push_back(k);
            if (k.to == y && k.from != x) into_y.push_back(k);
            if (k.from == x && k.to != y) out_of_x.push_back(k);
        }
        for (const auto& k : drop) arrows.erase(k);
        for (const auto& a : into_y) {
            for (const auto& b : out_of_x) {
                auto m = compose(a.kind, a.power, b.kind, b.power);
                if (!m) continue;
                if (a.from == b.to)
                    throw invariant_error("reduce: cancellation produced a self-arrow at '" +
                                          a.from + "' (complex is not a valid chain complex)");
                toggle({a.from, b.to, m->first, m->second});
            }
        }
        alive.erase(x);
        alive.erase(y);
    }

    UVZeroComplex out;
    out.name = c.name;
    for (const auto& g : c.generators)
        if (alive.count(g.id)) out.generators.push_back(g);
    for (const auto& k : arrows)
        out.arrows.push_back({k.from, k.to, k.kind == 0 ? ArrowKind::U : ArrowKind::V, k.power});
    sort_canonical(out);
    return out;
}

namespace {

struct ComponentView {
    std::vector<int> gens;            // indices into complex.generators
    std::vector<const Arrow*> arrows; // arrows inside the component
};

std::vector<ComponentView> components(const UVZeroComplex& c,
                                      const std::unordered_map<std::string, int>& idx) {
    int n = static_cast<int>(c.generators.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& a : c.arrows) {
        int u = find(idx.at(a.from)), v = find(idx.at(a.to));
        if (u != v) parent[u] = v;
    }
    std::map<int, ComponentView> by_root;
    for (int i = 0; i < n; ++i) by_root[find(i)].gens.push_back(i);
    for (const auto& a : c.arrows) by_root[find(idx.at(a.from))].arrows.push_back(&a);
    std::vector<ComponentView> out;
    out.reserve(by_root.size());
    for (auto& [root, cv] : by_root) out.push_back(std::move(cv));
    return out;
}

long long vertical_homology_rank(const UVZeroComplex& c, const ComponentView& cv) {
    std::map<int, int> local;
    for (size_t i = 0; i < cv.gens.size(); ++i) local[cv.gens[i]] = static_cast<int>(i);
    Gf2Matrix m(cv.gens.size(), cv.gens.size());
    auto idx = generator_index(c);
    for (const Arrow* a : cv.arrows) {
        if (a->kind != ArrowKind::V || a->power < 1) continue;
        m.flip(local.at(idx.at(a->from)), local.at(idx.at(a->to)));
    }
    return static_cast<long long>(cv.gens.size()) - 2 * static_cast<long long>(m.rank());
}

// The 4-generator figure-eight pattern: source c, sink b, c ->U t ->V b and
// c ->V e ->U b. Returns false when the component is shaped differently.
bool classify_box(const UVZeroComplex& c, const std::unordered_map<std::string, int>& idx,
                  const ComponentView& cv, Summand& out) {
    if (cv.gens.size() != 4 || cv.arrows.size() != 4) return false;
    std::map<std::string, std::vector<const Arrow*>> outs, ins;
    for (const Arrow* a : cv.arrows) {
        outs[a->from].push_back(a);
        ins[a->to].push_back(a);
    }
    std::string source, sink;
    for (int gi : cv.gens) {
        const std::string& id = c.generators[gi].id;
        if (outs[id].size() == 2 && ins[id].empty()) source = id;
        if (ins[id].size() == 2 && outs[id].empty()) sink = id;
    }
    if (source.empty() || sink.empty() || source == sink) return false;
    const Arrow *cu = nullptr, *cv_ = nullptr;
    for (const Arrow* a : outs[source]) {
        if (a->kind == ArrowKind::U) cu = a;
        else cv_ = a;
    }
    if (!cu || !cv_) return false;
    const std::string& top = cu->to;
    const std::string& bottom = cv_->to;
    if (top == sink || bottom == sink || top == bottom) return false;
    // top must send V to sink, bottom must send U to sink
    const Arrow *tv = nullptr, *eu = nullptr;
    for (const Arrow* a : outs[top])
        if (a->kind == ArrowKind::V && a->to == sink) tv = a;
    for (const Arrow* a : outs[bottom])
        if (a->kind == ArrowKind::U && a->to == sink) eu = a;
    if (!tv || !eu) return false;
    if (outs[top].size() != 1 || outs[bottom].size() != 1) return false;

    const Generator& src = c.generators[idx.at(source)];
    out.variant = Summand::Variant::Box;
    out.gens.clear();
    for (int gi : cv.gens) out.gens.push_back(c.generators[gi].id);
    std::sort(out.gens.begin(), out.gens.end());
    out.height = src.alexander;
    out.delta = src.alexander - src.maslov;
    out.simple = cu->power == 1 && cv_->power == 1 && tv->power == 1 && eu->power == 1;
    return true;
}

Summand classify_staircase(const UVZeroComplex& c, const std::unordered_map<std::string, int>& idx,
                           const ComponentView& cv) {
    Summand s;
    s.variant = Summand::Variant::Staircase;
    if (cv.gens.size() % 2 == 0)
        throw invariant_error("staircase component has an even number of generators");

    // V-arrows must form a matching covering all generators but one
    std::set<std::string> v_touched;
    for (const Arrow* a : cv.arrows) {
        if (a->kind != ArrowKind::V) continue;
        if (!v_touched.insert(a->from).second || !v_touched.insert(a->to).second)
            throw invariant_error("staircase V-arrows do not form a matching");
    }
    if (v_touched.size() + 1 != cv.gens.size())
        throw invariant_error("staircase V-matching leaves " +
                              std::to_string(cv.gens.size() - v_touched.size()) +
                              " generators unmatched (expected 1)");

    // zigzag = path graph: degrees <= 2, two endpoints (or a single generator)
    std::map<std::string, std::vector<std::string>> adj;
    for (int gi : cv.gens) adj[c.generators[gi].id];
    for (const Arrow* a : cv.arrows) {
        adj[a->from].push_back(a->to);
        adj[a->to].push_back(a->from);
    }
    std::vector<std::string> endpoints;
    for (const auto& [id, nb] : adj) {
        if (nb.size() > 2) throw invariant_error("staircase component is not a zigzag path");
        if (nb.size() <= 1) endpoints.push_back(id);
    }
    if (cv.gens.size() == 1) {
        s.gens = {c.generators[cv.gens[0]].id};
        const Generator& g = c.generators[cv.gens[0]];
        if (g.alexander != 0 || g.maslov != 0)
            throw invariant_error("single-generator staircase must sit at (A,M) = (0,0), got (" +
                                  std::to_string(g.alexander) + "," + std::to_string(g.maslov) +
                                  ")");
        return s;
    }
    if (endpoints.size() != 2)
        throw invariant_error("staircase component is not a zigzag path");
    auto grading = [&](const std::string& id) {
        const Generator& g = c.generators[idx.at(id)];
        return std::make_pair(-g.alexander, id);  // prefer larger A, then smaller id
    };
    std::string start = std::min(endpoints[0], endpoints[1],
                                 [&](const std::string& a, const std::string& b) {
                                     return grading(a) < grading(b);
                                 });
    std::string prev, cur = start;
    s.gens.clear();
    while (true) {
        s.gens.push_back(cur);
        std::string next;
        for (const auto& nb : adj[cur])
            if (nb != prev) { next = nb; break; }
        if (next.empty()) break;
        prev = cur;
        cur = next;
    }
    if (s.gens.size() != cv.gens.size())
        throw invariant_error("staircase walk did not cover the component");
    return s;
}

}  // namespace

Decomposition decompose(const UVZeroComplex& reduced) {
    for (const auto& a : reduced.arrows)
        if (a.power < 1) throw std::invalid_argument("decompose: complex is not reduced");

    auto idx = generator_index(reduced);
    auto comps = components(reduced, idx);
    if (comps.empty()) throw invariant_error("decompose: empty complex has no staircase");

    Decomposition d;
    bool have_staircase = false;
    for (const auto& cv : comps) {
        long long vrank = vertical_homology_rank(reduced, cv);
        if (vrank != 0) {
            if (have_staircase)
                throw invariant_error(
                    "multiple non-acyclic components (vertical homology must have rank 1)");
            if (vrank != 1)
                throw invariant_error("non-acyclic component has vertical homology rank " +
                                      std::to_string(vrank) + " (expected 1)");
            d.staircase = classify_staircase(reduced, idx, cv);
            have_staircase = true;
            continue;
        }
        Summand s;
        if (classify_box(reduced, idx, cv, s)) {
            d.boxes.push_back(std::move(s));
        } else {
            s.variant = Summand::Variant::Exotic;
            s.gens.clear();
            for (int gi : cv.gens) s.gens.push_back(reduced.generators[gi].id);
            std::sort(s.gens.begin(), s.gens.end());
            d.exotics.push_back(std::move(s));
        }
    }
    if (!have_staircase)
        throw invariant_error("zero non-acyclic components (vertical homology must have rank 1)");

    auto by_gens = [](const Summand& a, const Summand& b) { return a.gens < b.gens; };
    std::sort(d.boxes.begin(), d.boxes.end(), by_gens);
    std::sort(d.exotics.begin(), d.exotics.end(), by_gens);
    return d;
}

KnotInvariants knot_invariants(const Decomposition& decomp, const UVZeroComplex& reduced) {
    auto idx = generator_index(reduced);
    KnotInvariants inv;

    int max_a = 0, max_delta = 0, min_delta = 0;
    bool first = true;
    for (const auto& g : reduced.generators) {
        int delta = g.alexander - g.maslov;
        if (first) {
            max_a = g.alexander;
            max_delta = min_delta = delta;
            first = false;
        } else {
            max_a = std::max(max_a, g.alexander);
            max_delta = std::max(max_delta, delta);
            min_delta = std::min(min_delta, delta);
        }
        inv.hfk[{g.alexander, g.maslov}] += 1;
        inv.alexander.coeff[g.alexander] += (g.maslov % 2 == 0) ? 1 : -1;
    }
    std::erase_if(inv.alexander.coeff, [](const auto& kv) { return kv.second == 0; });
    if (max_a < 0) throw invariant_error("genus would be negative: complex is corrupt");
    inv.genus = max_a;
    inv.thickness = max_delta - min_delta;

    // tau and epsilon from the staircase: the V-unmatched generator and its
    // role (target / source / untouched) in the staircase's U-arrows
    std::set<std::string> stair(decomp.staircase.gens.begin(), decomp.staircase.gens.end());
    std::set<std::string> v_matched;
    for (const auto& a : reduced.arrows) {
        if (a.kind != ArrowKind::V || !stair.count(a.from)) continue;
        v_matched.insert(a.from);
        v_matched.insert(a.to);
    }
    std::vector<std::string> unmatched;
    for (const auto& id : decomp.staircase.gens)
        if (!v_matched.count(id)) unmatched.push_back(id);
    if (unmatched.size() != 1)
        throw invariant_error("staircase V-matching leaves " + std::to_string(unmatched.size()) +
                              " generators unmatched (expected 1)");
    const std::string& pivot = unmatched[0];
    inv.tau = reduced.generators[idx.at(pivot)].alexander;

    bool u_in = false, u_out = false;
    for (const auto& a : reduced.arrows) {
        if (a.kind != ArrowKind::U || !stair.count(a.from)) continue;
        if (a.to == pivot) u_in = true;
        if (a.from == pivot) u_out = true;
    }
    if (u_in && u_out)
        throw invariant_error("staircase pivot is both source and target of U-arrows");
    inv.epsilon = u_in ? 1 : (u_out ? -1 : 0);

    inv.alex_dd1 = inv.alexander.second_derivative_one();
    if (inv.alexander.eval_one() != 1)
        throw invariant_error("Alexander polynomial fails Delta(1) = 1 (got " +
                              std::to_string(inv.alexander.eval_one()) +
                              "); Maslov normalization is corrupt");
    if (!inv.alexander.symmetric())
        throw invariant_error("Alexander polynomial is not symmetric under t <-> 1/t");
    return inv;
}

}  // namespace cfk

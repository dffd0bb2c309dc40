/* Input format, canonical serialization, and structural/homological checks. */

#include "cfk/complex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace cfk {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

int require_int(const json& j, const char* field, const char* where) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw parse_error(std::string(where) + ": missing or non-integer field '" + field + "'");
    long long v = j[field].get<long long>();
    if (v < -1000000000LL || v > 1000000000LL)
        throw parse_error(std::string(where) + ": field '" + field + "' out of range");
    return static_cast<int>(v);
}

std::string require_string(const json& j, const char* field, const char* where) {
    if (!j.contains(field) || !j[field].is_string())
        throw parse_error(std::string(where) + ": missing or non-string field '" + field + "'");
    return j[field].get<std::string>();
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) { ok = true; break; }
        if (!ok)
            throw parse_error(std::string(where) + ": unknown field '" + it.key() + "'");
    }
}

bool arrow_less(const Arrow& a, const Arrow& b) {
    return std::tie(a.from, a.to, a.kind, a.power) < std::tie(b.from, b.to, b.kind, b.power);
}

}  // namespace

UVZeroComplex parse_complex(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object())
        throw parse_error("malformed document: top level must be an object");
    reject_unknown_keys(doc, {"name", "generators", "arrows"}, "document");
    if (!doc.contains("generators") || !doc["generators"].is_array())
        throw parse_error("malformed document: 'generators' array required");
    if (!doc.contains("arrows") || !doc["arrows"].is_array())
        throw parse_error("malformed document: 'arrows' array required");

    UVZeroComplex c;
    c.name = doc.contains("name") ? require_string(doc, "name", "document") : "";

    std::set<std::string> seen;
    for (const auto& g : doc["generators"]) {
        if (!g.is_object()) throw parse_error("generator entries must be objects");
        reject_unknown_keys(g, {"id", "alexander", "maslov"}, "generator");
        Generator gen;
        gen.id = require_string(g, "id", "generator");
        if (gen.id.empty()) throw parse_error("generator id must be nonempty");
        gen.alexander = require_int(g, "alexander", "generator");
        gen.maslov = require_int(g, "maslov", "generator");
        if (!seen.insert(gen.id).second)
            throw parse_error("duplicate generator id '" + gen.id + "'");
        c.generators.push_back(std::move(gen));
    }

    std::set<std::tuple<std::string, std::string, ArrowKind, int>> arrow_keys;
    for (const auto& a : doc["arrows"]) {
        if (!a.is_object()) throw parse_error("arrow entries must be objects");
        reject_unknown_keys(a, {"from", "to", "kind", "power"}, "arrow");
        Arrow ar;
        ar.from = require_string(a, "from", "arrow");
        ar.to = require_string(a, "to", "arrow");
        std::string kind = require_string(a, "kind", "arrow");
        if (kind == "U") ar.kind = ArrowKind::U;
        else if (kind == "V") ar.kind = ArrowKind::V;
        else throw parse_error("arrow kind must be \"U\" or \"V\", got '" + kind + "'");
        ar.power = require_int(a, "power", "arrow");
        if (ar.power < 0) throw parse_error("negative power on arrow " + ar.from + " -> " + ar.to);
        if (!seen.count(ar.from))
            throw parse_error("arrow references unknown generator '" + ar.from + "'");
        if (!seen.count(ar.to))
            throw parse_error("arrow references unknown generator '" + ar.to + "'");
        if (!arrow_keys.insert({ar.from, ar.to, ar.kind, ar.power}).second)
            throw parse_error("duplicate arrow " + ar.from + " -> " + ar.to);
        c.arrows.push_back(std::move(ar));
    }
    return c;
}

void sort_canonical(UVZeroComplex& c) {
    std::sort(c.generators.begin(), c.generators.end(),
              [](const Generator& a, const Generator& b) { return a.id < b.id; });
    std::sort(c.arrows.begin(), c.arrows.end(), arrow_less);
}

std::string serialize_complex(const UVZeroComplex& c) {
    UVZeroComplex s = c;
    sort_canonical(s);
    ordered_json doc;
    doc["name"] = s.name;
    doc["generators"] = ordered_json::array();
    for (const auto& g : s.generators) {
        ordered_json jg;
        jg["id"] = g.id;
        jg["alexander"] = g.alexander;
        jg["maslov"] = g.maslov;
        doc["generators"].push_back(std::move(jg));
    }
    doc["arrows"] = ordered_json::array();
    for (const auto& a : s.arrows) {
        ordered_json ja;
        ja["from"] = a.from;
        ja["to"] = a.to;
        ja["kind"] = kind_name(a.kind);
        ja["power"] = a.power;
        doc["arrows"].push_back(std::move(ja));
    }
    return doc.dump(2) + "\n";
}

UVZeroComplex load_complex_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    UVZeroComplex c = parse_complex(buf.str());
    if (c.name.empty()) c.name = path;
    return c;
}

std::unordered_map<std::string, int> generator_index(const UVZeroComplex& c) {
    std::unordered_map<std::string, int> idx;
    idx.reserve(c.generators.size());
    for (int i = 0; i < static_cast<int>(c.generators.size()); ++i)
        idx.emplace(c.generators[i].id, i);
    return idx;
}

namespace {

/* Monomial coefficient of an arrow or a composition: Unit is the scalar 1
   (power 0), Zero is the UV-killed product. */
struct Monomial {
    enum class Tag { Unit, U, V, Zero };
    Tag tag = Tag::Unit;
    int power = 0;
};

Monomial arrow_monomial(const Arrow& a) {
    if (a.power == 0) return {Monomial::Tag::Unit, 0};
    return {a.kind == ArrowKind::U ? Monomial::Tag::U : Monomial::Tag::V, a.power};
}

Monomial mul(const Monomial& a, const Monomial& b) {
    using T = Monomial::Tag;
    if (a.tag == T::Zero || b.tag == T::Zero) return {T::Zero, 0};
    if (a.tag == T::Unit) return b;
    if (b.tag == T::Unit) return a;
    if (a.tag != b.tag) return {T::Zero, 0};
    return {a.tag, a.power + b.power};
}

std::string monomial_str(const Monomial& m) {
    switch (m.tag) {
        case Monomial::Tag::Unit: return "1";
        case Monomial::Tag::U: return "U^" + std::to_string(m.power);
        case Monomial::Tag::V: return "V^" + std::to_string(m.power);
        default: return "0";
    }
}

}  // namespace

std::vector<Violation> validate(const UVZeroComplex& c) {
    auto idx = generator_index(c);
    std::vector<Violation> out;

    for (const auto& a : c.arrows) {
        auto fi = idx.find(a.from), ti = idx.find(a.to);
        if (fi == idx.end() || ti == idx.end())
            throw std::invalid_argument("validate: arrow endpoint not present");
        const Generator& src = c.generators[fi->second];
        const Generator& dst = c.generators[ti->second];
        int want_a, want_m;
        if (a.power == 0) {
            want_a = src.alexander;
            want_m = src.maslov - 1;
        } else if (a.kind == ArrowKind::U) {
            want_a = src.alexander + a.power;
            want_m = src.maslov - 1 + 2 * a.power;
        } else {
            want_a = src.alexander - a.power;
            want_m = src.maslov - 1;
        }
        if (dst.alexander != want_a || dst.maslov != want_m) {
            std::ostringstream msg;
            msg << "grading law violated by arrow " << a.from << " -> " << a.to << " "
                << kind_name(a.kind) << "^" << a.power << ": expected (A,M) = (" << want_a << ","
                << want_m << "), generator " << a.to << " has (" << dst.alexander << ","
                << dst.maslov << ")";
            out.push_back({Violation::Kind::GradingLaw, msg.str()});
        }
    }

    // d^2 parity per (src, dst, monomial); mixed U/V products vanish.
    std::map<std::string, std::vector<const Arrow*>> by_src;
    for (const auto& a : c.arrows) by_src[a.from].push_back(&a);

    std::map<std::tuple<std::string, std::string, int, int>, int> parity;
    for (const auto& a : c.arrows) {
        auto mid = by_src.find(a.to);
        if (mid == by_src.end()) continue;
        for (const Arrow* b : mid->second) {
            Monomial m = mul(arrow_monomial(a), arrow_monomial(*b));
            if (m.tag == Monomial::Tag::Zero) continue;
            parity[{a.from, b->to, static_cast<int>(m.tag), m.power}] ^= 1;
        }
    }
    for (const auto& [key, odd] : parity) {
        if (!odd) continue;
        const auto& [from, to, tag, power] = key;
        Monomial m{static_cast<Monomial::Tag>(tag), power};
        std::ostringstream msg;
        msg << "d^2 != 0: odd number of two-arrow paths " << from << " -> " << to
            << " with coefficient " << monomial_str(m);
        out.push_back({Violation::Kind::DSquared, msg.str()});
    }
    return out;
}

}  // namespace cfk

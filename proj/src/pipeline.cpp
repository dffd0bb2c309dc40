/* The slope-obstruction decision procedure, fixture synthesis, batch funnel,
   and the machine-readable report forms. */

#include "cfk/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cfk {

const char* gate_name(GateName g) {
    switch (g) {
        case GateName::EpsilonNonzero: return "EpsilonNonzero";
        case GateName::GenusOne: return "GenusOne";
        case GateName::BoyerLines: return "BoyerLines";
        case GateName::QNotPositiveInteger: return "QNotPositiveInteger";
        case GateName::ThicknessBound: return "ThicknessBound";
        case GateName::SlopeTwoCondition: return "SlopeTwoCondition";
        case GateName::FigureEightBalance: return "FigureEightBalance";
        case GateName::GradedMismatch: return "GradedMismatch";
    }
    return "?";
}

const char* verdict_name(VerdictKind v) {
    switch (v) {
        case VerdictKind::TrivialKnot: return "TrivialKnot";
        case VerdictKind::NoCosmetic: return "NoCosmetic";
        case VerdictKind::HFIndistinguishable: return "HFIndistinguishable";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

std::string slope_str(const SlopePair& s) {
    return std::to_string(s.p) + "/" + std::to_string(s.q);
}

long long n_at(const CurveProfile& p, int s) {
    if (!p.n) return 0;
    auto it = p.n->find(s);
    return it == p.n->end() ? 0 : it->second;
}

}  // namespace

Verdict check_knot(const UVZeroComplex& c) {
    auto violations = validate(c);
    if (!violations.empty()) throw validation_failure(std::move(violations));

    Verdict v;
    UVZeroComplex reduced = reduce(c);
    Decomposition decomp = decompose(reduced);
    KnotInvariants inv = knot_invariants(decomp, reduced);
    CurveProfile profile = curve_profile(decomp, inv, reduced);
    v.invariants = inv;
    v.profile = profile;

    if (reduced.generators.size() == 1) {
        v.kind = VerdictKind::TrivialKnot;
        return v;
    }

    {
        std::ostringstream d;
        d << "epsilon = " << inv.epsilon << ", tau = " << inv.tau;
        v.gates.push_back({GateName::EpsilonNonzero, inv.epsilon == 0, d.str()});
    }
    if (!v.gates.back().passed) {
        v.kind = VerdictKind::NoCosmetic;
        return v;
    }

    {
        std::ostringstream d;
        d << "g = " << inv.genus;
        v.gates.push_back({GateName::GenusOne, inv.genus >= 2, d.str()});
    }
    if (!v.gates.back().passed) {
        v.kind = VerdictKind::NoCosmetic;
        return v;
    }

    {
        std::ostringstream d;
        d << "Delta''(1) = " << inv.alex_dd1;
        v.gates.push_back({GateName::BoyerLines, inv.alex_dd1 == 0, d.str()});
    }
    if (!v.gates.back().passed) {
        v.kind = VerdictKind::NoCosmetic;
        return v;
    }

    Rational q_star = candidate_q(profile);
    v.q_star = q_star;

    bool q_ok = q_star.is_positive_integer();
    {
        std::ostringstream d;
        d << "q* = " << q_star.str();
        v.gates.push_back({GateName::QNotPositiveInteger, q_ok, d.str()});
    }

    bool th_ok = false;
    if (q_ok) {
        Rational bound(inv.thickness + 2 * inv.genus,
                       2LL * inv.genus * (inv.genus - 1));
        th_ok = q_star <= bound;
        std::ostringstream d;
        d << "q* = " << q_star.str() << " vs (th + 2g)/(2g(g-1)) = " << bound.str()
          << " with th = " << inv.thickness << ", g = " << inv.genus;
        v.gates.push_back({GateName::ThicknessBound, th_ok, d.str()});
    }

    long long n0 = n_at(profile, 0), n1 = n_at(profile, 1);
    bool s2_ok = inv.genus == 2 && n0 == 2 * n1;
    {
        std::ostringstream d;
        d << "g = " << inv.genus << ", n_0 = " << n0 << ", 2*n_1 = " << 2 * n1;
        v.gates.push_back({GateName::SlopeTwoCondition, s2_ok, d.str()});
    }

    if (q_ok && th_ok) v.candidates.push_back({1, q_star.num()});
    if (s2_ok) v.candidates.push_back({2, 1});
    std::sort(v.candidates.begin(), v.candidates.end());

    if (v.candidates.empty()) {
        v.kind = VerdictKind::NoCosmetic;
        return v;
    }

    if (!profile.box_class) {
        v.kind = VerdictKind::Inconclusive;
        v.surviving_pairs = v.candidates;
        v.note =
            "acyclic summands beyond simple figure eights are present; the graded "
            "comparison is not defined for them here, so the listed slope pairs "
            "remain unchecked (deciding them needs the full plus-flavored theory)";
        return v;
    }

    // The slope-1 ledger governs the (1,1) and (2,1) candidates; it must agree
    // with the graded comparison on those slopes.
    bool ledger_applies = std::any_of(v.candidates.begin(), v.candidates.end(),
                                      [](const SlopePair& s) {
                                          return (s.p == 1 && s.q == 1) || (s.p == 2 && s.q == 1);
                                      });
    bool balance = false;
    if (ledger_applies) {
        balance = figure_eight_balance(*profile.e);
        std::ostringstream d;
        d << "height-0 figure-eight ledger "
          << (balance ? "balances" : "does not balance")
          << " the window sums of the nonzero heights";
        v.gates.push_back({GateName::FigureEightBalance, balance, d.str()});
    }

    std::vector<SlopePair> kept;
    std::ostringstream graded_detail;
    for (const auto& slope : v.candidates) {
        GradedSurgeryComparison cmp = graded_surgery(profile, slope);
        bool governed = (slope.p == 1 && slope.q == 1) || (slope.p == 2 && slope.q == 1);
        if (governed && cmp.match != balance)
            throw invariant_error("graded comparison at slope " + slope_str(slope) +
                                  " disagrees with the figure-eight ledger");
        if (cmp.match) kept.push_back(slope);
        if (graded_detail.tellp() > 0) graded_detail << "; ";
        graded_detail << "slope " << slope_str(slope) << ": "
                      << (cmp.match ? "match" : "mismatch");
    }

    if (ledger_applies && !balance) {
        // every candidate is governed here (a (1,q>=2) candidate excludes both
        // governed slopes), so the trace ends at the failed ledger gate
        v.kind = VerdictKind::NoCosmetic;
        return v;
    }

    v.gates.push_back({GateName::GradedMismatch, !kept.empty(), graded_detail.str()});
    if (kept.empty()) {
        v.kind = VerdictKind::NoCosmetic;
    } else {
        v.kind = VerdictKind::HFIndistinguishable;
        v.surviving_pairs = kept;
    }
    return v;
}

UVZeroComplex synthesize_box_complex(bool staircase_trivial,
                                     const std::vector<std::tuple<int, int, long long>>& boxes) {
    if (!staircase_trivial)
        throw std::invalid_argument(
            "synthesize_box_complex: only the single-generator staircase is supported");
    std::map<std::pair<int, int>, long long> census;
    for (const auto& [s, d, count] : boxes) {
        if (count < 0) throw std::invalid_argument("synthesize_box_complex: negative count");
        if (count > 0) census[{s, d}] += count;
    }
    for (const auto& [sd, count] : census) {
        auto it = census.find({-sd.first, sd.second});
        if (it == census.end() || it->second != count)
            throw std::invalid_argument("synthesize_box_complex: asymmetric census");
    }

    UVZeroComplex c;
    c.name = "synthetic-box-complex";
    c.generators.push_back({"x0", 0, 0});
    long long index = 0;
    for (const auto& [sd, count] : census) {
        const auto [s, d] = sd;
        for (long long k = 0; k < count; ++k, ++index) {
            std::string p = "f" + std::to_string(index);
            c.generators.push_back({p + "c", s, s - d});
            c.generators.push_back({p + "t", s + 1, s + 1 - d});
            c.generators.push_back({p + "e", s - 1, s - 1 - d});
            c.generators.push_back({p + "b", s, s - d});
            c.arrows.push_back({p + "c", p + "t", ArrowKind::U, 1});
            c.arrows.push_back({p + "t", p + "b", ArrowKind::V, 1});
            c.arrows.push_back({p + "c", p + "e", ArrowKind::V, 1});
            c.arrows.push_back({p + "e", p + "b", ArrowKind::U, 1});
        }
    }
    sort_canonical(c);
    return c;
}

UVZeroComplex synthesize_unobstructed(int g, int q) {
    if (g < 2 || q < 1)
        throw std::domain_error("synthesize_unobstructed: need g >= 2 and q >= 1");
    long long s = g - 1;
    std::vector<std::tuple<int, int, long long>> boxes;
    boxes.emplace_back(static_cast<int>(s), 0, q);
    boxes.emplace_back(static_cast<int>(-s), 0, q);
    // per crossing index: a pair of balancing height-0 chains
    for (long long i = 0; i < q; ++i) {
        long long k = q * s * (s - 1) / 2 + i * s;
        long long m = 2 * k + s - 1;
        long long drop = 2 * s + 4 * k - 1;
        for (long long d = -m; d <= -m + drop - 1; ++d)
            boxes.emplace_back(0, static_cast<int>(d), 2);
    }
    UVZeroComplex c = synthesize_box_complex(true, boxes);
    c.name = "unobstructed-g" + std::to_string(g) + "-q" + std::to_string(q);
    return c;
}

BatchResult batch_funnel(const std::vector<BatchItem>& inputs) {
    std::vector<BatchItem> sorted = inputs;
    std::sort(sorted.begin(), sorted.end(),
              [](const BatchItem& a, const BatchItem& b) { return a.name < b.name; });

    BatchResult res;
    for (const auto& item : sorted) {
        BatchEntry entry;
        entry.name = item.name;
        if (!item.complex) {
            entry.error = item.load_error.empty() ? "no complex loaded" : item.load_error;
        } else {
            try {
                entry.verdict = check_knot(*item.complex);
            } catch (const validation_failure& e) {
                std::ostringstream msg;
                msg << "validation failed:";
                for (const auto& viol : e.violations) msg << " [" << viol.detail << "]";
                entry.error = msg.str();
            } catch (const std::exception& e) {
                entry.error = e.what();
            }
        }

        if (entry.verdict) {
            const Verdict& v = *entry.verdict;
            res.funnel.total += 1;
            auto passed = [&v](GateName g) {
                for (const auto& gate : v.gates)
                    if (gate.name == g) return gate.passed;
                return false;
            };
            if (passed(GateName::EpsilonNonzero)) res.funnel.pass_epsilon += 1;
            if (passed(GateName::GenusOne)) res.funnel.pass_genus += 1;
            if (passed(GateName::BoyerLines)) res.funnel.pass_boyer_lines += 1;
            if (!v.candidates.empty()) res.funnel.with_candidates += 1;
            if (v.kind == VerdictKind::HFIndistinguishable)
                res.funnel.hf_indistinguishable.push_back(entry.name);
            if (v.kind == VerdictKind::Inconclusive)
                res.funnel.inconclusive.push_back(entry.name);
        } else {
            res.funnel.errors.emplace_back(entry.name, entry.error);
        }
        res.entries.push_back(std::move(entry));
    }
    return res;
}

using ordered_json = nlohmann::ordered_json;

nlohmann::ordered_json knot_report(const std::string& name, const Verdict& v) {
    ordered_json j;
    j["name"] = name;
    j["verdict"] = verdict_name(v.kind);
    j["gates"] = ordered_json::array();
    for (const auto& g : v.gates) {
        ordered_json jg;
        jg["name"] = gate_name(g.name);
        jg["passed"] = g.passed;
        jg["detail"] = g.detail;
        j["gates"].push_back(std::move(jg));
    }
    j["surviving_pairs"] = ordered_json::array();
    for (const auto& s : v.surviving_pairs) j["surviving_pairs"].push_back({s.p, s.q});
    if (!v.note.empty()) j["note"] = v.note;

    ordered_json ji;
    if (v.invariants) {
        const KnotInvariants& inv = *v.invariants;
        ji["genus"] = inv.genus;
        ji["thickness"] = inv.thickness;
        ji["tau"] = inv.tau;
        ji["epsilon"] = inv.epsilon;
        ji["m"] = v.profile ? v.profile->m : 2 * inv.tau - inv.epsilon;
        if (v.profile && v.profile->n) {
            ordered_json jn = ordered_json::object();
            for (const auto& [s, count] : *v.profile->n) jn[std::to_string(s)] = count;
            ji["n"] = std::move(jn);
        } else {
            ji["n"] = nullptr;
        }
        if (v.profile && v.profile->e) {
            ordered_json je = ordered_json::object();
            for (const auto& [sd, count] : *v.profile->e)
                je[std::to_string(sd.first) + "," + std::to_string(sd.second)] = count;
            ji["e"] = std::move(je);
        } else {
            ji["e"] = nullptr;
        }
        if (v.q_star) ji["q_star"] = v.q_star->str();
        else ji["q_star"] = nullptr;
        ji["alexander"] = inv.alexander.coeff_span();
        ji["alex_dd1"] = inv.alex_dd1;
    }
    j["invariants"] = std::move(ji);
    return j;
}

nlohmann::ordered_json funnel_report(const FunnelRecord& f) {
    ordered_json j;
    j["total"] = f.total;
    j["pass_epsilon"] = f.pass_epsilon;
    j["pass_genus"] = f.pass_genus;
    j["pass_boyer_lines"] = f.pass_boyer_lines;
    j["with_candidates"] = f.with_candidates;
    j["hf_indistinguishable"] = f.hf_indistinguishable;
    j["inconclusive"] = f.inconclusive;
    j["errors"] = ordered_json::array();
    for (const auto& [name, message] : f.errors) {
        ordered_json je;
        je["name"] = name;
        je["message"] = message;
        j["errors"].push_back(std::move(je));
    }
    return j;
}

nlohmann::ordered_json surgery_report(const GradedSurgeryComparison& cmp) {
    ordered_json j;
    j["slope"] = {cmp.slope.p, cmp.slope.q};
    j["match"] = cmp.match;
    if (cmp.sigma) j["sigma"] = *cmp.sigma;
    else j["sigma"] = nullptr;
    long long total = 0;
    for (const auto& sc : cmp.spin_c) total += static_cast<long long>(sc.multiset_plus.size());
    j["total_rank"] = total;
    j["spin_c"] = ordered_json::array();
    for (size_t i = 0; i < cmp.spin_c.size(); ++i) {
        const auto& sc = cmp.spin_c[i];
        ordered_json js;
        js["i"] = i;
        js["d_plus"] = sc.d_plus.str();
        js["d_minus"] = sc.d_minus.str();
        js["multiset_plus"] = ordered_json::array();
        for (const auto& r : sc.multiset_plus) js["multiset_plus"].push_back(r.str());
        js["multiset_minus"] = ordered_json::array();
        for (const auto& r : sc.multiset_minus) js["multiset_minus"].push_back(r.str());
        j["spin_c"].push_back(std::move(js));
    }
    return j;
}

}  // namespace cfk

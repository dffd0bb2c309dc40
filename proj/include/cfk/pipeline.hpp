#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cfk/curve.hpp"
#include "cfk/surgery.hpp"

#include "json.hpp"

namespace cfk {

enum class GateName {
    EpsilonNonzero,
    GenusOne,
    BoyerLines,
    QNotPositiveInteger,
    ThicknessBound,
    SlopeTwoCondition,
    FigureEightBalance,
    GradedMismatch,
};

const char* gate_name(GateName g);

struct Gate {
    GateName name;
    bool passed = false;     // true: the knot survived this obstruction
    std::string detail;      // the exact quantities that decided it
};

enum class VerdictKind { TrivialKnot, NoCosmetic, HFIndistinguishable, Inconclusive };

const char* verdict_name(VerdictKind v);

struct Verdict {
    VerdictKind kind = VerdictKind::NoCosmetic;
    std::vector<Gate> gates;                // ordered trace
    std::vector<SlopePair> surviving_pairs; // nonempty only for HFIndistinguishable/Inconclusive
    std::vector<SlopePair> candidates;      // numeric candidates entering the graded stage
    std::string note;                       // extra explanation (Inconclusive)
    std::optional<KnotInvariants> invariants;
    std::optional<CurveProfile> profile;
    std::optional<Rational> q_star;
};

/* The full decision procedure: trivial-knot shortcut, reduction and
   decomposition, the integer gates (epsilon, genus, Alexander second
   derivative), candidate slopes from q* and the slope-2 condition, then the
   graded comparison on box-class profiles. */
Verdict check_knot(const UVZeroComplex& c);

/* Fixture synthesis: one isolated (0,0) generator plus the requested simple
   figure-eight census. boxes entries are (height, delta, count); the census
   must be height-symmetric. */
UVZeroComplex synthesize_box_complex(bool staircase_trivial,
                                     const std::vector<std::tuple<int, int, long long>>& boxes);

/* The graded-match construction: q figure eights at heights +-(g-1) and, per
   crossing index, the balancing chains of height-0 figure eights. The result
   passes the graded comparison at slope (1, q). */
UVZeroComplex synthesize_unobstructed(int g, int q);

struct BatchItem {
    std::string name;
    std::optional<UVZeroComplex> complex;
    std::string load_error;  // set when the complex could not be loaded
};

struct BatchEntry {
    std::string name;
    std::optional<Verdict> verdict;
    std::string error;
};

struct FunnelRecord {
    long long total = 0;             // knots that received a verdict
    long long pass_epsilon = 0;
    long long pass_genus = 0;
    long long pass_boyer_lines = 0;
    long long with_candidates = 0;
    std::vector<std::string> hf_indistinguishable;
    std::vector<std::string> inconclusive;
    std::vector<std::pair<std::string, std::string>> errors;  // (name, message)
};

struct BatchResult {
    std::vector<BatchEntry> entries;  // name-sorted
    FunnelRecord funnel;
};

// Per-input errors are recorded, never abort the batch.
BatchResult batch_funnel(const std::vector<BatchItem>& inputs);

/* Report records. Field order is fixed:
   {name, verdict, gates, surviving_pairs, [note,] invariants}. */
nlohmann::ordered_json knot_report(const std::string& name, const Verdict& v);
nlohmann::ordered_json funnel_report(const FunnelRecord& f);
nlohmann::ordered_json surgery_report(const GradedSurgeryComparison& cmp);

}  // namespace cfk

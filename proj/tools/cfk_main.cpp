/* Command-line front end: validate / invariants / surgery / check / batch /
   lens / render. Data goes to stdout, diagnostics to stderr. Exit codes:
   0 success, 1 usage or parse error, 2 the input complex fails validation or
   an operation's input preconditions, 3 internal invariant violation. */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cfk/complex.hpp"
#include "cfk/curve.hpp"
#include "cfk/lens.hpp"
#include "cfk/pipeline.hpp"
#include "cfk/render.hpp"
#include "cfk/surgery.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Analysis {
    cfk::UVZeroComplex reduced;
    cfk::Decomposition decomp;
    cfk::KnotInvariants inv;
    cfk::CurveProfile profile;
    std::optional<cfk::Rational> q_star;
};

// Shared front half of the file-based commands; throws validation_failure.
Analysis analyze_file(const std::string& path, cfk::UVZeroComplex* raw_out = nullptr) {
    cfk::UVZeroComplex c = cfk::load_complex_file(path);
    auto violations = cfk::validate(c);
    if (!violations.empty()) throw cfk::validation_failure(std::move(violations));
    if (raw_out) *raw_out = c;
    Analysis a;
    a.reduced = cfk::reduce(c);
    a.decomp = cfk::decompose(a.reduced);
    a.inv = cfk::knot_invariants(a.decomp, a.reduced);
    a.profile = cfk::curve_profile(a.decomp, a.inv, a.reduced);
    if (a.inv.epsilon == 0 && a.inv.genus >= 2) a.q_star = cfk::candidate_q(a.profile);
    return a;
}

cfk::SlopePair parse_slope(const std::string& text) {
    long long p = 0, q = 1;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            p = std::stoll(text);
        } else {
            p = std::stoll(text.substr(0, slash));
            q = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw std::domain_error("slope must be P or P/Q, got '" + text + "'");
    }
    if (p <= 0 || q <= 0) throw std::domain_error("slope requires positive P and Q");
    if (std::gcd(p, q) != 1) throw std::domain_error("slope P/Q must be in lowest terms");
    return {p, q};
}

std::string invariant_summary(const Analysis& a) {
    std::ostringstream os;
    os << "genus = " << a.inv.genus << ", thickness = " << a.inv.thickness
       << ", tau = " << a.inv.tau << ", epsilon = " << a.inv.epsilon << ", m = " << a.profile.m
       << "\n";
    os << "alexander = " << a.inv.alexander.str() << "  (Delta''(1) = " << a.inv.alex_dd1
       << ")\n";
    if (a.profile.n) {
        os << "n:";
        if (a.profile.n->empty()) os << " (all zero)";
        for (const auto& [s, count] : *a.profile.n) os << " n_" << s << " = " << count << ";";
        os << "\n";
    } else {
        os << "n: unavailable (epsilon != 0)\n";
    }
    if (a.profile.e) {
        os << "e:";
        if (a.profile.e->empty()) os << " (none)";
        for (const auto& [sd, count] : *a.profile.e)
            os << " e_" << sd.first << "^" << sd.second << " = " << count << ";";
        os << "\n";
    } else {
        os << "e: unavailable ("
           << (a.inv.epsilon != 0 ? "epsilon != 0" : "summands beyond simple figure eights")
           << ")\n";
    }
    os << "box_class = " << (a.profile.box_class ? "true" : "false") << "\n";
    os << "q* = " << (a.q_star ? a.q_star->str() : "undefined") << "\n";
    return os.str();
}

ordered_json invariants_json(const Analysis& a) {
    cfk::Verdict v;
    v.invariants = a.inv;
    v.profile = a.profile;
    v.q_star = a.q_star;
    return cfk::knot_report("", v)["invariants"];
}

int report_validation_failure(const cfk::validation_failure& e) {
    std::cerr << "error: input complex fails validation (" << e.violations.size()
              << " violation" << (e.violations.size() == 1 ? "" : "s") << ")\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UV=0 knot Floer complexes: invariants, surgery gradings, and "
                 "the truly-cosmetic-surgery obstruction pipeline"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit machine-readable reports");

    std::string file, outfile, slope_text;
    long long lens_p = 0, lens_q = 0, lens_i = -1;
    bool lens_has_i = false;

    auto* cmd_validate = app.add_subcommand("validate", "check a complex document");
    cmd_validate->add_option("file", file, "complex file")->required();
    cmd_validate->fallthrough();

    auto* cmd_invariants = app.add_subcommand("invariants", "classical and curve invariants");
    cmd_invariants->add_option("file", file, "complex file")->required();
    cmd_invariants->fallthrough();

    auto* cmd_surgery = app.add_subcommand("surgery", "graded comparison of +-P/Q surgeries");
    cmd_surgery->add_option("file", file, "complex file")->required();
    cmd_surgery->add_option("--slope", slope_text, "slope P/Q (positive)")->required();
    cmd_surgery->fallthrough();

    auto* cmd_check = app.add_subcommand("check", "run the full obstruction pipeline");
    cmd_check->add_option("file", file, "complex file")->required();
    cmd_check->fallthrough();

    auto* cmd_batch = app.add_subcommand("batch", "pipeline over a directory of .cfk files");
    cmd_batch->add_option("dir", file, "directory")->required();
    cmd_batch->fallthrough();

    auto* cmd_lens = app.add_subcommand("lens", "lens space correction terms");
    cmd_lens->add_option("p", lens_p, "order p > 0")->required();
    cmd_lens->add_option("q", lens_q, "q coprime to p")->required();
    cmd_lens->add_option("i", lens_i, "single spin-c index");
    cmd_lens->fallthrough();

    auto* cmd_render = app.add_subcommand("render", "SVG diagram of the curve invariant");
    cmd_render->add_option("file", file, "complex file")->required();
    cmd_render->add_option("--slope", slope_text, "overlay slope P/Q");
    cmd_render->add_option("-o,--output", outfile, "output SVG path")->required();
    cmd_render->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    lens_has_i = cmd_lens->count("i") > 0;

    try {
        if (app.got_subcommand(cmd_validate)) {
            cfk::UVZeroComplex c = cfk::load_complex_file(file);
            auto violations = cfk::validate(c);
            if (json) {
                ordered_json j;
                j["name"] = c.name;
                j["valid"] = violations.empty();
                j["violations"] = ordered_json::array();
                for (const auto& v : violations) {
                    ordered_json jv;
                    jv["kind"] = v.kind == cfk::Violation::Kind::GradingLaw ? "GradingLaw"
                                                                            : "DSquared";
                    jv["detail"] = v.detail;
                    j["violations"].push_back(std::move(jv));
                }
                std::cout << j.dump(2) << "\n";
            } else if (violations.empty()) {
                std::cout << "valid: " << c.generators.size() << " generators, "
                          << c.arrows.size() << " arrows\n";
            } else {
                for (const auto& v : violations) std::cout << v.detail << "\n";
            }
            return violations.empty() ? 0 : 2;
        }

        if (app.got_subcommand(cmd_invariants)) {
            Analysis a = analyze_file(file);
            if (json) {
                ordered_json j;
                j["name"] = cfk::load_complex_file(file).name;
                j["invariants"] = invariants_json(a);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << invariant_summary(a);
            }
            return 0;
        }

        if (app.got_subcommand(cmd_surgery)) {
            cfk::SlopePair slope = parse_slope(slope_text);
            Analysis a = analyze_file(file);
            if (a.profile.epsilon != 0 || !a.profile.box_class) {
                std::cerr << "error: graded surgery comparison needs a box-class complex with "
                             "epsilon = 0 (this input has epsilon = "
                          << a.inv.epsilon << ", box_class = "
                          << (a.profile.box_class ? "true" : "false") << ")\n";
                return 2;
            }
            cfk::GradedSurgeryComparison cmp = cfk::graded_surgery(a.profile, slope);
            if (json) {
                std::cout << cfk::surgery_report(cmp).dump(2) << "\n";
            } else {
                for (size_t i = 0; i < cmp.spin_c.size(); ++i) {
                    const auto& sc = cmp.spin_c[i];
                    std::cout << "spin_c " << i << ": d+ = " << sc.d_plus.str()
                              << ", d- = " << sc.d_minus.str() << "\n  plus  {";
                    for (const auto& r : sc.multiset_plus) std::cout << " " << r.str();
                    std::cout << " }\n  minus {";
                    for (const auto& r : sc.multiset_minus) std::cout << " " << r.str();
                    std::cout << " }\n";
                }
                std::cout << "match: " << (cmp.match ? "yes" : "no");
                if (cmp.sigma) {
                    std::cout << "  sigma:";
                    for (int s : *cmp.sigma) std::cout << " " << s;
                }
                std::cout << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_check)) {
            cfk::UVZeroComplex c = cfk::load_complex_file(file);
            auto violations = cfk::validate(c);
            if (!violations.empty()) throw cfk::validation_failure(std::move(violations));
            cfk::Verdict v = cfk::check_knot(c);
            if (json) {
                std::cout << cfk::knot_report(c.name, v).dump(2) << "\n";
            } else {
                std::cout << c.name << ": " << cfk::verdict_name(v.kind) << "\n";
                for (const auto& g : v.gates)
                    std::cout << "  [" << (g.passed ? "pass" : "FAIL") << "] "
                              << cfk::gate_name(g.name) << ": " << g.detail << "\n";
                if (!v.surviving_pairs.empty()) {
                    std::cout << "  surviving pairs:";
                    for (const auto& s : v.surviving_pairs)
                        std::cout << " {+-" << s.p << "/" << s.q << "}";
                    std::cout << "\n";
                }
                if (!v.note.empty()) std::cout << "  note: " << v.note << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_batch)) {
            if (!fs::is_directory(file)) {
                std::cerr << "error: '" << file << "' is not a directory\n";
                return 1;
            }
            std::vector<std::string> paths;
            for (const auto& entry : fs::directory_iterator(file))
                if (entry.is_regular_file() && entry.path().extension() == ".cfk")
                    paths.push_back(entry.path().string());
            std::sort(paths.begin(), paths.end());
            std::vector<cfk::BatchItem> items;
            for (const auto& p : paths) {
                cfk::BatchItem item;
                item.name = fs::path(p).stem().string();
                try {
                    item.complex = cfk::load_complex_file(p);
                } catch (const std::exception& e) {
                    item.load_error = e.what();
                }
                items.push_back(std::move(item));
            }
            cfk::BatchResult res = cfk::batch_funnel(items);
            if (json) {
                ordered_json j;
                j["knots"] = ordered_json::array();
                for (const auto& e : res.entries) {
                    if (e.verdict) {
                        j["knots"].push_back(cfk::knot_report(e.name, *e.verdict));
                    } else {
                        ordered_json je;
                        je["name"] = e.name;
                        je["error"] = e.error;
                        j["knots"].push_back(std::move(je));
                    }
                }
                j["funnel"] = cfk::funnel_report(res.funnel);
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& e : res.entries) {
                    if (e.verdict) {
                        std::cout << e.name << ": " << cfk::verdict_name(e.verdict->kind);
                        if (!e.verdict->surviving_pairs.empty()) {
                            std::cout << " (";
                            for (const auto& s : e.verdict->surviving_pairs)
                                std::cout << " +-" << s.p << "/" << s.q;
                            std::cout << " )";
                        }
                        std::cout << "\n";
                    } else {
                        std::cout << e.name << ": error: " << e.error << "\n";
                    }
                }
                const auto& f = res.funnel;
                std::cout << "funnel: total " << f.total << ", pass_epsilon " << f.pass_epsilon
                          << ", pass_genus " << f.pass_genus << ", pass_boyer_lines "
                          << f.pass_boyer_lines << ", with_candidates " << f.with_candidates
                          << ", hf_indistinguishable " << f.hf_indistinguishable.size()
                          << ", inconclusive " << f.inconclusive.size() << ", errors "
                          << f.errors.size() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_lens)) {
            if (lens_p <= 0) throw std::domain_error("lens: p must be positive");
            if (std::gcd(lens_p, lens_q < 0 ? -lens_q : lens_q) != 1)
                throw std::domain_error("lens: p and q must be coprime");
            std::vector<long long> indices;
            if (lens_has_i) {
                if (lens_i < 0 || lens_i >= lens_p)
                    throw std::domain_error("lens: index out of range [0, p)");
                indices.push_back(lens_i);
            } else {
                for (long long i = 0; i < lens_p; ++i) indices.push_back(i);
            }
            if (json) {
                ordered_json j;
                j["p"] = lens_p;
                j["q"] = lens_q;
                j["d"] = ordered_json::array();
                for (long long i : indices)
                    j["d"].push_back(cfk::d_invariant(lens_p, lens_q, i).str());
                std::cout << j.dump(2) << "\n";
            } else {
                for (long long i : indices)
                    std::cout << cfk::d_invariant(lens_p, lens_q, i).str() << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(cmd_render)) {
            Analysis a = analyze_file(file);
            if (a.profile.epsilon != 0 || !a.profile.box_class) {
                std::cerr << "error: rendering needs a box-class complex with epsilon = 0\n";
                return 2;
            }
            cfk::DiagramSpec spec;
            spec.profile = a.profile;
            if (cmd_render->count("--slope")) spec.overlay = parse_slope(slope_text);
            std::string svg = cfk::render_curves(spec);
            std::ofstream out(outfile, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write '" << outfile << "'\n";
                return 1;
            }
            out << svg;
            out.close();
            if (json) {
                ordered_json j;
                j["output"] = outfile;
                j["bytes"] = svg.size();
                std::cout << j.dump(2) << "\n";
            }
            return 0;
        }
    } catch (const cfk::validation_failure& e) {
        return report_validation_failure(e);
    } catch (const cfk::invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cfk::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

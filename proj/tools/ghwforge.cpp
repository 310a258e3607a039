// ghwforge: compute weight hierarchies, check support-constraint conditions,
// and solve or refute support-constrained generator matrix instances.
//
// Exit codes: 0 success / feasible / pass, 1 error, 2 infeasible / check
// failed, 3 falsify exhausted its trials without a counterexample.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghwforge/families.hpp"
#include "ghwforge/json_io.hpp"
#include "ghwforge/reproduction.hpp"
#include "ghwforge/sampling.hpp"

using nlohmann::json;
using namespace ghwforge;

namespace {

Budget env_budget() {
    Budget b;
    if (const char* raw = std::getenv("GHWFORGE_BUDGET")) {
        try {
            b.cap = std::stoull(raw);
        } catch (const std::exception&) {
            throw ParseError("GHWFORGE_BUDGET must be an unsigned integer");
        }
    }
    return b;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json_file(out_path, j);
}

GhwMethod parse_method(const std::string& name) {
    if (name == "subcode") return GhwMethod::kSubcode;
    if (name == "zeroset") return GhwMethod::kZeroSet;
    if (name == "auto") return GhwMethod::kAuto;
    throw ParseError("unknown method \"" + name + "\"");
}

Field field_from_q(long q) {
    for (long p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        int m = 0;
        long rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        if (rest != 1) throw NotPrimeError(std::to_string(q) + " is not a prime power");
        return Field::make(p, m);
    }
    throw NotPrimeError(std::to_string(q) + " is not a prime power");
}

std::vector<int> parse_int_csv(const std::string& csv) {
    std::vector<int> out;
    std::string token;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!token.empty()) out.push_back(std::stoi(token));
            token.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            token += ch;
        }
    }
    return out;
}

struct FamilyArgs {
    std::string family;
    long q = 0;
    int n = 0, k = 0, m = 0;
    std::string points_csv;
    std::string curve_file;
};

LinearCode build_family(const FamilyArgs& a, const Budget& budget) {
    if (a.family == "rs") {
        const Field f = field_from_q(a.q);
        std::vector<int> pts = parse_int_csv(a.points_csv);
        if (pts.empty())
            for (int i = 0; i < a.n; ++i) pts.push_back(i);
        return reed_solomon(f, pts, a.k);
    }
    if (a.family == "rm1") return reed_muller_1(field_from_q(a.q), a.m, budget);
    if (a.family == "elliptic-f4") return elliptic_f4_example().first;
    if (a.family == "cubic") {
        const Field f = field_from_q(a.q);
        const PlaneCubic cubic = cubic_from_json(load_json_file(a.curve_file));
        std::vector<ProjectivePoint> pts =
            plane_cubic_points_off_line(f, cubic, budget);
        const std::vector<int> chosen = parse_int_csv(a.points_csv);
        if (!chosen.empty()) {
            std::vector<ProjectivePoint> subset;
            for (int idx : chosen) {
                if (idx < 1 || idx > static_cast<int>(pts.size()))
                    throw BadIndexError("point index " + std::to_string(idx) +
                                        " outside [1," + std::to_string(pts.size()) + "]");
                subset.push_back(pts[idx - 1]);
            }
            pts = std::move(subset);
        }
        return cubic_line_code(f, cubic, pts);
    }
    throw ParseError("unknown family \"" + a.family + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field coding workbench: generalized Hamming weights "
                 "and support-constrained generator matrices"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON result to this file");

    // gf info
    auto* gf = app.add_subcommand("gf", "field utilities");
    gf->require_subcommand(1);
    auto* gf_info = gf->add_subcommand("info", "canonical field description");
    long gf_p = 0, gf_q = 0;
    int gf_m = 1;
    gf_info->add_option("--p", gf_p, "prime characteristic");
    gf_info->add_option("--m", gf_m, "extension degree");
    gf_info->add_option("--q", gf_q, "prime power cardinality");

    // code ghw / mindist / check-thm21
    auto* code = app.add_subcommand("code", "per-code computations");
    code->require_subcommand(1);
    std::string code_file, method_name = "auto";
    auto* code_ghw = code->add_subcommand("ghw", "weight hierarchy d_1..d_k");
    code_ghw->add_option("file", code_file, "code JSON file")->required();
    code_ghw->add_option("--method", method_name, "subcode | zeroset | auto");
    auto* code_mindist = code->add_subcommand("mindist", "minimum distance d_1");
    code_mindist->add_option("file", code_file, "code JSON file")->required();
    code_mindist->add_option("--method", method_name, "subcode | zeroset | auto");
    auto* code_thm = code->add_subcommand(
        "check-thm21", "verify the GHW bound on the generator's row zero sets");
    code_thm->add_option("file", code_file, "code JSON file")->required();

    // sets check
    auto* sets = app.add_subcommand("sets", "subset system checks");
    sets->require_subcommand(1);
    auto* sets_check = sets->add_subcommand("check", "run a constraint checker");
    std::string sets_file, sets_mode = "mds", sets_code_file;
    sets_check->add_option("file", sets_file, "sets JSON file")->required();
    sets_check->add_option("--mode", sets_mode, "ghw | mds | card");
    sets_check->add_option("--code", sets_code_file,
                           "code JSON file (required for --mode ghw)");

    // solve
    auto* solve = app.add_subcommand("solve", "support-constrained solve");
    std::string solve_code_file, solve_sets_file;
    bool with_oracle = false;
    solve->add_option("code", solve_code_file, "code JSON file")->required();
    solve->add_option("sets", solve_sets_file, "sets JSON file")->required();
    solve->add_flag("--oracle", with_oracle,
                    "cross-check with the exhaustive oracle");

    // construct
    auto* construct = app.add_subcommand("construct", "build a code file");
    construct->require_subcommand(1);
    FamilyArgs fam;
    auto* c_rs = construct->add_subcommand("rs", "Reed-Solomon code");
    c_rs->add_option("--q", fam.q, "field cardinality")->required();
    c_rs->add_option("--n", fam.n, "length");
    c_rs->add_option("--k", fam.k, "dimension")->required();
    c_rs->add_option("--points", fam.points_csv, "evaluation point codes, CSV");
    auto* c_rm = construct->add_subcommand("rm1", "first order Reed-Muller code");
    c_rm->add_option("--q", fam.q, "field cardinality")->required();
    c_rm->add_option("--m", fam.m, "number of variables")->required();
    auto* c_cubic = construct->add_subcommand("cubic", "plane-cubic code");
    c_cubic->add_option("--q", fam.q, "field cardinality")->required();
    c_cubic->add_option("--curve", fam.curve_file, "curve JSON file")->required();
    c_cubic->add_option("--points", fam.points_csv,
                        "1-based indexes into the off-line point list");

    // paper verify
    auto* paper = app.add_subcommand("paper", "built-in reproduction suite");
    paper->require_subcommand(1);
    auto* paper_verify =
        paper->add_subcommand("verify", "recompute every bundled claim");

    // falsify
    auto* falsify_cmd =
        app.add_subcommand("falsify", "seeded counterexample search");
    std::string falsify_code_file, falsify_mode = "ghw";
    FamilyArgs falsify_fam;
    std::uint64_t seed = 0, trials = 10'000;
    falsify_cmd->add_option("--code", falsify_code_file, "code JSON file");
    falsify_cmd->add_option("--family", falsify_fam.family,
                            "rs | rm1 | elliptic-f4 (instead of --code)");
    falsify_cmd->add_option("--q", falsify_fam.q, "family field cardinality");
    falsify_cmd->add_option("--n", falsify_fam.n, "family length (rs)");
    falsify_cmd->add_option("--k", falsify_fam.k, "family dimension (rs)");
    falsify_cmd->add_option("--m", falsify_fam.m, "family variables (rm1)");
    falsify_cmd->add_option("--points", falsify_fam.points_csv,
                            "family evaluation point codes (rs), CSV");
    falsify_cmd->add_option("--mode", falsify_mode, "ghw | mds | cardinality+ghw");
    falsify_cmd->add_option("--seed", seed, "RNG seed");
    falsify_cmd->add_option("--trials", trials, "number of samples");

    CLI11_PARSE(app, argc, argv);

    try {
        const Budget budget = env_budget();

        if (gf_info->parsed()) {
            const Field f = gf_q != 0 ? field_from_q(gf_q) : Field::make(gf_p, gf_m);
            json j = field_to_json(f);
            j["q"] = f.size();
            emit(j, out_path);
            return 0;
        }

        if (code_ghw->parsed() || code_mindist->parsed()) {
            const LinearCode c = code_from_json(load_json_file(code_file));
            const GhwMethod method = parse_method(method_name);
            if (code_mindist->parsed()) {
                const int d1 = ghw(c, 1, method, budget);
                std::cout << d1 << "\n";
                emit(json{{"d1", d1}}, out_path);
                return 0;
            }
            const WeightHierarchy h = weight_hierarchy(c, method, budget);
            for (size_t i = 0; i < h.d.size(); ++i)
                std::cout << (i ? " " : "") << h.d[i];
            std::cout << "\n";
            emit(json{{"d", h.d}}, out_path);
            return 0;
        }

        if (code_thm->parsed()) {
            const LinearCode c = code_from_json(load_json_file(code_file));
            const ConstraintReport report = check_generator_support_bounds(c, budget);
            emit(report_to_json(report), out_path);
            return report.passed() ? 0 : 2;
        }

        if (sets_check->parsed()) {
            const SubsetSystem s =
                subset_system_from_json(load_json_file(sets_file));
            ConstraintReport report;
            if (sets_mode == "mds") {
                report = check_mds_condition(s, budget);
            } else if (sets_mode == "card") {
                report = check_cardinality(s);
            } else if (sets_mode == "ghw") {
                if (sets_code_file.empty())
                    throw ParseError("--mode ghw needs --code for the hierarchy");
                const LinearCode c = code_from_json(load_json_file(sets_code_file));
                const WeightHierarchy h = weight_hierarchy(c, GhwMethod::kAuto, budget);
                report = check_ghw_constraints(s, h.d, c.length(), budget);
            } else {
                throw ParseError("unknown mode \"" + sets_mode + "\"");
            }
            emit(report_to_json(report), out_path);
            return report.passed() ? 0 : 2;
        }

        if (solve->parsed()) {
            const LinearCode c = code_from_json(load_json_file(solve_code_file));
            const SubsetSystem s =
                subset_system_from_json(load_json_file(solve_sets_file));
            const SolveOutcome outcome = solve_support_constrained(c, s, budget);
            if (with_oracle) {
                const SolveOutcome ground = exhaustive_oracle(c, s, budget);
                if (ground.feasible() != outcome.feasible()) {
                    std::cerr << "error: oracle disagrees with the solver\n";
                    return 1;
                }
            }
            emit(outcome_to_json(outcome), out_path);
            return outcome.feasible() ? 0 : 2;
        }

        if (construct->parsed()) {
            if (c_rs->parsed()) fam.family = "rs";
            if (c_rm->parsed()) fam.family = "rm1";
            if (c_cubic->parsed()) fam.family = "cubic";
            if (fam.family == "rs" && fam.n == 0 && !fam.points_csv.empty())
                fam.n = static_cast<int>(parse_int_csv(fam.points_csv).size());
            const LinearCode c = build_family(fam, budget);
            emit(code_to_json(c), out_path);
            return 0;
        }

        if (paper_verify->parsed()) {
            const ReproductionReport report = run_reproduction_suite(budget);
            json checks = json::array();
            std::string first_fail;
            for (const auto& c : report.checks) {
                std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": "
                          << c.claim << " [expected " << c.expected << ", computed "
                          << c.computed << "] (" << c.millis << " ms)\n";
                if (!c.pass && first_fail.empty()) first_fail = c.name;
                checks.push_back(json{{"name", c.name},
                                      {"claim", c.claim},
                                      {"expected", c.expected},
                                      {"computed", c.computed},
                                      {"pass", c.pass},
                                      {"millis", c.millis}});
            }
            emit(json{{"pass", report.pass()}, {"checks", std::move(checks)}},
                 out_path);
            if (!report.pass()) {
                std::cerr << "error: first failing check: " << first_fail << "\n";
                return 1;
            }
            return 0;
        }

        if (falsify_cmd->parsed()) {
            LinearCode c = falsify_code_file.empty()
                               ? build_family(falsify_fam, budget)
                               : code_from_json(load_json_file(falsify_code_file));
            FalsifyConfig config;
            config.seed = seed;
            config.trials = trials;
            if (falsify_mode == "ghw") config.mode = GateMode::kGhw;
            else if (falsify_mode == "mds") config.mode = GateMode::kMds;
            else if (falsify_mode == "cardinality+ghw")
                config.mode = GateMode::kCardinalityGhw;
            else throw ParseError("unknown mode \"" + falsify_mode + "\"");

            const FalsifyResult result = falsify(c, config, budget);
            json j{{"mode", falsify_mode},
                   {"seed", seed},
                   {"trials", trials},
                   {"gated", result.gated},
                   {"found", result.found}};
            if (result.found) {
                j["trial"] = result.trial;
                j["system"] = subset_system_to_json(*result.system);
                j["outcome"] = outcome_to_json(*result.outcome);
            }
            emit(j, out_path);
            return result.found ? 0 : 3;
        }

        std::cerr << "error: no subcommand handled\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

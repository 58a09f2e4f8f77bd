// Command-line front end: one-shot analysis, batch sweeps, family verification.
//
// Exit codes: 0 success, 1 expectation mismatch (family), 2 invalid input,
// 3 budget exhaustion, 4 internal invariant violation.

#include "tc4/analysis.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// "A..B" or a single value
std::pair<tc4::Int, tc4::Int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        tc4::Int v = std::stoll(s);
        return {v, v};
    }
    return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
}

int run_analyze(const std::vector<tc4::Int>& n, bool as_json, const tc4::AnalysisOptions& opt) {
    tc4::AnalysisReport r = tc4::analyze({n[0], n[1], n[2], n[3]}, opt);
    if (as_json)
        std::cout << tc4::report_to_json(r).dump(2) << "\n";
    else
        std::cout << tc4::render_text_report(r);
    return 0;
}

int run_family(const std::string& id_str, const std::string& range,
               const tc4::AnalysisOptions& opt) {
    auto id = tc4::family_from_string(id_str);
    if (!id) throw tc4::InvalidInput("unknown family '" + id_str + "'");
    auto [lo, hi] = parse_range(range);
    if (hi < lo) throw tc4::InvalidInput("empty parameter range");
    tc4::DecideOptions dopt;
    dopt.run_oracle = opt.run_oracle;
    dopt.oracle.timeout_secs = opt.timeout_secs;
    dopt.gb = opt.gb;
    bool all_ok = true;
    for (tc4::Int p = lo; p <= hi; ++p) {
        tc4::FamilyReport rep = tc4::verify_member({*id, p}, dopt);
        std::cout << "family " << id_str << " parameter " << p << ": ";
        if (rep.rejected) {
            std::cout << "rejected (" << rep.rejection_note << ")\n";
            all_ok = all_ok && rep.ok;
            continue;
        }
        if (rep.ok) {
            const auto& v = rep.outcome->verdict;
            std::cout << "all claims verified (CM: " << (v.is_cm ? "yes" : "no")
                      << ", case " << tc4::to_string(rep.outcome->report.label);
            if (rep.outcome->gorenstein)
                std::cout << ", Bresinsky " << tc4::to_string(rep.outcome->gorenstein->perm_case);
            std::cout << ")\n";
        } else {
            all_ok = false;
            std::cout << "MISMATCH\n";
            for (const std::string& m : rep.mismatches) std::cout << "  - " << m << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Macaulayness of tangent cones of 4-generator monomial curves"};
    app.require_subcommand(1);

    tc4::AnalysisOptions opt;
    bool skip_oracle = false;

    auto add_budget_flags = [&](CLI::App* cmd) {
        cmd->add_option("--timeout-secs", opt.timeout_secs, "oracle wall-clock budget");
        cmd->add_option("--max-table-bytes", opt.max_table_bytes,
                        "cap on membership-table memory");
    };

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one generator tuple");
    std::vector<tc4::Int> gens;
    bool as_json = false;
    int horizon = -1;
    analyze_cmd->add_option("gens", gens, "four positive integers")->expected(4)->required();
    analyze_cmd->add_flag("--json", as_json, "emit the JSON report");
    analyze_cmd->add_option("--horizon", horizon, "Hilbert-function horizon");
    analyze_cmd->add_flag("--skip-oracle", skip_oracle, "skip the exhaustive oracle");
    add_budget_flags(analyze_cmd);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "analyze all tuples in a range, CSV output");
    tc4::SweepOptions sopt;
    std::string out_path;
    sweep_cmd->add_option("--min", sopt.min, "smallest generator value")->required();
    sweep_cmd->add_option("--max", sopt.max, "largest generator value")->required();
    sweep_cmd->add_flag("--gorenstein-only", sopt.gorenstein_only,
                        "keep only symmetric semigroups");
    sweep_cmd->add_flag("--non-cm-only", sopt.non_cm_only,
                        "keep only non-Cohen-Macaulay tangent cones");
    sweep_cmd->add_flag("--nondecreasing-only", sopt.nondecreasing_only,
                        "keep only non-decreasing Hilbert functions");
    sweep_cmd->add_option("--jobs,-j", sopt.jobs, "worker threads");
    sweep_cmd->add_option("--n4-cap", sopt.n4_cap, "safety cap on the largest generator");
    sweep_cmd->add_option("-o,--output", out_path, "output CSV path")->required();
    add_budget_flags(sweep_cmd);

    // family
    auto* family_cmd = app.add_subcommand("family", "verify members of a built-in family");
    std::string family_id, m_range, t_range;
    family_cmd->add_option("id", family_id, "e41 | gi | e43")->required();
    family_cmd->add_option("--m", m_range, "parameter range A..B for e41/e43");
    family_cmd->add_option("--t", t_range, "parameter range A..B for gi");
    family_cmd->add_flag("--skip-oracle", skip_oracle, "skip the exhaustive oracle");
    add_budget_flags(family_cmd);

    CLI11_PARSE(app, argc, argv);
    opt.run_oracle = !skip_oracle;
    opt.horizon = horizon;

    try {
        if (app.got_subcommand(analyze_cmd)) return run_analyze(gens, as_json, opt);
        if (app.got_subcommand(sweep_cmd)) {
            std::ofstream out(out_path);
            if (!out) throw tc4::InvalidInput("cannot open output path " + out_path);
            tc4::run_sweep(sopt, opt, out);
            return 0;
        }
        if (app.got_subcommand(family_cmd)) {
            const std::string& range = !m_range.empty() ? m_range : t_range;
            if (range.empty())
                throw tc4::InvalidInput("family needs a parameter range (--m or --t)");
            return run_family(family_id, range, opt);
        }
    } catch (const tc4::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tc4::BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const tc4::InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

#pragma once

#include "tc4/cmcheck.hpp"
#include "tc4/families.hpp"
#include "tc4/hilbert.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tc4 {

inline constexpr int kSchemaVersion = 1;

struct PhaseTimings {
    double tables_ms = 0, classify_ms = 0, criteria_ms = 0, oracle_ms = 0, hilbert_ms = 0,
           total_ms = 0;
};

struct GorensteinReport {
    std::string perm_case;
    std::array<Int, 4> a{};
    std::array<std::array<Int, 4>, 4> aij{};
    std::vector<std::pair<Exponents, Exponents>> generators;  // f1..f5 as written
    bool relations_ok = false;
    bool lexinf_groebner_ok = false;
    std::vector<Exponents> apery_avoidance;  // the five Apery avoidance monomials
};

struct TangentConeReport {
    std::vector<Exponents> leading_ideal;
    IntPolynomial numerator;
    IntPolynomial reduced_numerator;
    std::vector<Int> hf;
    bool hf_nondecreasing = false;
    std::string hf_reason;
    Int multiplicity = 0;
};

struct AnalysisReport {
    int schema_version = kSchemaVersion;
    std::array<Int, 4> input{};
    std::array<Int, 4> sorted{};
    std::array<int, 4> input_permutation{};
    std::array<Int, 4> a_values{};
    std::array<Int, 4> critical_degrees{};
    std::string case_label;
    Int mu = 0;
    bool degenerate = false;
    bool structure_ok = true;
    std::vector<std::pair<Exponents, Exponents>> minimal_generators;
    std::vector<std::pair<Exponents, Exponents>> set_S, set_I, set_R;
    bool symmetric = false;
    Int frobenius_number = 0;
    Int apery_size = 0;
    std::vector<Int> apery;
    std::optional<GorensteinReport> gorenstein;
    // CM verdict
    bool is_cm = false;
    std::string method;
    std::string case_tag;
    std::optional<NotCmCertificate> certificate;
    std::vector<Inequality> inequalities;
    std::string trace;
    bool oracle_ran = false;
    bool oracle_agrees = false;
    TangentConeReport tangent_cone;
    PhaseTimings timings;

    // Equality of payloads; timings are excluded.
    bool same_payload(const AnalysisReport& o) const;
};

struct AnalysisOptions {
    bool run_oracle = true;
    double timeout_secs = 300.0;
    Int max_table_bytes = Int(1) << 30;  // 4 bytes per table entry
    int horizon = -1;                    // HF horizon; default deg(reduced numerator) + 2
    GBOptions gb;
};

AnalysisReport analyze(const std::array<Int, 4>& input, const AnalysisOptions& opt = {});

nlohmann::json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

std::string csv_header();
std::string csv_row(const AnalysisReport& r);

struct SweepOptions {
    Int min = 1, max = 0;
    Int n4_cap = 2000;  // refuse ranges beyond this largest-generator cap
    bool gorenstein_only = false;
    bool non_cm_only = false;
    bool nondecreasing_only = false;
    int jobs = 1;
};

// One CSV row per tuple min <= n1 < n2 < n3 < n4 <= max with gcd 1 passing
// the filters, in lexicographic tuple order regardless of the job count.
void run_sweep(const SweepOptions& sopt, const AnalysisOptions& aopt, std::ostream& out);

std::string render_text_report(const AnalysisReport& r);

}  // namespace tc4

#pragma once

#include "tc4/gorenstein.hpp"
#include "tc4/semigroup.hpp"
#include "tc4/toric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tc4 {

// Witness that the tangent cone is not Cohen-Macaulay: an exponent triple
// over (x2,x3,x4) whose S-degree m has m - n1 in S while every factorization
// of m using x1 is shorter.
struct NotCmCertificate {
    Int v2 = 0, v3 = 0, v4 = 0;
    Int m = 0;
    Int best_with_x1 = 0;  // 1 + max_len[m - n1]
    bool operator==(const NotCmCertificate&) const = default;
};

enum class CmMethod { herzog_oracle, closed_form, appendix_predicate, case1_sufficient };
std::string to_string(CmMethod m);

// One evaluated criterion inequality, for machine-checkable traces.
struct Inequality {
    std::string label;
    Int lhs = 0, rhs = 0;
    bool holds = false;
    bool operator==(const Inequality&) const = default;
};

struct CMVerdict {
    bool is_cm = false;
    CmMethod method = CmMethod::herzog_oracle;
    std::string case_tag;  // Bresinsky permutation case or classification case
    std::optional<NotCmCertificate> certificate;
    std::vector<Inequality> inequalities;
    std::string trace;
};

struct OracleOptions {
    double timeout_secs = 300.0;
};

// Exhaustive Herzog criterion over the box v_i < n1/gcd(n1, n_i): the curve
// has Cohen-Macaulay tangent cone iff every triple with m - n1 in S satisfies
// v2+v3+v4 <= 1 + max_len[m - n1]. First violation (smallest v4, v3, v2)
// becomes the certificate.
CMVerdict herzog_oracle(const GeneratorTuple& g, const MembershipTables& t,
                        const OracleOptions& opt = {});

// The recurring condition: some monomial N with x1 in its support has the
// same S-degree as x2^v2 x3^v3 x4^v4 and at least its total degree.
// Precondition m - n1 in S; throws InvalidInput otherwise (vacuous case).
bool good_monomial(const GeneratorTuple& g, const MembershipTables& t, Int v2, Int v3,
                   Int v4);

// Closed-form criteria for the six Gorenstein permutation cases. Empty when
// the instance falls in a branch with only necessary conditions and they all
// hold (the caller falls back to the oracle).
std::optional<CMVerdict> closed_form_criterion(const GorensteinData& d);

// The per-case iff predicates for classification cases 2a/2b/2c/3/4a/4b.
// Empty for case 1, for degenerate instances, and for case-4 instances whose
// coincidence pair does not contain n1 (no criterion covers those).
std::optional<CMVerdict> appendix_predicates(const CaseReport& rep, const GeneratorTuple& g,
                                             const MembershipTables& t);

// Sufficient conditions for case 1; returns CM or empty, never not-CM.
std::optional<CMVerdict> case1_sufficient(const CaseReport& rep, const GeneratorTuple& g,
                                          const MembershipTables& t);

struct DecideOptions {
    bool run_oracle = true;
    OracleOptions oracle;
    GBOptions gb;
    Int max_table_entries = kDefaultMaxTableEntries;
};

// Everything decide computes along the way, for report assembly.
struct DecideOutcome {
    CMVerdict verdict;
    std::optional<CMVerdict> oracle;
    std::vector<CMVerdict> criteria;  // fast paths that returned a verdict
    CaseReport report;
    std::optional<GorensteinData> gorenstein;
    bool gorenstein_relations_ok = false;
    std::string gorenstein_note;  // anomaly diagnostics when detection fails unexpectedly
    bool symmetric = false;
    MembershipTables tables;
    double tables_ms = 0, classify_ms = 0, criteria_ms = 0, oracle_ms = 0;
};

// Classification, fast-path criteria and (by default) the oracle; any
// disagreement between a criterion and the oracle is an InternalError.
DecideOutcome decide_full(const GeneratorTuple& g, const DecideOptions& opt = {});

CMVerdict decide(const GeneratorTuple& g, const DecideOptions& opt = {});

}  // namespace tc4

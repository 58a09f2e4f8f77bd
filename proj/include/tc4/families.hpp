#pragma once

#include "tc4/binomial.hpp"
#include "tc4/cmcheck.hpp"
#include "tc4/gorenstein.hpp"
#include "tc4/hilbert.hpp"
#include "tc4/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tc4 {

enum class FamilyId { e41, gi, e43 };
std::string to_string(FamilyId f);
std::optional<FamilyId> family_from_string(const std::string& s);

struct FamilySpec {
    FamilyId id = FamilyId::e41;
    Int param = 0;  // m for e41/e43, t for gi
};

struct FamilyInstance {
    GeneratorTuple tuple;
    std::vector<Binomial> expected_generators;
    std::optional<PermCase> expected_perm_case;
    bool expected_cm = true;
    bool expected_symmetric = true;
    // e43 extras
    std::optional<MonomialIdeal> expected_leading_ideal;
    std::optional<IntPolynomial> expected_reduced_numerator;
    std::string note;
};

// Concrete member of a family. Throws InvalidInput outside the validity
// range, or for gi parameters violating the gcd = 1 proviso.
FamilyInstance instantiate(const FamilySpec& spec);

// The closed-form reduced Hilbert numerator of the e43 member:
// 1 + 3t + t^2 + ... + t^m + t^{m+2} + t^{m+4} + ... + t^{2m}.
IntPolynomial e43_numerator(Int m);

struct FamilyReport {
    FamilySpec spec;
    bool rejected = false;       // gi gcd proviso
    std::string rejection_note;
    bool ok = false;
    std::vector<std::string> mismatches;
    std::optional<DecideOutcome> outcome;
};

// Runs the full pipeline on the member and compares against the family's
// expectations; every mismatch is reported.
FamilyReport verify_member(const FamilySpec& spec, const DecideOptions& opt = {});

}  // namespace tc4

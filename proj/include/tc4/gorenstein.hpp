#pragma once

#include "tc4/binomial.hpp"
#include "tc4/hilbert.hpp"
#include "tc4/semigroup.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tc4 {

// The six admissible permutations of Bresinsky's generator set when
// n1 < n2 < n3 < n4 is enforced.
enum class PermCase { p1a, p1b, p2a, p2b, p3a, p3b };

std::string to_string(PermCase c);
std::optional<PermCase> perm_case_from_string(const std::string& s);

// A binomial written lhs - rhs with a meaningful orientation (the canonical
// Binomial type deliberately forgets orientation).
struct OrientedBinomial {
    Exponents lhs, rhs;
    Binomial canonical() const { return Binomial::make(lhs, rhs); }
    bool operator==(const OrientedBinomial&) const = default;
};

// Exponent data of the five-generator Gorenstein normal form.
// a[i] is the pure-power exponent of x_{i+1}; aij[i][j] is the exponent of
// x_{j+1} on the monomial side of the generator whose pure power is x_{i+1}
// (zero where the pattern has no such exponent). All labels are in the sorted
// x-frame of the detected permutation case.
struct GorensteinData {
    PermCase perm_case = PermCase::p1a;
    std::array<Int, 4> a{};
    std::array<std::array<Int, 4>, 4> aij{};
    std::array<OrientedBinomial, 5> generators;  // f1..f5, f5 oriented with x1 on the left

    Int A(int i) const { return a[i - 1]; }              // 1-indexed accessors
    Int AIJ(int i, int j) const { return aij[i - 1][j - 1]; }
};

// Matches a 5-element minimal generating set against the six permutation
// patterns (tried in the order 1a, 1b, 2a, 2b, 3a, 3b); empty when the set
// does not have the Gorenstein normal form.
std::optional<GorensteinData> detect_bresinsky(const GeneratorTuple& g,
                                               const std::vector<Binomial>& mingens);

// Checks the four n_i product identities and the four a_i = a_ji + a_ki
// splittings, after relabeling to the reference frame.
bool verify_relations(const GorensteinData& d, const GeneratorTuple& g);

// The five avoidance monomials of the detected case, as a monomial ideal in
// x2, x3, x4. The monomials NOT divisible by them biject with the Apery set
// of S relative to n1 via the S-degree.
MonomialIdeal apery_standard_monomials(const GorensteinData& d);

// Enumerates the standard monomials of apery_standard_monomials (all have
// x1-exponent zero and e_i < a_i).
std::vector<Exponents> apery_monomial_basis(const GorensteinData& d);

bool is_complete_intersection(const GeneratorTuple& g, const std::vector<Binomial>& mingens);

}  // namespace tc4

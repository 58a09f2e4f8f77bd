#pragma once

#include "tc4/binomial.hpp"
#include "tc4/grobner.hpp"
#include "tc4/semigroup.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace tc4 {

// a_i = least positive integer with a_i n_i in the semigroup of the others.
std::array<Int, 4> a_values(const GeneratorTuple& g);

// All critical binomials x_i^{a_i} - x^u with respect to x_i (0-indexed i).
std::vector<Binomial> critical_binomials(const GeneratorTuple& g, int i);

// Basis of the rank-3 integer kernel of u -> sum u_i n_i, by exact
// unimodular column elimination.
std::array<std::array<Int, 4>, 3> lattice_kernel(const GeneratorTuple& g);

// Binomial generators of I(C) by saturating the lattice-basis ideal with
// respect to each variable in turn (S-graded revlex with the variable last,
// then stripping monomial content), iterated to a fixpoint.
std::vector<Binomial> toric_generators_saturation(const GeneratorTuple& g,
                                                  const GBOptions& opt = {});

// Minimal generating set by fiber connectivity: for every S-degree up to the
// bound, the graph on the fiber joining monomials with a common variable;
// each degree contributes one connecting binomial per missing connection.
struct MinimalGenerators {
    std::vector<Binomial> gens;        // sorted by (S-degree, canonical form)
    std::vector<Int> betti_sdegrees;   // parallel to gens
    std::vector<int> fiber_size;       // parallel: |fiber| at the generator's degree
    std::vector<char> plus_isolated;   // parallel: side shares no variable in its fiber
    std::vector<char> minus_isolated;
};

MinimalGenerators minimal_generators_fiber(const GeneratorTuple& g, Int degree_bound,
                                           std::size_t enum_cap = std::size_t(1) << 26);

// Fiber of one S-degree: all monomials of that degree, sorted.
std::vector<Exponents> fiber(const GeneratorTuple& g, Int sdeg);

// b (normalized to canonical form) lies in every minimal binomial generating
// set: its fiber is exactly the two sides and they share no variable.
bool is_indispensable(const GeneratorTuple& g, const Binomial& b);

enum class CaseLabel { c1, c2a, c2b, c2c, c3, c4a, c4b };
std::string to_string(CaseLabel c);

struct CaseReport {
    CaseLabel label = CaseLabel::c1;
    std::array<Int, 4> a{};
    std::array<Int, 4> crit_degrees{};          // a_i * n_i
    Int mu = 0;                                 // minimal generators of the critical ideal
    std::vector<std::vector<int>> degree_classes;  // variables (0-indexed) grouped by a_i n_i
    std::vector<Binomial> critical_gens;        // the set S within the minimal generators
    std::vector<Binomial> set_I;
    std::vector<Binomial> set_R;
    MinimalGenerators mingens;
    bool degenerate = false;                    // some a_i = 1 (embedding dimension < 4)
    bool structure_ok = true;                   // S/I/R shapes match the classification
    std::string structure_note;
};

// Full classification: a-values, case label with mu, and the S / I / R split
// of the minimal generating set. Throws InternalError when the saturation
// and fiber generating sets disagree as ideals.
CaseReport classify(const GeneratorTuple& g, const GBOptions& opt = {});

}  // namespace tc4

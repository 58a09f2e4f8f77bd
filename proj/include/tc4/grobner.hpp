#pragma once

#include "tc4/binomial.hpp"
#include "tc4/gorenstein.hpp"
#include "tc4/hilbert.hpp"
#include "tc4/orders.hpp"

#include <optional>
#include <vector>

namespace tc4 {

struct GBOptions {
    long long max_steps = 1'000'000;  // reduction-step budget per basis computation
};

// A working element of a binomial Groebner/standard basis computation:
// x^lead - x^tail, oriented so that lead is the larger monomial under the
// active order, or a single monomial x^lead. Sides need not be coprime here;
// that matters during lattice-ideal saturation.
struct GBElem {
    Exponents lead;
    Exponents tail{};
    bool has_tail = false;

    static GBElem monomial(const Exponents& m) { return {m, {}, false}; }

    bool operator==(const GBElem&) const = default;
};

// Orients a difference of two monomials under the order; nullopt when they
// coincide (the zero element).
std::optional<GBElem> oriented(const Exponents& p, const Exponents& q, const OrderSpec& o);

std::vector<GBElem> to_elems(const std::vector<Binomial>& v, const OrderSpec& o);

struct StandardBasisResult {
    std::vector<GBElem> basis;
    OrderSpec order;
    bool reduced = false;  // tails fully reduced (always attempted; see mora notes)
};

// Weak normal form: ordinary division for global orders, Mora's normal form
// with ecart selection for local ones. nullopt means the element reduced to 0.
std::optional<GBElem> normal_form(const GBElem& f, const std::vector<GBElem>& basis,
                                  const OrderSpec& o, const GBOptions& opt,
                                  long long& steps);

// Buchberger completion; requires a global order.
StandardBasisResult buchberger(const std::vector<GBElem>& gens, const OrderSpec& o,
                               const GBOptions& opt = {});

// Mora standard basis; requires a local order.
StandardBasisResult mora_standard_basis(const std::vector<GBElem>& gens, const OrderSpec& o,
                                        const GBOptions& opt = {});

bool reduces_to_zero(const Binomial& b, const StandardBasisResult& sb,
                     const GBOptions& opt = {});

// Mutual-reduction certificate that two binomial generating sets present the
// same ideal (Groebner division both ways under graded revlex).
bool same_ideal(const std::vector<Binomial>& a, const std::vector<Binomial>& b,
                const GBOptions& opt = {});

// For each basis element, the homogeneous summand of least total degree:
// the lower-degree side as a monomial, or the whole binomial when balanced.
// Requires a degree-anticompatible local order (neg_degree_lex).
std::vector<GBElem> lowest_forms_ideal(const StandardBasisResult& sb);

// Minimal monomial generators of the leading-term ideal; requires a global
// graded order.
MonomialIdeal leading_term_ideal(const StandardBasisResult& sb);

// Leading ideal of the tangent-cone ideal I(C)_*: Mora standard basis of the
// minimal generators under neg_degree_lex, lowest forms, and, when balanced
// binomials remain, a graded-revlex Groebner pass over the lowest forms.
MonomialIdeal tangent_cone_leading_ideal(const std::vector<Binomial>& mingens,
                                         const GBOptions& opt = {});

// Checks that the five Gorenstein generators are a Groebner basis under the
// lex-inf order mandated for their permutation case: every S-pair has Mora
// normal form zero against the fixed five.
bool verify_lexinf_groebner(const GorensteinData& d, const GBOptions& opt = {});

// The lex-inf variable permutation Proposition 3.5 assigns to each case.
std::array<int, 4> lexinf_permutation(PermCase c);

}  // namespace tc4

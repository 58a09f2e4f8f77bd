#pragma once

#include "tc4/binomial.hpp"
#include "tc4/common.hpp"

#include <string>
#include <vector>

namespace tc4 {

// Integer polynomial in one variable t, coefficients by ascending degree,
// no trailing zeros.
struct IntPolynomial {
    std::vector<Int> c;

    static IntPolynomial one() { return {{1}}; }
    static IntPolynomial from_coefficients(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    Int coefficient(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(k)] : 0;
    }
    Int evaluate(Int t) const;
    bool is_zero() const { return c.empty(); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    // Multiplication by t^k.
    IntPolynomial shifted(int k) const;

    bool operator==(const IntPolynomial&) const = default;
};

std::string to_string(const IntPolynomial& p);

// Monomial ideal in K[x1..x4]: minimal sorted generators.
struct MonomialIdeal {
    std::vector<Exponents> gens;

    // Minimalizes (drops generators divisible by another) and sorts.
    static MonomialIdeal make(std::vector<Exponents> generators);

    bool contains_monomial(const Exponents& m) const {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        return false;
    }
    bool operator==(const MonomialIdeal&) const = default;
};

// Minimal generators of (I : m).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Exponents& m);

// Numerator g(t) of the Hilbert series g(t)/(1-t)^4 of K[x1..x4]/I, computed
// by peeling one generator at a time: p(I) = p(J) - t^|u| p(J : u).
IntPolynomial numerator(const MonomialIdeal& ideal);

// Divides the numerator exactly by (1-t)^(4-dim); inexact division signals
// a wrong dimension and throws InvalidInput.
IntPolynomial reduced_numerator(const MonomialIdeal& ideal, int dim);

// Hilbert function values: number of standard monomials of total degree k,
// for k = 0..horizon.
std::vector<Int> hf_values(const MonomialIdeal& ideal, int horizon);

struct NondecreasingResult {
    bool nondecreasing = false;
    std::string reason;
};

// Requires a dimension-1 quotient (reduced_numerator with dim = 1 succeeds).
// horizon < 0 selects deg(numerator) + 1, past which HF is constant.
NondecreasingResult is_nondecreasing(const MonomialIdeal& ideal, int horizon = -1);

}  // namespace tc4

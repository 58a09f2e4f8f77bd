#pragma once

#include "tc4/common.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace tc4 {

// Exponent vector of a monomial in K[x1..x4].
struct Exponents {
    std::array<Int, 4> e{0, 0, 0, 0};

    Int& operator[](int i) { return e[i]; }
    Int operator[](int i) const { return e[i]; }

    Int total_degree() const { return e[0] + e[1] + e[2] + e[3]; }

    // Bit i set iff x_{i+1} divides the monomial.
    int support_mask() const {
        int m = 0;
        for (int i = 0; i < 4; ++i)
            if (e[i] > 0) m |= 1 << i;
        return m;
    }
    int support_size() const { return __builtin_popcount(support_mask()); }

    bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

    bool divides(const Exponents& m) const {
        for (int i = 0; i < 4; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    friend Exponents operator+(const Exponents& a, const Exponents& b) {
        Exponents r;
        for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    // Componentwise difference; caller guarantees b | a.
    friend Exponents operator-(const Exponents& a, const Exponents& b) {
        Exponents r;
        for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }

    friend Exponents gcd(const Exponents& a, const Exponents& b) {
        Exponents r;
        for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
        return r;
    }
    friend Exponents lcm(const Exponents& a, const Exponents& b) {
        Exponents r;
        for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return r;
    }

    auto operator<=>(const Exponents&) const = default;
};

// x1^a x2^b ... rendered compactly; "1" for the empty monomial.
std::string to_string(const Exponents& m);

// Difference of two coprime monomials of equal S-degree, x^plus - x^minus.
// Canonical form: gcd(plus, minus) = 1, plus != minus, and plus is the
// array-lexicographically larger exponent vector.
struct Binomial {
    Exponents plus, minus;

    // Strips the common factor and orients deterministically.
    // Throws InternalError when the two sides coincide (the zero binomial).
    static Binomial make(const Exponents& a, const Exponents& b);

    // Same unordered pair of monomials, either orientation.
    bool same_up_to_sign(const Binomial& o) const {
        return (plus == o.plus && minus == o.minus) || (plus == o.minus && minus == o.plus);
    }

    auto operator<=>(const Binomial&) const = default;
};

std::string to_string(const Binomial& b);

// True when the two sets contain the same binomials up to sign and order.
bool same_set_up_to_sign(const std::vector<Binomial>& a, const std::vector<Binomial>& b);

}  // namespace tc4

#include "tc4/hilbert.hpp"

#include <algorithm>
#include <map>

namespace tc4 {

IntPolynomial IntPolynomial::from_coefficients(std::vector<Int> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return {std::move(coeffs)};
}

Int IntPolynomial::evaluate(Int t) const {
    Int r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = checked_add(checked_mul(r, t), *it);
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return IntPolynomial::from_coefficients(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return IntPolynomial::from_coefficients(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(a.c[i], b.c[j]));
    return IntPolynomial::from_coefficients(std::move(r));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Int> r(c.size() + static_cast<std::size_t>(k), 0);
    std::copy(c.begin(), c.end(), r.begin() + k);
    return {std::move(r)};
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= p.degree(); ++k) {
        Int ck = p.coefficient(k);
        if (ck == 0) continue;
        if (!s.empty()) s += ck > 0 ? " + " : " - ";
        else if (ck < 0) s += "-";
        Int a = ck > 0 ? ck : -ck;
        if (k == 0) s += std::to_string(a);
        else {
            if (a != 1) s += std::to_string(a) + "*";
            s += "t";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

MonomialIdeal MonomialIdeal::make(std::vector<Exponents> generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Exponents> keep;
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& h : generators)
            if (h != g && h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) keep.push_back(g);
    }
    return {std::move(keep)};
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Exponents& m) {
    std::vector<Exponents> quot;
    quot.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) quot.push_back(g - gcd(g, m));
    return MonomialIdeal::make(std::move(quot));
}

namespace {

IntPolynomial numerator_rec(std::vector<Exponents> gens,
                            std::map<std::vector<Exponents>, IntPolynomial>& memo,
                            int depth) {
    if (depth > 512) throw BudgetExceeded("numerator recursion depth cap exceeded");
    if (gens.empty()) return IntPolynomial::one();
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;
    // peel the last generator in sorted order
    Exponents u = gens.back();
    std::vector<Exponents> rest(gens.begin(), gens.end() - 1);
    MonomialIdeal j{rest};
    MonomialIdeal colon = colon_by_monomial(j, u);
    IntPolynomial pj = numerator_rec(rest, memo, depth + 1);
    IntPolynomial pc = numerator_rec(colon.gens, memo, depth + 1);
    IntPolynomial result = pj - pc.shifted(static_cast<int>(u.total_degree()));
    memo.emplace(std::move(gens), result);
    return result;
}

}  // namespace

IntPolynomial numerator(const MonomialIdeal& ideal) {
    std::map<std::vector<Exponents>, IntPolynomial> memo;
    return numerator_rec(ideal.gens, memo, 0);
}

IntPolynomial reduced_numerator(const MonomialIdeal& ideal, int dim) {
    IntPolynomial p = numerator(ideal);
    for (int k = 0; k < 4 - dim; ++k) {
        // p(t) = (1-t) q(t)  =>  q_i = p_i + q_{i-1}
        std::vector<Int> q;
        q.reserve(p.c.size());
        Int acc = 0;
        for (Int ci : p.c) {
            acc += ci;
            q.push_back(acc);
        }
        if (!q.empty() && q.back() != 0)
            throw InvalidInput("numerator not divisible by (1-t)^" + std::to_string(4 - dim) +
                               "; wrong dimension");
        while (!q.empty() && q.back() == 0) q.pop_back();
        p.c = std::move(q);
    }
    return p;
}

std::vector<Int> hf_values(const MonomialIdeal& ideal, int horizon) {
    if (horizon < 0) throw InvalidInput("negative horizon");
    std::vector<Int> hf(static_cast<std::size_t>(horizon) + 1, 0);
    Exponents m;
    for (Int e1 = 0; e1 <= horizon; ++e1)
        for (Int e2 = 0; e1 + e2 <= horizon; ++e2)
            for (Int e3 = 0; e1 + e2 + e3 <= horizon; ++e3)
                for (Int e4 = 0; e1 + e2 + e3 + e4 <= horizon; ++e4) {
                    m.e = {e1, e2, e3, e4};
                    if (!ideal.contains_monomial(m))
                        ++hf[static_cast<std::size_t>(e1 + e2 + e3 + e4)];
                }
    return hf;
}

NondecreasingResult is_nondecreasing(const MonomialIdeal& ideal, int horizon) {
    IntPolynomial h = reduced_numerator(ideal, 1);  // throws when the dimension exceeds 1
    if (h.evaluate(1) == 0)  // a remaining root at t = 1 betrays dimension < 1
        throw InvalidInput("quotient is not 1-dimensional");
    bool nonneg = true;
    for (Int ci : h.c)
        if (ci < 0) nonneg = false;
    if (nonneg) return {true, "nonnegative numerator"};
    if (horizon < 0) horizon = h.degree() + 1;
    std::vector<Int> hf = hf_values(ideal, horizon);
    for (std::size_t k = 1; k < hf.size(); ++k)
        if (hf[k] < hf[k - 1])
            return {false, "HF decreases at degree " + std::to_string(k)};
    return {true, "direct HF comparison to degree " + std::to_string(horizon)};
}

}  // namespace tc4

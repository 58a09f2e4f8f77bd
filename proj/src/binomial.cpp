#include "tc4/binomial.hpp"

#include <algorithm>

namespace tc4 {

std::string to_string(const Exponents& m) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (m.e[i] == 0) continue;
        s += "x" + std::to_string(i + 1);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

Binomial Binomial::make(const Exponents& a, const Exponents& b) {
    Exponents g = gcd(a, b);
    Exponents p = a - g, q = b - g;
    if (p == q) throw InternalError("zero binomial");
    Binomial r;
    if (q < p) {
        r.plus = p;
        r.minus = q;
    } else {
        r.plus = q;
        r.minus = p;
    }
    return r;
}

std::string to_string(const Binomial& b) {
    return to_string(b.plus) + " - " + to_string(b.minus);
}

bool same_set_up_to_sign(const std::vector<Binomial>& a, const std::vector<Binomial>& b) {
    if (a.size() != b.size()) return false;
    std::vector<Binomial> x = a, y = b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;  // Binomial::make already orients canonically
}

}  // namespace tc4

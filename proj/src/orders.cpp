#include "tc4/orders.hpp"

namespace tc4 {

namespace {

int cmp_lex(const std::array<int, 4>& perm, const Exponents& u, const Exponents& v) {
    for (int p : perm) {
        if (u.e[p] != v.e[p]) return u.e[p] > v.e[p] ? 1 : -1;
    }
    return 0;
}

// Revlex tie-break within one degree stratum: scanning from the least
// significant position, the first difference decides and the SMALLER
// exponent there makes the larger monomial.
int cmp_revlex_tail(const std::array<int, 4>& positions, const Exponents& u,
                    const Exponents& v) {
    for (int k = 3; k >= 0; --k) {
        int p = positions[k];
        if (u.e[p] != v.e[p]) return u.e[p] < v.e[p] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int order_compare(const OrderSpec& o, const Exponents& u, const Exponents& v) {
    switch (o.kind) {
        case OrderKind::lex:
            return cmp_lex(o.perm, u, v);
        case OrderKind::lexinf:
            return -cmp_lex(o.perm, u, v);
        case OrderKind::neg_degree_lex: {
            Int du = u.total_degree(), dv = v.total_degree();
            if (du != dv) return du < dv ? 1 : -1;
            return cmp_lex(o.perm, u, v);
        }
        case OrderKind::graded_revlex: {
            Int du = u.total_degree(), dv = v.total_degree();
            if (du != dv) return du > dv ? 1 : -1;
            return cmp_revlex_tail(o.perm, u, v);
        }
        case OrderKind::sdeg_revlex: {
            Int du = 0, dv = 0;
            for (int i = 0; i < 4; ++i) {
                du += o.weights[i] * u.e[i];
                dv += o.weights[i] * v.e[i];
            }
            if (du != dv) return du > dv ? 1 : -1;
            std::array<int, 4> pos{};
            int k = 0;
            for (int p = 0; p < 4; ++p)
                if (p != o.last) pos[k++] = p;
            pos[3] = o.last;
            return cmp_revlex_tail(pos, u, v);
        }
    }
    return 0;
}

}  // namespace tc4

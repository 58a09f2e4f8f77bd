#pragma once

#include "tc4/binomial.hpp"

#include <array>

namespace tc4 {

enum class OrderKind {
    lex,            // global
    lexinf,         // local: u > v iff u <_lex v (1 is the largest monomial)
    neg_degree_lex, // local, degree-anticompatible: smaller total degree wins, lex tie-break
    graded_revlex,  // global
    sdeg_revlex,    // global: S-degree first, revlex tie-break with a designated last variable
};

struct OrderSpec {
    OrderKind kind = OrderKind::graded_revlex;
    // Significance order for the lex family; perm[0] is the largest variable.
    std::array<int, 4> perm{0, 1, 2, 3};
    // sdeg_revlex parameters: weights and the variable placed revlex-last.
    std::array<Int, 4> weights{1, 1, 1, 1};
    int last = 3;

    bool is_local() const {
        return kind == OrderKind::lexinf || kind == OrderKind::neg_degree_lex;
    }

    static OrderSpec lex_order(std::array<int, 4> perm = {0, 1, 2, 3}) {
        return {OrderKind::lex, perm, {1, 1, 1, 1}, 3};
    }
    static OrderSpec lexinf_order(std::array<int, 4> perm = {0, 1, 2, 3}) {
        return {OrderKind::lexinf, perm, {1, 1, 1, 1}, 3};
    }
    static OrderSpec neg_degree_lex_order(std::array<int, 4> perm = {0, 1, 2, 3}) {
        return {OrderKind::neg_degree_lex, perm, {1, 1, 1, 1}, 3};
    }
    static OrderSpec graded_revlex_order(std::array<int, 4> perm = {0, 1, 2, 3}) {
        return {OrderKind::graded_revlex, perm, {1, 1, 1, 1}, 3};
    }
    static OrderSpec sdeg_revlex_order(std::array<Int, 4> weights, int last) {
        return {OrderKind::sdeg_revlex, {0, 1, 2, 3}, weights, last};
    }
};

// -1, 0, +1 for u < v, u = v, u > v under the order.
int order_compare(const OrderSpec& o, const Exponents& u, const Exponents& v);

}  // namespace tc4

#include "tc4/gorenstein.hpp"

#include <algorithm>

namespace tc4 {

std::string to_string(PermCase c) {
    switch (c) {
        case PermCase::p1a: return "1a";
        case PermCase::p1b: return "1b";
        case PermCase::p2a: return "2a";
        case PermCase::p2b: return "2b";
        case PermCase::p3a: return "3a";
        case PermCase::p3b: return "3b";
    }
    return "?";
}

std::optional<PermCase> perm_case_from_string(const std::string& s) {
    if (s == "1a") return PermCase::p1a;
    if (s == "1b") return PermCase::p1b;
    if (s == "2a") return PermCase::p2a;
    if (s == "2b") return PermCase::p2b;
    if (s == "3a") return PermCase::p3a;
    if (s == "3b") return PermCase::p3b;
    return std::nullopt;
}

namespace {

// One permutation pattern: pair[i] = the two variables (1-indexed) on the
// monomial side of the generator with pure power x_i; f5 encoded as
// ((i,j),(k,l)) meaning f5 = x_i^{a_ki} x_j^{a_lj} - x_k^{a_jk} x_l^{a_il};
// sigma maps the reference-frame roles to sorted variables.
struct Pattern {
    PermCase label;
    std::array<std::array<int, 2>, 5> pair;  // index 1..4 used
    std::array<int, 4> f5;                   // i, j, k, l
    std::array<int, 4> sigma;                // role r (1..4) -> variable sigma[r-1]
};

constexpr std::array<Pattern, 6> kPatterns{{
    {PermCase::p1a, {{{0, 0}, {3, 4}, {1, 4}, {1, 2}, {2, 3}}}, {1, 3, 2, 4}, {1, 2, 3, 4}},
    {PermCase::p1b, {{{0, 0}, {3, 4}, {1, 3}, {2, 4}, {1, 2}}}, {1, 4, 2, 3}, {1, 2, 4, 3}},
    {PermCase::p2a, {{{0, 0}, {2, 3}, {3, 4}, {1, 4}, {1, 2}}}, {2, 4, 1, 3}, {1, 4, 3, 2}},
    {PermCase::p2b, {{{0, 0}, {2, 3}, {1, 4}, {2, 4}, {1, 3}}}, {1, 2, 4, 3}, {1, 4, 2, 3}},
    {PermCase::p3a, {{{0, 0}, {2, 4}, {1, 3}, {1, 4}, {2, 3}}}, {1, 2, 3, 4}, {1, 3, 2, 4}},
    {PermCase::p3b, {{{0, 0}, {2, 4}, {3, 4}, {1, 2}, {1, 3}}}, {2, 3, 1, 4}, {1, 3, 4, 2}},
}};

bool is_pure_power(const Exponents& m, int var /*1..4*/) {
    for (int t = 0; t < 4; ++t)
        if ((m.e[t] > 0) != (t == var - 1)) return false;
    return true;
}

bool supported_on(const Exponents& m, int j, int k /*1..4*/) {
    for (int t = 0; t < 4; ++t) {
        bool allowed = (t == j - 1) || (t == k - 1);
        if (m.e[t] > 0 && !allowed) return false;
        if (m.e[t] == 0 && allowed) return false;  // exponents are strictly positive
    }
    return true;
}

struct MatchState {
    std::array<Int, 4> a{};
    std::array<std::array<Int, 4>, 4> aij{};
    std::array<OrientedBinomial, 5> gens;  // role order f1..f5
};

// Assign generator roles 1..4 with backtracking, then check f5.
bool match_roles(const Pattern& pat, const std::vector<Binomial>& g, int role,
                 std::array<bool, 5>& used, MatchState& st) {
    if (role == 5) {
        int rest = -1;
        for (int t = 0; t < 5; ++t)
            if (!used[t]) rest = t;
        const int i = pat.f5[0], j = pat.f5[1], k = pat.f5[2], l = pat.f5[3];
        Exponents left, right;
        left.e[i - 1] = st.aij[k - 1][i - 1];
        left.e[j - 1] = st.aij[l - 1][j - 1];
        right.e[k - 1] = st.aij[j - 1][k - 1];
        right.e[l - 1] = st.aij[i - 1][l - 1];
        const Binomial& b = g[static_cast<std::size_t>(rest)];
        if ((b.plus == left && b.minus == right) || (b.plus == right && b.minus == left)) {
            // orient f5 with x1 on the left-hand side
            if (left.e[0] > 0)
                st.gens[4] = {left, right};
            else
                st.gens[4] = {right, left};
            return true;
        }
        return false;
    }
    const int j = pat.pair[role][0], k = pat.pair[role][1];
    for (std::size_t t = 0; t < g.size(); ++t) {
        if (used[t]) continue;
        for (const auto& [p, q] : {std::pair{g[t].plus, g[t].minus}, std::pair{g[t].minus, g[t].plus}}) {
            if (!is_pure_power(p, role) || !supported_on(q, j, k)) continue;
            used[t] = true;
            st.a[role - 1] = p.e[role - 1];
            st.aij[role - 1][j - 1] = q.e[j - 1];
            st.aij[role - 1][k - 1] = q.e[k - 1];
            st.gens[static_cast<std::size_t>(role - 1)] = {p, q};
            if (match_roles(pat, g, role + 1, used, st)) return true;
            used[t] = false;
            st.aij[role - 1][j - 1] = 0;
            st.aij[role - 1][k - 1] = 0;
        }
    }
    return false;
}

}  // namespace

std::optional<GorensteinData> detect_bresinsky(const GeneratorTuple& g,
                                               const std::vector<Binomial>& mingens) {
    (void)g;
    if (mingens.size() != 5) return std::nullopt;
    for (const Pattern& pat : kPatterns) {
        MatchState st{};
        std::array<bool, 5> used{};
        if (!match_roles(pat, mingens, 1, used, st)) continue;
        // 0 < a_ij < a_j
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j)
                if (st.aij[i][j] > 0 && st.aij[i][j] >= st.a[j]) ok = false;
        if (!ok) continue;
        GorensteinData d;
        d.perm_case = pat.label;
        d.a = st.a;
        d.aij = st.aij;
        d.generators = st.gens;
        return d;
    }
    return std::nullopt;
}

namespace {

const Pattern& pattern_for(PermCase c) {
    for (const Pattern& p : kPatterns)
        if (p.label == c) return p;
    throw InternalError("unknown permutation case");
}

}  // namespace

bool verify_relations(const GorensteinData& d, const GeneratorTuple& g) {
    const Pattern& pat = pattern_for(d.perm_case);
    auto A = [&](int r) { return d.a[pat.sigma[r - 1] - 1]; };
    auto AL = [&](int r, int s) { return d.aij[pat.sigma[r - 1] - 1][pat.sigma[s - 1] - 1]; };
    auto N = [&](int r) { return g.gens[pat.sigma[r - 1] - 1]; };

    if (A(1) != AL(2, 1) + AL(3, 1)) return false;
    if (A(2) != AL(3, 2) + AL(4, 2)) return false;
    if (A(3) != AL(1, 3) + AL(4, 3)) return false;
    if (A(4) != AL(1, 4) + AL(2, 4)) return false;

    if (N(1) != checked_add(checked_mul(checked_mul(A(2), A(3)), AL(1, 4)),
                            checked_mul(checked_mul(AL(3, 2), AL(1, 3)), AL(2, 4))))
        return false;
    if (N(2) != checked_add(checked_mul(checked_mul(A(3), A(4)), AL(2, 1)),
                            checked_mul(checked_mul(AL(3, 1), AL(4, 3)), AL(2, 4))))
        return false;
    if (N(3) != checked_add(checked_mul(checked_mul(A(1), A(4)), AL(3, 2)),
                            checked_mul(checked_mul(AL(1, 4), AL(4, 2)), AL(3, 1))))
        return false;
    if (N(4) != checked_add(checked_mul(checked_mul(A(1), A(2)), AL(4, 3)),
                            checked_mul(checked_mul(AL(4, 2), AL(2, 1)), AL(1, 3))))
        return false;
    return true;
}

MonomialIdeal apery_standard_monomials(const GorensteinData& d) {
    auto mono = [](int v1, Int e1, int v2, Int e2) {
        Exponents m;
        m.e[v1 - 1] = e1;
        if (v2) m.e[v2 - 1] = e2;
        return m;
    };
    std::vector<Exponents> avoid;
    avoid.push_back(mono(2, d.A(2), 0, 0));
    avoid.push_back(mono(3, d.A(3), 0, 0));
    avoid.push_back(mono(4, d.A(4), 0, 0));
    switch (d.perm_case) {
        case PermCase::p1a:
            avoid.push_back(mono(3, d.AIJ(1, 3), 4, d.AIJ(1, 4)));
            avoid.push_back(mono(2, d.AIJ(3, 2), 4, d.AIJ(1, 4)));
            break;
        case PermCase::p1b:
            avoid.push_back(mono(3, d.AIJ(1, 3), 4, d.AIJ(1, 4)));
            avoid.push_back(mono(2, d.AIJ(4, 2), 3, d.AIJ(1, 3)));
            break;
        case PermCase::p2a:
            avoid.push_back(mono(2, d.AIJ(1, 2), 3, d.AIJ(1, 3)));
            avoid.push_back(mono(2, d.AIJ(1, 2), 4, d.AIJ(3, 4)));
            break;
        case PermCase::p2b:
            avoid.push_back(mono(2, d.AIJ(1, 2), 3, d.AIJ(1, 3)));
            avoid.push_back(mono(3, d.AIJ(1, 3), 4, d.AIJ(2, 4)));
            break;
        case PermCase::p3a:
            avoid.push_back(mono(2, d.AIJ(1, 2), 4, d.AIJ(1, 4)));
            avoid.push_back(mono(3, d.AIJ(2, 3), 4, d.AIJ(1, 4)));
            break;
        case PermCase::p3b:
            avoid.push_back(mono(2, d.AIJ(1, 2), 4, d.AIJ(1, 4)));
            avoid.push_back(mono(2, d.AIJ(1, 2), 3, d.AIJ(4, 3)));
            break;
    }
    return MonomialIdeal::make(std::move(avoid));
}

std::vector<Exponents> apery_monomial_basis(const GorensteinData& d) {
    MonomialIdeal avoid = apery_standard_monomials(d);
    std::vector<Exponents> basis;
    for (Int e2 = 0; e2 < d.A(2); ++e2)
        for (Int e3 = 0; e3 < d.A(3); ++e3)
            for (Int e4 = 0; e4 < d.A(4); ++e4) {
                Exponents m;
                m.e = {0, e2, e3, e4};
                if (!avoid.contains_monomial(m)) basis.push_back(m);
            }
    return basis;
}

bool is_complete_intersection(const GeneratorTuple& g, const std::vector<Binomial>& mingens) {
    (void)g;
    return mingens.size() == 3;
}

}  // namespace tc4

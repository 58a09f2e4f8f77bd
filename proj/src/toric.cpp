#include "tc4/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tc4 {

std::array<Int, 4> a_values(const GeneratorTuple& g) {
    std::array<Int, 4> a{};
    for (int i = 0; i < 4; ++i) {
        std::vector<Int> others;
        for (int j = 0; j < 4; ++j)
            if (j != i) others.push_back(g.gens[j]);
        SubsetSemigroup t(others);
        // k n_i must be a multiple of gcd(others); beyond the conductor every
        // such multiple is a member, so the search is bounded.
        Int cap = checked_add(checked_mul(t.gcd_value(),
                                          (t.conductor() + g.gens[i] - 1) / g.gens[i]),
                              t.gcd_value());
        for (Int k = 1; k <= cap; ++k)
            if (t.contains(checked_mul(k, g.gens[i]))) {
                a[i] = k;
                break;
            }
        if (a[i] == 0) throw InternalError("a_i search exceeded its bound");
    }
    return a;
}

std::vector<Exponents> fiber(const GeneratorTuple& g, Int sdeg) {
    std::vector<Exponents> out;
    for (Int u4 = 0; u4 * g.gens[3] <= sdeg; ++u4) {
        Int r3 = sdeg - u4 * g.gens[3];
        for (Int u3 = 0; u3 * g.gens[2] <= r3; ++u3) {
            Int r2 = r3 - u3 * g.gens[2];
            for (Int u2 = 0; u2 * g.gens[1] <= r2; ++u2) {
                Int r1 = r2 - u2 * g.gens[1];
                if (r1 % g.gens[0] == 0) {
                    Exponents m;
                    m.e = {r1 / g.gens[0], u2, u3, u4};
                    out.push_back(m);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Binomial> critical_binomials(const GeneratorTuple& g, int i) {
    std::array<Int, 4> a = a_values(g);
    Exponents power;
    power.e[i] = a[i];
    std::vector<Binomial> out;
    for (const Exponents& u : fiber(g, checked_mul(a[i], g.gens[i])))
        if (u.e[i] == 0) out.push_back(Binomial::make(power, u));
    std::sort(out.begin(), out.end());
    return out;
}

std::array<std::array<Int, 4>, 3> lattice_kernel(const GeneratorTuple& g) {
    // column operations on v = gens, mirrored on U (starts as identity);
    // columns of U where v vanishes span the kernel
    std::array<Int, 4> v = g.gens;
    std::array<std::array<Int, 4>, 4> u{};  // u[c] = column c
    for (int c = 0; c < 4; ++c) u[c][c] = 1;

    for (;;) {
        int pivot = -1;
        for (int c = 0; c < 4; ++c)
            if (v[c] != 0 && (pivot < 0 || std::abs(v[c]) < std::abs(v[pivot]))) pivot = c;
        bool done = true;
        for (int c = 0; c < 4; ++c) {
            if (c == pivot || v[c] == 0) continue;
            Int q = v[c] / v[pivot];
            v[c] -= q * v[pivot];
            for (int r = 0; r < 4; ++r) u[c][r] -= checked_mul(q, u[pivot][r]);
            if (v[c] != 0) done = false;
        }
        if (done) break;
    }

    std::array<std::array<Int, 4>, 3> basis{};
    int k = 0;
    for (int c = 0; c < 4; ++c)
        if (v[c] == 0) {
            if (k >= 3) throw InternalError("kernel rank exceeds 3");
            basis[k++] = u[c];
        }
    if (k != 3) throw InternalError("kernel rank below 3");
    return basis;
}

namespace {

GBElem kernel_vector_to_elem(const std::array<Int, 4>& v, const OrderSpec& o) {
    Exponents p, q;
    for (int i = 0; i < 4; ++i) {
        if (v[i] > 0) p.e[i] = v[i];
        if (v[i] < 0) q.e[i] = -v[i];
    }
    auto e = oriented(p, q, o);
    if (!e) throw InternalError("zero kernel vector");
    return *e;
}

std::vector<Binomial> strip_to_binomials(const std::vector<GBElem>& v) {
    std::vector<Binomial> out;
    out.reserve(v.size());
    for (const GBElem& e : v) {
        if (!e.has_tail) throw InternalError("monomial appeared inside a lattice ideal");
        out.push_back(Binomial::make(e.lead, e.tail));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<Binomial> toric_generators_saturation(const GeneratorTuple& g, const GBOptions& opt) {
    auto kernel = lattice_kernel(g);
    OrderSpec seed = OrderSpec::sdeg_revlex_order(g.gens, 3);
    std::vector<Binomial> current;
    {
        std::vector<GBElem> elems;
        for (const auto& v : kernel) elems.push_back(kernel_vector_to_elem(v, seed));
        current = strip_to_binomials(elems);
    }
    // One pass of variable-by-variable saturation reaches I(C); iterate until
    // a whole pass is a no-op as an internal check.
    for (int pass = 0; pass < 8; ++pass) {
        std::vector<Binomial> start = current;
        for (int var = 0; var < 4; ++var) {
            OrderSpec o = OrderSpec::sdeg_revlex_order(g.gens, var);
            StandardBasisResult gb = buchberger(to_elems(current, o), o, opt);
            current = strip_to_binomials(gb.basis);
        }
        if (current == start) return current;
    }
    throw InternalError("lattice saturation did not reach a fixpoint");
}

namespace {

// connected components of the common-variable graph on a fiber, via the
// 15 possible support masks
std::vector<std::vector<Exponents>> fiber_components(const std::vector<Exponents>& f) {
    std::array<int, 16> parent{};
    for (int m = 0; m < 16; ++m) parent[m] = m;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::array<bool, 16> present{};
    for (const Exponents& u : f) present[u.support_mask()] = true;
    for (int m1 = 1; m1 < 16; ++m1)
        for (int m2 = m1 + 1; m2 < 16; ++m2)
            if (present[m1] && present[m2] && (m1 & m2)) parent[find(m1)] = find(m2);
    std::map<int, std::vector<Exponents>> comp;
    for (const Exponents& u : f) comp[find(u.support_mask())].push_back(u);
    std::vector<std::vector<Exponents>> out;
    out.reserve(comp.size());
    for (auto& [root, members] : comp) out.push_back(std::move(members));
    return out;
}

struct EdgeRank {
    int cls;
    std::array<Int, 2> vars;  // critical pure-power variables involved (sorted; -1 pad)
    Exponents lo, hi;
    bool operator<(const EdgeRank& o) const {
        if (cls != o.cls) return cls < o.cls;
        if (vars != o.vars) return vars < o.vars;
        if (lo != o.lo) return lo < o.lo;
        return hi < o.hi;
    }
};

int pure_variable(const Exponents& m) {
    int mask = m.support_mask();
    if (__builtin_popcount(mask) != 1) return -1;
    return __builtin_ctz(mask);
}

// Preference used when choosing the connecting binomial between two fiber
// components: critical pure powers first, then the full-support 2|2 split of
// the classification, then anything, with lexicographic tie-breaks.
EdgeRank rank_edge(const Exponents& u, const Exponents& v, const std::array<Int, 4>& a) {
    auto crit = [&](const Exponents& m) {
        int p = pure_variable(m);
        return p >= 0 && m.e[p] == a[p] ? p : -1;
    };
    int cu = crit(u), cv = crit(v);
    EdgeRank r;
    r.lo = std::min(u, v);
    r.hi = std::max(u, v);
    r.vars = {-1, -1};
    if (cu >= 0 && cv >= 0) {
        r.cls = 0;
        r.vars = {std::min(cu, cv), std::max(cu, cv)};
    } else if (cu >= 0 || cv >= 0) {
        r.cls = 1;
        r.vars = {std::max(cu, cv), -1};
    } else {
        int mu = u.support_mask(), mv = v.support_mask();
        bool split22 = (mu | mv) == 15 && __builtin_popcount(mu) == 2 &&
                       __builtin_popcount(mv) == 2;
        r.cls = split22 ? 2 : 3;
    }
    return r;
}

}  // namespace

MinimalGenerators minimal_generators_fiber(const GeneratorTuple& g, Int degree_bound,
                                           std::size_t enum_cap) {
    if (degree_bound < 0) throw InvalidInput("negative degree bound");
    if (degree_bound >= (Int(1) << 27))
        throw BudgetExceeded("fiber degree bound " + std::to_string(degree_bound) +
                             " too large to bucket");
    std::array<Int, 4> a = a_values(g);

    // bucket all monomials of S-degree <= bound
    std::vector<std::vector<Exponents>> bucket(static_cast<std::size_t>(degree_bound) + 1);
    std::size_t count = 0;
    for (Int u4 = 0; u4 * g.gens[3] <= degree_bound; ++u4) {
        Int d4 = u4 * g.gens[3];
        for (Int u3 = 0; d4 + u3 * g.gens[2] <= degree_bound; ++u3) {
            Int d3 = d4 + u3 * g.gens[2];
            for (Int u2 = 0; d3 + u2 * g.gens[1] <= degree_bound; ++u2) {
                Int d2 = d3 + u2 * g.gens[1];
                for (Int u1 = 0; d2 + u1 * g.gens[0] <= degree_bound; ++u1) {
                    if (++count > enum_cap)
                        throw BudgetExceeded("fiber enumeration cap exceeded");
                    Exponents m;
                    m.e = {u1, u2, u3, u4};
                    bucket[static_cast<std::size_t>(d2 + u1 * g.gens[0])].push_back(m);
                }
            }
        }
    }

    MinimalGenerators result;
    for (Int s = 0; s <= degree_bound; ++s) {
        auto& f = bucket[static_cast<std::size_t>(s)];
        if (f.size() < 2) continue;
        auto comps = fiber_components(f);
        if (comps.size() < 2) continue;
        std::sort(f.begin(), f.end());

        auto isolated = [&](const Exponents& m) {
            for (const auto& c : comps)
                if (c.size() == 1 && c[0] == m) return true;
            return false;
        };

        // representatives per component: critical pure powers, the smallest
        // member per 2-variable support mask, and the smallest member overall
        struct Reps {
            std::vector<Exponents> all;
        };
        std::vector<Reps> reps(comps.size());
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            auto& c = comps[ci];
            std::sort(c.begin(), c.end());
            std::map<int, Exponents> by_mask;
            for (const Exponents& m : c) {
                int mask = m.support_mask();
                if (!by_mask.count(mask)) by_mask.emplace(mask, m);
                int p = pure_variable(m);
                if (p >= 0 && m.e[p] == a[p]) reps[ci].all.push_back(m);
            }
            for (auto& [mask, m] : by_mask)
                if (__builtin_popcount(mask) <= 2) reps[ci].all.push_back(m);
            reps[ci].all.push_back(c.front());
            std::sort(reps[ci].all.begin(), reps[ci].all.end());
            reps[ci].all.erase(std::unique(reps[ci].all.begin(), reps[ci].all.end()),
                               reps[ci].all.end());
        }

        struct Edge {
            EdgeRank rank;
            std::size_t ci, cj;
            Exponents u, v;
            bool operator<(const Edge& o) const { return rank < o.rank; }
        };
        std::vector<Edge> edges;
        for (std::size_t ci = 0; ci < comps.size(); ++ci)
            for (std::size_t cj = ci + 1; cj < comps.size(); ++cj)
                for (const Exponents& u : reps[ci].all)
                    for (const Exponents& v : reps[cj].all)
                        edges.push_back({rank_edge(u, v, a), ci, cj, u, v});
        std::sort(edges.begin(), edges.end());

        std::vector<std::size_t> parent(comps.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Edge& e : edges) {
            std::size_t ri = find(e.ci), rj = find(e.cj);
            if (ri == rj) continue;
            parent[ri] = rj;
            result.gens.push_back(Binomial::make(e.u, e.v));
            result.betti_sdegrees.push_back(s);
            result.fiber_size.push_back(static_cast<int>(f.size()));
            const Binomial& b = result.gens.back();
            result.plus_isolated.push_back(isolated(b.plus));
            result.minus_isolated.push_back(isolated(b.minus));
        }
    }
    return result;
}

bool is_indispensable(const GeneratorTuple& g, const Binomial& raw) {
    Binomial b = Binomial::make(raw.plus, raw.minus);
    Int sp = g.s_degree(b.plus), sm = g.s_degree(b.minus);
    if (sp != sm) throw InvalidInput("binomial sides have different S-degrees");
    std::vector<Exponents> f = fiber(g, sp);
    if (f.size() != 2) return false;
    if (!((f[0] == b.plus && f[1] == b.minus) || (f[0] == b.minus && f[1] == b.plus)))
        return false;
    return (b.plus.support_mask() & b.minus.support_mask()) == 0;
}

std::string to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::c1: return "1";
        case CaseLabel::c2a: return "2a";
        case CaseLabel::c2b: return "2b";
        case CaseLabel::c2c: return "2c";
        case CaseLabel::c3: return "3";
        case CaseLabel::c4a: return "4a";
        case CaseLabel::c4b: return "4b";
    }
    return "?";
}

namespace {

// mu(C_A): graded greedy over all critical binomials with Groebner
// membership against the already-kept ones.
Int critical_mu(const GeneratorTuple& g, const std::array<Int, 4>& a, const GBOptions& opt) {
    std::vector<std::pair<Int, Binomial>> crit;
    for (int i = 0; i < 4; ++i)
        for (const Binomial& b : critical_binomials(g, i))
            crit.emplace_back(checked_mul(a[i], g.gens[i]), b);
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

    OrderSpec o = OrderSpec::graded_revlex_order();
    std::vector<Binomial> kept;
    for (const auto& [deg, b] : crit) {
        if (kept.empty()) {
            kept.push_back(b);
            continue;
        }
        StandardBasisResult gb = buchberger(to_elems(kept, o), o, opt);
        if (!reduces_to_zero(b, gb, opt)) kept.push_back(b);
    }
    return static_cast<Int>(kept.size());
}

bool exponents_below(const Exponents& m, const std::array<Int, 4>& a) {
    for (int i = 0; i < 4; ++i)
        if (m.e[i] > 0 && m.e[i] >= a[i]) return false;
    return true;
}

}  // namespace

CaseReport classify(const GeneratorTuple& g, const GBOptions& opt) {
    CaseReport rep;
    rep.a = a_values(g);
    for (int i = 0; i < 4; ++i) {
        rep.crit_degrees[i] = checked_mul(rep.a[i], g.gens[i]);
        if (rep.a[i] == 1) rep.degenerate = true;
    }

    std::vector<Binomial> satgens = toric_generators_saturation(g, opt);
    Int bound = 0;
    for (int i = 0; i < 4; ++i) bound = std::max(bound, checked_mul(2, rep.crit_degrees[i]));
    for (const Binomial& b : satgens) bound = std::max(bound, g.s_degree(b.plus));
    rep.mingens = minimal_generators_fiber(g, bound);

    if (!same_ideal(satgens, rep.mingens.gens, opt))
        throw InternalError("saturation and fiber generating sets disagree");

    rep.mu = critical_mu(g, rep.a, opt);

    // group variables by critical degree
    std::map<Int, std::vector<int>> groups;
    for (int i = 0; i < 4; ++i) groups[rep.crit_degrees[i]].push_back(i);
    for (auto& [deg, vars] : groups) rep.degree_classes.push_back(vars);
    std::sort(rep.degree_classes.begin(), rep.degree_classes.end(),
              [](const auto& x, const auto& y) {
                  return x.size() != y.size() ? x.size() > y.size() : x < y;
              });

    std::vector<std::size_t> sizes;
    for (const auto& c : rep.degree_classes) sizes.push_back(c.size());
    if (sizes == std::vector<std::size_t>{1, 1, 1, 1})
        rep.label = CaseLabel::c1;
    else if (sizes == std::vector<std::size_t>{2, 2})
        rep.label = rep.mu == 3 ? CaseLabel::c2a : CaseLabel::c2b;
    else if (sizes == std::vector<std::size_t>{4})
        rep.label = CaseLabel::c2c;
    else if (sizes == std::vector<std::size_t>{3, 1})
        rep.label = CaseLabel::c3;
    else if (sizes == std::vector<std::size_t>{2, 1, 1})
        rep.label = rep.mu == 4 ? CaseLabel::c4a : CaseLabel::c4b;
    else
        throw InternalError("impossible critical-degree partition");

    // split the minimal generators into S, I and R
    for (std::size_t k = 0; k < rep.mingens.gens.size(); ++k) {
        const Binomial& b = rep.mingens.gens[k];
        auto critical_side = [&](const Exponents& m) {
            int p = pure_variable(m);
            return p >= 0 && m.e[p] == rep.a[p];
        };
        if (critical_side(b.plus) || critical_side(b.minus)) {
            rep.critical_gens.push_back(b);
            continue;
        }
        bool in_I = false;
        if (b.plus.support_size() == 2 && b.minus.support_size() == 2) {
            if (exponents_below(b.plus, rep.a) && rep.mingens.minus_isolated[k]) in_I = true;
            if (exponents_below(b.minus, rep.a) && rep.mingens.plus_isolated[k]) in_I = true;
        }
        (in_I ? rep.set_I : rep.set_R).push_back(b);
    }

    // shape checks backing the per-case predicates
    if (!rep.degenerate) {
        switch (rep.label) {
            case CaseLabel::c1:
            case CaseLabel::c2c:
            case CaseLabel::c3:
            case CaseLabel::c4a:
                if (!rep.set_R.empty()) {
                    rep.structure_ok = false;
                    rep.structure_note = "unexpected nonempty R in case " + to_string(rep.label);
                }
                break;
            default:
                break;
        }
        std::map<CaseLabel, Int> expected_mu{
            {CaseLabel::c1, 4},  {CaseLabel::c2a, 3}, {CaseLabel::c2b, 2},
            {CaseLabel::c2c, 3}, {CaseLabel::c3, 3},  {CaseLabel::c4a, 4},
            {CaseLabel::c4b, 3}};
        if (rep.mu != expected_mu[rep.label]) {
            rep.structure_ok = false;
            rep.structure_note += std::string(rep.structure_note.empty() ? "" : "; ") +
                                  "mu=" + std::to_string(rep.mu) +
                                  " unexpected for case " + to_string(rep.label);
        }
    }
    return rep;
}

}  // namespace tc4

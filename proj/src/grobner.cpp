#include "tc4/grobner.hpp"

#include <algorithm>
#include <deque>

namespace tc4 {

std::optional<GBElem> oriented(const Exponents& p, const Exponents& q, const OrderSpec& o) {
    int c = order_compare(o, p, q);
    if (c == 0) return std::nullopt;
    if (c > 0) return GBElem{p, q, true};
    return GBElem{q, p, true};
}

std::vector<GBElem> to_elems(const std::vector<Binomial>& v, const OrderSpec& o) {
    std::vector<GBElem> out;
    out.reserve(v.size());
    for (const Binomial& b : v) {
        auto e = oriented(b.plus, b.minus, o);
        if (!e) throw InternalError("zero binomial in generating set");
        out.push_back(*e);
    }
    return out;
}

namespace {

Int ecart(const GBElem& f) {
    if (!f.has_tail) return 0;
    Int dl = f.lead.total_degree(), dt = f.tail.total_degree();
    return dt > dl ? dt - dl : 0;
}

// One reduction step of h by g (lead(g) | lead(h)); nullopt = reduced to zero.
std::optional<GBElem> reduce_step(const GBElem& h, const GBElem& g, const OrderSpec& o) {
    Exponents q = h.lead - g.lead;
    if (!g.has_tail) {
        if (!h.has_tail) return std::nullopt;
        return GBElem::monomial(h.tail);  // unit coefficient dropped
    }
    Exponents repl = q + g.tail;
    if (!h.has_tail) return GBElem::monomial(repl);
    if (repl == h.tail) return std::nullopt;
    return oriented(repl, h.tail, o);
}

std::optional<GBElem> spoly(const GBElem& f, const GBElem& g, const OrderSpec& o) {
    Exponents m = lcm(f.lead, g.lead);
    // S = x^{m-lf} f - x^{m-lg} g; the x^m heads cancel.
    bool fa = f.has_tail, ga = g.has_tail;
    Exponents a, b;
    if (fa) a = (m - f.lead) + f.tail;
    if (ga) b = (m - g.lead) + g.tail;
    if (!fa && !ga) return std::nullopt;
    if (!fa) return GBElem::monomial(b);
    if (!ga) return GBElem::monomial(a);
    if (a == b) return std::nullopt;
    return oriented(b, a, o);
}

void charge(long long& steps, const GBOptions& opt) {
    if (++steps > opt.max_steps)
        throw BudgetExceeded("Groebner step budget exceeded (" +
                             std::to_string(opt.max_steps) + " reductions)");
}

std::optional<GBElem> nf_global(GBElem h, const std::vector<GBElem>& basis, const OrderSpec& o,
                                const GBOptions& opt, long long& steps) {
    for (;;) {
        const GBElem* div = nullptr;
        for (const GBElem& g : basis)
            if (g.lead.divides(h.lead)) {
                div = &g;
                break;
            }
        if (!div) return h;
        charge(steps, opt);
        auto next = reduce_step(h, *div, o);
        if (!next) return std::nullopt;
        h = *next;
    }
}

std::optional<GBElem> nf_mora(GBElem h, const std::vector<GBElem>& basis, const OrderSpec& o,
                              const GBOptions& opt, long long& steps) {
    std::vector<GBElem> reducers = basis;
    for (;;) {
        const GBElem* best = nullptr;
        Int best_ecart = 0;
        for (const GBElem& g : reducers)
            if (g.lead.divides(h.lead)) {
                Int e = ecart(g);
                if (!best || e < best_ecart) {
                    best = &g;
                    best_ecart = e;
                }
            }
        if (!best) return h;
        charge(steps, opt);
        GBElem chosen = *best;  // push_back below may reallocate
        if (best_ecart > ecart(h)) reducers.push_back(h);
        auto next = reduce_step(h, chosen, o);
        if (!next) return std::nullopt;
        h = *next;
    }
}

bool coprime_leads(const GBElem& f, const GBElem& g) {
    return (f.lead.support_mask() & g.lead.support_mask()) == 0;
}

// Drop elements whose lead is divisible by another kept lead.
std::vector<GBElem> minimalize(std::vector<GBElem> v) {
    std::sort(v.begin(), v.end(), [](const GBElem& a, const GBElem& b) {
        return a.lead != b.lead ? a.lead < b.lead : a.tail < b.tail;
    });
    std::vector<GBElem> keep;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < v.size() && !redundant; ++j) {
            if (i == j) continue;
            if (v[j].lead == v[i].lead)
                redundant = j < i;
            else
                redundant = v[j].lead.divides(v[i].lead);
        }
        if (!redundant) keep.push_back(v[i]);
    }
    return keep;
}

StandardBasisResult complete(std::vector<GBElem> basis, const OrderSpec& o,
                             const GBOptions& opt, bool local) {
    long long steps = 0;
    auto nf = local ? nf_mora : nf_global;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (coprime_leads(basis[i], basis[j])) continue;  // product criterion
        auto s = spoly(basis[i], basis[j], o);
        if (!s) continue;
        auto r = nf(*s, basis, o, opt, steps);
        if (!r) continue;
        basis.push_back(*r);
        for (std::size_t t = 0; t + 1 < basis.size(); ++t)
            pairs.emplace_back(basis.size() - 1, t);
    }
    std::vector<GBElem> minimal = minimalize(std::move(basis));

    // Tail reduction against the other elements. Terminates for global
    // orders; for local ones each tail gets a bounded attempt and failures
    // leave the element unreduced.
    bool reduced = true;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        GBElem& g = minimal[i];
        if (!g.has_tail) continue;
        std::vector<GBElem> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        GBElem t = GBElem::monomial(g.tail);
        long long tail_steps = 0;
        GBOptions tail_opt{local ? 64 : opt.max_steps};
        try {
            auto r = nf(t, others, o, tail_opt, tail_steps);
            if (!r) {
                // the tail lies in the ideal, so the lead alone does too
                g.has_tail = false;
                g.tail = Exponents{};
            } else if (r->lead != g.lead) {
                g.tail = r->lead;
            } else {
                reduced = false;
            }
        } catch (const BudgetExceeded&) {
            reduced = false;
        }
    }
    return {minimalize(std::move(minimal)), o, reduced};
}

}  // namespace

std::optional<GBElem> normal_form(const GBElem& f, const std::vector<GBElem>& basis,
                                  const OrderSpec& o, const GBOptions& opt,
                                  long long& steps) {
    return o.is_local() ? nf_mora(f, basis, o, opt, steps) : nf_global(f, basis, o, opt, steps);
}

StandardBasisResult buchberger(const std::vector<GBElem>& gens, const OrderSpec& o,
                               const GBOptions& opt) {
    if (o.is_local()) throw InvalidInput("buchberger requires a global order");
    return complete(gens, o, opt, false);
}

StandardBasisResult mora_standard_basis(const std::vector<GBElem>& gens, const OrderSpec& o,
                                        const GBOptions& opt) {
    if (!o.is_local()) throw InvalidInput("mora_standard_basis requires a local order");
    return complete(gens, o, opt, true);
}

bool reduces_to_zero(const Binomial& b, const StandardBasisResult& sb, const GBOptions& opt) {
    auto e = oriented(b.plus, b.minus, sb.order);
    if (!e) return true;
    long long steps = 0;
    return !normal_form(*e, sb.basis, sb.order, opt, steps).has_value();
}

bool same_ideal(const std::vector<Binomial>& a, const std::vector<Binomial>& b,
                const GBOptions& opt) {
    OrderSpec o = OrderSpec::graded_revlex_order();
    StandardBasisResult ga = buchberger(to_elems(a, o), o, opt);
    StandardBasisResult gb = buchberger(to_elems(b, o), o, opt);
    for (const Binomial& x : b)
        if (!reduces_to_zero(x, ga, opt)) return false;
    for (const Binomial& x : a)
        if (!reduces_to_zero(x, gb, opt)) return false;
    return true;
}

std::vector<GBElem> lowest_forms_ideal(const StandardBasisResult& sb) {
    if (sb.order.kind != OrderKind::neg_degree_lex)
        throw InvalidInput("lowest forms need a degree-anticompatible local order");
    std::vector<GBElem> out;
    out.reserve(sb.basis.size());
    for (const GBElem& g : sb.basis) {
        if (!g.has_tail) {
            out.push_back(g);
            continue;
        }
        Int dl = g.lead.total_degree(), dt = g.tail.total_degree();
        if (dl < dt)
            out.push_back(GBElem::monomial(g.lead));
        else if (dt < dl)
            out.push_back(GBElem::monomial(g.tail));
        else
            out.push_back(g);
    }
    return out;
}

MonomialIdeal leading_term_ideal(const StandardBasisResult& sb) {
    if (sb.order.is_local())
        throw InvalidInput("leading_term_ideal requires a global order");
    std::vector<Exponents> lt;
    lt.reserve(sb.basis.size());
    for (const GBElem& g : sb.basis) lt.push_back(g.lead);
    return MonomialIdeal::make(std::move(lt));
}

MonomialIdeal tangent_cone_leading_ideal(const std::vector<Binomial>& mingens,
                                         const GBOptions& opt) {
    OrderSpec local = OrderSpec::neg_degree_lex_order();
    StandardBasisResult sb = mora_standard_basis(to_elems(mingens, local), local, opt);
    std::vector<GBElem> lf = lowest_forms_ideal(sb);
    bool balanced = false;
    for (const GBElem& g : lf)
        if (g.has_tail) balanced = true;
    if (!balanced) {
        std::vector<Exponents> mono;
        mono.reserve(lf.size());
        for (const GBElem& g : lf) mono.push_back(g.lead);
        return MonomialIdeal::make(std::move(mono));
    }
    // Hilbert functions are invariant under passing to the leading-term ideal
    // of the homogeneous ideal I_* under a global graded order.
    OrderSpec global = OrderSpec::graded_revlex_order();
    std::vector<GBElem> regraded;
    regraded.reserve(lf.size());
    for (const GBElem& g : lf) {
        if (!g.has_tail) {
            regraded.push_back(g);
        } else {
            auto e = oriented(g.lead, g.tail, global);
            if (!e) throw InternalError("degenerate balanced binomial");
            regraded.push_back(*e);
        }
    }
    return leading_term_ideal(buchberger(regraded, global, opt));
}

std::array<int, 4> lexinf_permutation(PermCase c) {
    switch (c) {
        case PermCase::p2a:
        case PermCase::p3b:
            return {0, 2, 1, 3};  // x1 > x3 > x2 > x4
        default:
            return {0, 1, 2, 3};  // x1 > x2 > x3 > x4
    }
}

bool verify_lexinf_groebner(const GorensteinData& d, const GBOptions& opt) {
    OrderSpec o = OrderSpec::lexinf_order(lexinf_permutation(d.perm_case));
    std::vector<GBElem> basis;
    basis.reserve(5);
    for (const OrientedBinomial& f : d.generators) {
        auto e = oriented(f.lhs, f.rhs, o);
        if (!e) return false;
        basis.push_back(*e);
    }
    long long steps = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            auto s = spoly(basis[i], basis[j], o);
            if (!s) continue;
            if (nf_mora(*s, basis, o, opt, steps).has_value()) return false;
        }
    return true;
}

}  // namespace tc4

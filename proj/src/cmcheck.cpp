#include "tc4/cmcheck.hpp"

#include <algorithm>
#include <chrono>

namespace {
double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}
}  // namespace

namespace tc4 {

std::string to_string(CmMethod m) {
    switch (m) {
        case CmMethod::herzog_oracle: return "herzog_oracle";
        case CmMethod::closed_form: return "closed_form";
        case CmMethod::appendix_predicate: return "appendix_predicate";
        case CmMethod::case1_sufficient: return "case1_sufficient";
    }
    return "?";
}

CMVerdict herzog_oracle(const GeneratorTuple& g, const MembershipTables& t,
                        const OracleOptions& opt) {
    const Int n1 = g.gens[0], n2 = g.gens[1], n3 = g.gens[2], n4 = g.gens[3];
    const Int b2 = g.box_bounds[1], b3 = g.box_bounds[2], b4 = g.box_bounds[3];
    const Int need = (b2 - 1) * n2 + (b3 - 1) * n3 + (b4 - 1) * n4;
    if (t.limit < need)
        throw InvalidInput("membership table too small for the oracle box");

    using Clock = std::chrono::steady_clock;
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(opt.timeout_secs));
    const int32_t* ml = t.max_len.data();

    for (Int v4 = 0; v4 < b4; ++v4) {
        for (Int v3 = 0; v3 < b3; ++v3) {
            if (Clock::now() > deadline)
                throw BudgetExceeded("oracle timeout after " +
                                     std::to_string(opt.timeout_secs) + " s");
            const Int base = v4 * n4 + v3 * n3;
            const Int sum34 = v4 + v3;
            Int m = base - n1;  // S-degree minus n1 at v2 = 0
            for (Int v2 = 0; v2 < b2; ++v2, m += n2) {
                if (m < 0) continue;
                const int32_t len = ml[m];
                if (len >= 0 && sum34 + v2 > Int(len) + 1) {
                    CMVerdict v;
                    v.is_cm = false;
                    v.method = CmMethod::herzog_oracle;
                    v.certificate = NotCmCertificate{v2, v3, v4, m + n1, Int(len) + 1};
                    v.trace = "violating triple (" + std::to_string(v2) + "," +
                              std::to_string(v3) + "," + std::to_string(v4) + ") at m=" +
                              std::to_string(m + n1);
                    return v;
                }
            }
        }
    }
    CMVerdict v;
    v.is_cm = true;
    v.method = CmMethod::herzog_oracle;
    v.trace = "oracle exhausted box";
    return v;
}

bool good_monomial(const GeneratorTuple& g, const MembershipTables& t, Int v2, Int v3,
                   Int v4) {
    Int m = checked_add(checked_add(checked_mul(v2, g.gens[1]), checked_mul(v3, g.gens[2])),
                        checked_mul(v4, g.gens[3]));
    if (m < g.gens[0] || !t.in_s(m - g.gens[0]))
        throw InvalidInput("good_monomial: m - n1 not in S (condition is vacuous)");
    return v2 + v3 + v4 <= Int(t.len(m - g.gens[0])) + 1;
}

namespace {

Inequality ineq(std::string label, Int lhs, Int rhs) {
    return {std::move(label), lhs, rhs, lhs <= rhs};
}

bool all_hold(const std::vector<Inequality>& v) {
    for (const auto& i : v)
        if (!i.holds) return false;
    return true;
}

CMVerdict criterion_verdict(CmMethod method, const std::string& tag,
                            std::vector<Inequality> ineqs, std::string trace) {
    CMVerdict v;
    v.is_cm = all_hold(ineqs);
    v.method = method;
    v.case_tag = tag;
    v.inequalities = std::move(ineqs);
    v.trace = std::move(trace);
    return v;
}

}  // namespace

std::optional<CMVerdict> closed_form_criterion(const GorensteinData& d) {
    auto A = [&](int i) { return d.A(i); };
    auto Y = [&](int i, int j) { return d.AIJ(i, j); };
    const std::string tag = to_string(d.perm_case);
    std::vector<Inequality> v;
    switch (d.perm_case) {
        case PermCase::p1a:
            v.push_back(ineq("a2 <= a21+a24", A(2), Y(2, 1) + Y(2, 4)));
            return criterion_verdict(CmMethod::closed_form, tag, v, "case 1a iff");
        case PermCase::p1b: {
            v.push_back(ineq("a2 <= a21+a23", A(2), Y(2, 1) + Y(2, 3)));
            v.push_back(ineq("a42+a13 <= a21+a34", Y(4, 2) + Y(1, 3), Y(2, 1) + Y(3, 4)));
            if (Y(4, 2) <= Y(3, 2)) {
                if (Y(3, 4) < Y(1, 4))
                    v.push_back(ineq("a3+a13 <= a21+a32-a42+2a34", A(3) + Y(1, 3),
                                     Y(2, 1) + Y(3, 2) - Y(4, 2) + 2 * Y(3, 4)));
                else
                    v.push_back(ineq("a3+a13 <= a1+a32+a34-a14", A(3) + Y(1, 3),
                                     A(1) + Y(3, 2) + Y(3, 4) - Y(1, 4)));
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 1b iff, a42 <= a32");
            }
            v.push_back(ineq("a3+a13 <= a1+a32+a34-a14", A(3) + Y(1, 3),
                             A(1) + Y(3, 2) + Y(3, 4) - Y(1, 4)));
            if (!all_hold(v))
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 1b necessary condition violated");
            if (Y(1, 4) <= Y(3, 4))
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 1b iff, a32 < a42 and a14 <= a34");
            return std::nullopt;  // only necessary conditions, all satisfied
        }
        case PermCase::p2a: {
            v.push_back(ineq("a3 <= a31+a34", A(3), Y(3, 1) + Y(3, 4)));
            v.push_back(ineq("a12+a34 <= a41+a23", Y(1, 2) + Y(3, 4), Y(4, 1) + Y(2, 3)));
            if (Y(3, 4) <= Y(2, 4)) {
                if (Y(2, 3) < Y(1, 3))
                    v.push_back(ineq("a2+a12 <= a41+2a23+a24-a34", A(2) + Y(1, 2),
                                     Y(4, 1) + 2 * Y(2, 3) + Y(2, 4) - Y(3, 4)));
                else
                    v.push_back(ineq("a2+a12 <= a1+a23-a13+a24", A(2) + Y(1, 2),
                                     A(1) + Y(2, 3) - Y(1, 3) + Y(2, 4)));
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 2a iff, a34 <= a24");
            }
            v.push_back(ineq("a2+a12 <= a1+a23-a13+a24", A(2) + Y(1, 2),
                             A(1) + Y(2, 3) - Y(1, 3) + Y(2, 4)));
            if (!all_hold(v))
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 2a necessary condition violated");
            if (Y(1, 3) <= Y(2, 3))
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 2a iff, a24 < a34 and a13 <= a23");
            return std::nullopt;
        }
        case PermCase::p2b: {
            v.push_back(ineq("a2 <= a21+a24", A(2), Y(2, 1) + Y(2, 4)));
            if (Y(2, 4) <= Y(3, 4)) {
                if (Y(3, 2) < Y(1, 2))
                    v.push_back(ineq("a3+a13 <= a41+2a32+a34-a24", A(3) + Y(1, 3),
                                     Y(4, 1) + 2 * Y(3, 2) + Y(3, 4) - Y(2, 4)));
                else
                    v.push_back(ineq("a3+a13 <= a1+a32-a12+a34", A(3) + Y(1, 3),
                                     A(1) + Y(3, 2) - Y(1, 2) + Y(3, 4)));
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 2b iff, a24 <= a34");
            }
            v.push_back(ineq("a3+a13 <= a1+a32-a12+a34", A(3) + Y(1, 3),
                             A(1) + Y(3, 2) - Y(1, 2) + Y(3, 4)));
            if (!all_hold(v))
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 2b necessary condition violated");
            if (Y(1, 2) <= Y(3, 2))
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 2b iff, a34 < a24 and a12 <= a32");
            return std::nullopt;
        }
        case PermCase::p3a:
            v.push_back(ineq("a2 <= a21+a23", A(2), Y(2, 1) + Y(2, 3)));
            v.push_back(ineq("a3 <= a31+a34", A(3), Y(3, 1) + Y(3, 4)));
            return criterion_verdict(CmMethod::closed_form, tag, v, "case 3a iff");
        case PermCase::p3b: {
            v.push_back(ineq("a12+a43 <= a31+a24", Y(1, 2) + Y(4, 3), Y(3, 1) + Y(2, 4)));
            if (Y(4, 3) <= Y(2, 3)) {
                if (Y(2, 4) < Y(1, 4))
                    v.push_back(ineq("a2+a12 <= a31+2a24+a23-a43", A(2) + Y(1, 2),
                                     Y(3, 1) + 2 * Y(2, 4) + Y(2, 3) - Y(4, 3)));
                else
                    v.push_back(ineq("a2+a12 <= a1+a23+a24-a14", A(2) + Y(1, 2),
                                     A(1) + Y(2, 3) + Y(2, 4) - Y(1, 4)));
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 3b iff, a43 <= a23");
            }
            v.push_back(ineq("a2+a12 <= a1+a23+a24-a14", A(2) + Y(1, 2),
                             A(1) + Y(2, 3) + Y(2, 4) - Y(1, 4)));
            if (!all_hold(v))
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 3b necessary condition violated");
            if (Y(1, 4) <= Y(2, 4))
                return criterion_verdict(CmMethod::closed_form, tag, v,
                                         "case 3b iff, a23 < a43 and a14 <= a24");
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

constexpr Int kSweepVolumeCap = Int(1) << 28;

struct Box {
    Int lo[3] = {0, 0, 0};  // over (v2, v3, v4)
    Int hi[3] = {0, 0, 0};
};

// All triples in the box whose S-degree lands in n1 + S must be good.
// Returns false and the witness on the first bad monomial.
bool sweep_good(const GeneratorTuple& g, const MembershipTables& t, const Box& box,
                NotCmCertificate* bad) {
    Int volume = 1;
    for (int i = 0; i < 3; ++i)
        volume = checked_mul(volume, std::max<Int>(0, box.hi[i] - box.lo[i]));
    if (volume > kSweepVolumeCap)
        throw BudgetExceeded("criterion sweep volume beyond the cap");
    const Int n1 = g.gens[0];
    for (Int v4 = box.lo[2]; v4 < box.hi[2]; ++v4)
        for (Int v3 = box.lo[1]; v3 < box.hi[1]; ++v3)
            for (Int v2 = box.lo[0]; v2 < box.hi[0]; ++v2) {
                Int m = v2 * g.gens[1] + v3 * g.gens[2] + v4 * g.gens[3];
                if (m < n1 || !t.in_s(m - n1)) continue;
                if (v2 + v3 + v4 > Int(t.len(m - n1)) + 1) {
                    if (bad) *bad = {v2, v3, v4, m, Int(t.len(m - n1)) + 1};
                    return false;
                }
            }
    return true;
}

// deg(N) <= deg(M) for every f = M - N in I with x1 in M's support.
bool cond_I(const std::vector<Binomial>& set_I, Inequality* witness) {
    for (const Binomial& f : set_I) {
        const bool plus_has_1 = f.plus.e[0] > 0;
        const Exponents& m = plus_has_1 ? f.plus : f.minus;
        const Exponents& n = plus_has_1 ? f.minus : f.plus;
        if (m.e[0] == 0) continue;  // neither side uses x1
        if (n.total_degree() > m.total_degree()) {
            if (witness) *witness = {"deg(N) <= deg(M) for " + to_string(f),
                                     n.total_degree(), m.total_degree(), false};
            return false;
        }
    }
    return true;
}

// For every f = M - N in R with x1 in M's support the x1-free side N must be
// a good monomial.
bool cond_R(const GeneratorTuple& g, const MembershipTables& t,
            const std::vector<Binomial>& set_R, NotCmCertificate* bad) {
    for (const Binomial& f : set_R) {
        const bool plus_has_1 = f.plus.e[0] > 0;
        const Exponents& m = plus_has_1 ? f.plus : f.minus;
        const Exponents& n = plus_has_1 ? f.minus : f.plus;
        if (m.e[0] == 0) continue;
        if (n.e[0] != 0) continue;  // quantified over binomials split along x1
        if (!good_monomial(g, t, n.e[1], n.e[2], n.e[3])) {
            if (bad)
                *bad = {n.e[1], n.e[2], n.e[3], g.s_degree(n),
                        Int(t.len(g.s_degree(n) - g.gens[0])) + 1};
            return false;
        }
    }
    return true;
}

CMVerdict box_verdict(const std::string& tag, bool ok, const NotCmCertificate& bad,
                      std::string trace) {
    CMVerdict v;
    v.is_cm = ok;
    v.method = CmMethod::appendix_predicate;
    v.case_tag = tag;
    if (!ok) v.certificate = bad;
    v.trace = std::move(trace);
    return v;
}

}  // namespace

std::optional<CMVerdict> appendix_predicates(const CaseReport& rep, const GeneratorTuple& g,
                                             const MembershipTables& t) {
    if (rep.degenerate || !rep.structure_ok) return std::nullopt;
    const std::string tag = to_string(rep.label);
    const auto& a = rep.a;
    const auto& b = g.box_bounds;
    NotCmCertificate bad;
    Inequality iw;

    switch (rep.label) {
        case CaseLabel::c2c: {
            CMVerdict v;
            v.is_cm = true;
            v.method = CmMethod::appendix_predicate;
            v.case_tag = tag;
            v.trace = "complete intersection (case 2c)";
            return v;
        }
        case CaseLabel::c2a:
        case CaseLabel::c2b: {
            const auto& c0 = rep.degree_classes[0];
            const auto& c1 = rep.degree_classes[1];
            const bool zero_in_first =
                std::find(c0.begin(), c0.end(), 0) != c0.end();
            const auto& pair1 = zero_in_first ? c0 : c1;
            const auto& pair2 = zero_in_first ? c1 : c0;
            int i = pair1[0] == 0 ? pair1[1] : pair1[0];
            int j = pair2[0], k = pair2[1];  // n_j < n_k by index order
            if (!cond_I(rep.set_I, &iw)) {
                CMVerdict v = box_verdict(tag, false, bad, "condition on I fails");
                v.certificate.reset();
                v.inequalities.push_back(iw);
                return v;
            }
            if (!cond_R(g, t, rep.set_R, &bad))
                return box_verdict(tag, false, bad, "condition on R fails");
            Box box;
            box.hi[i - 1] = std::min(a[i], b[i]);
            box.lo[j - 1] = a[j];
            box.hi[j - 1] = b[j];
            box.hi[k - 1] = std::min(a[k], b[k]);
            bool ok = sweep_good(g, t, box, &bad);
            return box_verdict(tag, ok, bad,
                               ok ? "I, R and box conditions hold" : "box condition fails");
        }
        case CaseLabel::c3: {
            const auto& triple = rep.degree_classes[0];
            if (std::find(triple.begin(), triple.end(), 0) == triple.end()) {
                // coincidence class {x2, x3, x4}
                if (!cond_I(rep.set_I, &iw)) {
                    CMVerdict v = box_verdict(tag, false, bad, "condition on I fails");
                    v.certificate.reset();
                    v.inequalities.push_back(iw);
                    return v;
                }
                Box box;
                box.lo[0] = a[1];
                box.hi[0] = b[1];
                box.hi[1] = b[2];
                box.hi[2] = b[3];
                bool ok = sweep_good(g, t, box, &bad);
                return box_verdict(tag, ok, bad,
                                   ok ? "I and box conditions hold" : "box condition fails");
            }
            // class {x1, x_i, x_j}; sweep bounded in both pair variables
            int i = triple[1], j = triple[2];
            Box box;
            box.hi[0] = b[1];
            box.hi[1] = b[2];
            box.hi[2] = b[3];
            box.hi[i - 1] = std::min(a[i], b[i]);
            box.hi[j - 1] = std::min(a[j], b[j]);
            bool ok = sweep_good(g, t, box, &bad);
            return box_verdict(tag, ok, bad,
                               ok ? "box condition holds" : "box condition fails");
        }
        case CaseLabel::c4a:
        case CaseLabel::c4b: {
            const auto& pair = rep.degree_classes[0];
            if (pair[0] != 0) return std::nullopt;  // no criterion covers this pairing
            int i = pair[1];
            Box box;
            box.hi[0] = b[1];
            box.hi[1] = b[2];
            box.hi[2] = b[3];
            box.hi[i - 1] = std::min(a[i], b[i]);
            bool ok = sweep_good(g, t, box, &bad);
            return box_verdict(tag, ok, bad,
                               ok ? "box condition holds" : "box condition fails");
        }
        case CaseLabel::c1:
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<CMVerdict> case1_sufficient(const CaseReport& rep, const GeneratorTuple& g,
                                          const MembershipTables& t) {
    if (rep.label != CaseLabel::c1 || rep.degenerate) return std::nullopt;
    const auto& a = rep.a;
    const auto& b = g.box_bounds;

    // monomial-side choices of the four critical binomials
    std::array<std::vector<Exponents>, 4> choices;
    for (int i = 0; i < 4; ++i) {
        for (const Binomial& c : critical_binomials(g, i)) {
            const Exponents& side = c.plus.e[i] > 0 ? c.minus : c.plus;
            choices[i].push_back(side);
        }
        if (choices[i].empty()) return std::nullopt;
    }

    const bool have_cond_I = cond_I(rep.set_I, nullptr);

    auto sweep = [&](Int hi2, Int hi3, Int hi4, Int lo2 = 0) {
        Box box;
        box.lo[0] = lo2;
        box.hi[0] = hi2;
        box.hi[1] = hi3;
        box.hi[2] = hi4;
        try {
            return sweep_good(g, t, box, nullptr);
        } catch (const BudgetExceeded&) {
            return false;  // sweep too large; this sufficient path just declines
        }
    };

    std::vector<std::array<Exponents, 3>> combos;
    for (const Exponents& v : choices[1])
        for (const Exponents& w : choices[2])
            for (const Exponents& z : choices[3])
                if (combos.size() < 512) combos.push_back({v, w, z});
    for (const auto& [v, w, z] : combos) {
        const bool v1 = v.e[0] > 0, w1 = w.e[0] > 0, z1 = z.e[0] > 0;
        bool ok = false;
        std::string branch;
        if (v1) {
            if (a[1] > v.total_degree()) continue;
            if (w1 && z1) {
                ok = a[2] <= w.total_degree() && have_cond_I;
                branch = "x1 in v,w,z";
            } else if (w1) {
                ok = a[2] <= w.total_degree() &&
                     sweep(std::min(a[1], b[1]), std::min(a[2], b[2]), b[3]);
                branch = "x1 in v,w";
            } else if (z1) {
                ok = sweep(std::min(a[1], b[1]), b[2], std::min(a[3], b[3]));
                branch = "x1 in v,z";
            } else {
                ok = sweep(std::min(a[1], b[1]), b[2], b[3]);
                branch = "x1 in v only";
            }
        } else {
            if (w1 && z1) {
                ok = a[2] <= w.total_degree() && have_cond_I &&
                     sweep(b[1], std::min(a[2], b[2]), std::min(a[3], b[3]), a[1]);
                branch = "x1 in w,z";
            } else if (w1) {
                ok = a[2] <= w.total_degree() && sweep(b[1], std::min(a[2], b[2]), b[3]);
                branch = "x1 in w";
            } else if (z1) {
                ok = sweep(b[1], b[2], std::min(a[3], b[3]));
                branch = "x1 in z";
            }
        }
        if (ok) {
            CMVerdict out;
            out.is_cm = true;
            out.method = CmMethod::case1_sufficient;
            out.case_tag = "1";
            out.trace = "sufficient bundle holds (" + branch + ")";
            return out;
        }
    }
    return std::nullopt;
}

DecideOutcome decide_full(const GeneratorTuple& g, const DecideOptions& opt) {
    DecideOutcome out;
    auto t0 = std::chrono::steady_clock::now();
    out.tables = build_tables(g, default_table_limit(g), opt.max_table_entries);
    out.tables_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    out.report = classify(g, opt.gb);
    out.classify_ms = ms_since(t0);
    out.symmetric = is_symmetric(g, out.tables);
    t0 = std::chrono::steady_clock::now();

    if (!out.report.degenerate && out.report.mingens.gens.size() == 5) {
        out.gorenstein = detect_bresinsky(g, out.report.mingens.gens);
        if (out.gorenstein) {
            out.gorenstein_relations_ok = verify_relations(*out.gorenstein, g);
            if (!out.gorenstein_relations_ok)
                throw InternalError("Bresinsky data fails the generator relations");
        } else if (out.symmetric) {
            out.gorenstein_note =
                "symmetric with five minimal generators but no permutation matched";
        }
    }

    if (out.gorenstein) {
        if (auto v = closed_form_criterion(*out.gorenstein)) out.criteria.push_back(*v);
    }
    if (auto v = appendix_predicates(out.report, g, out.tables)) out.criteria.push_back(*v);
    if (out.report.label == CaseLabel::c1) {
        if (auto v = case1_sufficient(out.report, g, out.tables))
            out.criteria.push_back(*v);
    }

    out.criteria_ms = ms_since(t0);
    if (opt.run_oracle) {
        t0 = std::chrono::steady_clock::now();
        out.oracle = herzog_oracle(g, out.tables, opt.oracle);
        out.oracle_ms = ms_since(t0);
    }

    // the criteria provably agree with the oracle; a mismatch is a bug
    for (const auto& c : out.criteria) {
        if (out.oracle && c.is_cm != out.oracle->is_cm)
            throw InternalError("criterion " + to_string(c.method) + " (case " + c.case_tag +
                                ") disagrees with the Herzog oracle");
        if (c.is_cm != out.criteria.front().is_cm)
            throw InternalError("criteria disagree among themselves");
    }

    if (!out.criteria.empty())
        out.verdict = out.criteria.front();
    else if (out.oracle)
        out.verdict = *out.oracle;
    else
        throw BudgetExceeded("criteria inconclusive and the oracle was skipped");
    return out;
}

CMVerdict decide(const GeneratorTuple& g, const DecideOptions& opt) {
    return decide_full(g, opt).verdict;
}

}  // namespace tc4

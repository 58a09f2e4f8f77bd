#include "tc4/analysis.hpp"

#include "tc4/grobner.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace tc4 {

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<std::pair<Exponents, Exponents>> as_pairs(const std::vector<Binomial>& v) {
    std::vector<std::pair<Exponents, Exponents>> out;
    out.reserve(v.size());
    for (const Binomial& b : v) out.emplace_back(b.plus, b.minus);
    return out;
}

}  // namespace

bool AnalysisReport::same_payload(const AnalysisReport& o) const {
    auto gor_eq = [](const std::optional<GorensteinReport>& x,
                     const std::optional<GorensteinReport>& y) {
        if (x.has_value() != y.has_value()) return false;
        if (!x) return true;
        return x->perm_case == y->perm_case && x->a == y->a && x->aij == y->aij &&
               x->generators == y->generators && x->relations_ok == y->relations_ok &&
               x->lexinf_groebner_ok == y->lexinf_groebner_ok &&
               x->apery_avoidance == y->apery_avoidance;
    };
    return schema_version == o.schema_version && input == o.input && sorted == o.sorted &&
           input_permutation == o.input_permutation && a_values == o.a_values &&
           critical_degrees == o.critical_degrees && case_label == o.case_label &&
           mu == o.mu && degenerate == o.degenerate && structure_ok == o.structure_ok &&
           minimal_generators == o.minimal_generators && set_S == o.set_S &&
           set_I == o.set_I && set_R == o.set_R && symmetric == o.symmetric &&
           frobenius_number == o.frobenius_number && apery_size == o.apery_size &&
           apery == o.apery && gor_eq(gorenstein, o.gorenstein) && is_cm == o.is_cm &&
           method == o.method && case_tag == o.case_tag && certificate == o.certificate &&
           inequalities == o.inequalities && trace == o.trace && oracle_ran == o.oracle_ran &&
           oracle_agrees == o.oracle_agrees &&
           tangent_cone.leading_ideal == o.tangent_cone.leading_ideal &&
           tangent_cone.numerator == o.tangent_cone.numerator &&
           tangent_cone.reduced_numerator == o.tangent_cone.reduced_numerator &&
           tangent_cone.hf == o.tangent_cone.hf &&
           tangent_cone.hf_nondecreasing == o.tangent_cone.hf_nondecreasing &&
           tangent_cone.hf_reason == o.tangent_cone.hf_reason &&
           tangent_cone.multiplicity == o.tangent_cone.multiplicity;
}

AnalysisReport analyze(const std::array<Int, 4>& input, const AnalysisOptions& opt) {
    const auto t_start = std::chrono::steady_clock::now();
    AnalysisReport r;
    r.input = input;

    GeneratorTuple g = GeneratorTuple::from(input);
    r.sorted = g.gens;
    r.input_permutation = g.original_order;

    DecideOptions dopt;
    dopt.run_oracle = opt.run_oracle;
    dopt.oracle.timeout_secs = opt.timeout_secs;
    dopt.gb = opt.gb;
    dopt.max_table_entries = std::max<Int>(1, opt.max_table_bytes / 4);

    DecideOutcome out = decide_full(g, dopt);
    r.timings.tables_ms = out.tables_ms;
    r.timings.classify_ms = out.classify_ms;
    r.timings.criteria_ms = out.criteria_ms;
    r.timings.oracle_ms = out.oracle_ms;
    auto t0 = std::chrono::steady_clock::now();
    r.a_values = out.report.a;
    r.critical_degrees = out.report.crit_degrees;
    r.case_label = to_string(out.report.label);
    r.mu = out.report.mu;
    r.degenerate = out.report.degenerate;
    r.structure_ok = out.report.structure_ok;
    r.minimal_generators = as_pairs(out.report.mingens.gens);
    r.set_S = as_pairs(out.report.critical_gens);
    r.set_I = as_pairs(out.report.set_I);
    r.set_R = as_pairs(out.report.set_R);
    r.symmetric = out.symmetric;

    r.apery = apery_set(g, out.tables);
    r.apery_size = static_cast<Int>(r.apery.size());
    r.frobenius_number = r.apery.back() - g.gens[0];

    if (out.gorenstein) {
        GorensteinReport gr;
        gr.perm_case = to_string(out.gorenstein->perm_case);
        gr.a = out.gorenstein->a;
        gr.aij = out.gorenstein->aij;
        for (const OrientedBinomial& f : out.gorenstein->generators)
            gr.generators.emplace_back(f.lhs, f.rhs);
        gr.relations_ok = out.gorenstein_relations_ok;
        gr.lexinf_groebner_ok = verify_lexinf_groebner(*out.gorenstein, opt.gb);
        gr.apery_avoidance = apery_standard_monomials(*out.gorenstein).gens;
        r.gorenstein = std::move(gr);
    }

    r.is_cm = out.verdict.is_cm;
    r.method = to_string(out.verdict.method);
    r.case_tag = out.verdict.case_tag;
    r.certificate = out.verdict.certificate;
    r.inequalities = out.verdict.inequalities;
    r.trace = out.verdict.trace;
    r.oracle_ran = out.oracle.has_value();
    r.oracle_agrees = out.oracle && out.oracle->is_cm == out.verdict.is_cm;
    if (out.oracle && !out.verdict.certificate) r.certificate = out.oracle->certificate;

    MonomialIdeal lt = tangent_cone_leading_ideal(out.report.mingens.gens, opt.gb);
    r.tangent_cone.leading_ideal = lt.gens;
    r.tangent_cone.numerator = numerator(lt);
    r.tangent_cone.reduced_numerator = reduced_numerator(lt, 1);
    int horizon = opt.horizon >= 0 ? opt.horizon : r.tangent_cone.reduced_numerator.degree() + 2;
    r.tangent_cone.hf = hf_values(lt, horizon);
    NondecreasingResult nd = is_nondecreasing(lt);
    r.tangent_cone.hf_nondecreasing = nd.nondecreasing;
    r.tangent_cone.hf_reason = nd.reason;
    r.tangent_cone.multiplicity = r.tangent_cone.reduced_numerator.evaluate(1);
    r.timings.hilbert_ms = ms_since(t0);

    r.timings.total_ms = ms_since(t_start);
    return r;
}

namespace {

json exps_to_json(const Exponents& e) { return json::array({e.e[0], e.e[1], e.e[2], e.e[3]}); }

Exponents exps_from_json(const json& j) {
    Exponents e;
    for (int i = 0; i < 4; ++i) e.e[i] = j.at(static_cast<std::size_t>(i)).get<Int>();
    return e;
}

json pairs_to_json(const std::vector<std::pair<Exponents, Exponents>>& v) {
    json arr = json::array();
    for (const auto& [p, q] : v) arr.push_back(json::array({exps_to_json(p), exps_to_json(q)}));
    return arr;
}

std::vector<std::pair<Exponents, Exponents>> pairs_from_json(const json& j) {
    std::vector<std::pair<Exponents, Exponents>> v;
    for (const auto& e : j) v.emplace_back(exps_from_json(e.at(0)), exps_from_json(e.at(1)));
    return v;
}

json exps_list_to_json(const std::vector<Exponents>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back(exps_to_json(e));
    return arr;
}

std::vector<Exponents> exps_list_from_json(const json& j) {
    std::vector<Exponents> v;
    for (const auto& e : j) v.push_back(exps_from_json(e));
    return v;
}

}  // namespace

json report_to_json(const AnalysisReport& r) {
    json j;
    j["schema_version"] = r.schema_version;
    j["input"] = r.input;
    j["sorted"] = r.sorted;
    j["input_permutation"] = r.input_permutation;
    j["a_values"] = r.a_values;
    j["critical_degrees"] = r.critical_degrees;
    j["case"] = r.case_label;
    j["mu"] = r.mu;
    j["degenerate"] = r.degenerate;
    j["structure_ok"] = r.structure_ok;
    j["minimal_generators"] = pairs_to_json(r.minimal_generators);
    j["set_S"] = pairs_to_json(r.set_S);
    j["set_I"] = pairs_to_json(r.set_I);
    j["set_R"] = pairs_to_json(r.set_R);
    j["symmetric"] = r.symmetric;
    j["frobenius"] = r.frobenius_number;
    j["apery_size"] = r.apery_size;
    j["apery"] = r.apery;
    if (r.gorenstein) {
        json g;
        g["perm_case"] = r.gorenstein->perm_case;
        g["a"] = r.gorenstein->a;
        g["aij"] = r.gorenstein->aij;
        g["generators"] = pairs_to_json(r.gorenstein->generators);
        g["relations_ok"] = r.gorenstein->relations_ok;
        g["lexinf_groebner_ok"] = r.gorenstein->lexinf_groebner_ok;
        g["apery_avoidance"] = exps_list_to_json(r.gorenstein->apery_avoidance);
        j["gorenstein"] = g;
    } else {
        j["gorenstein"] = nullptr;
    }
    json cm;
    cm["is_cm"] = r.is_cm;
    cm["method"] = r.method;
    cm["case_tag"] = r.case_tag;
    if (r.certificate) {
        cm["certificate"] = {{"v2", r.certificate->v2},
                             {"v3", r.certificate->v3},
                             {"v4", r.certificate->v4},
                             {"m", r.certificate->m},
                             {"best_with_x1", r.certificate->best_with_x1}};
    } else {
        cm["certificate"] = nullptr;
    }
    json ineqs = json::array();
    for (const auto& i : r.inequalities)
        ineqs.push_back({{"label", i.label}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"holds", i.holds}});
    cm["inequalities"] = ineqs;
    cm["trace"] = r.trace;
    cm["oracle_ran"] = r.oracle_ran;
    cm["oracle_agrees"] = r.oracle_agrees;
    j["cm"] = cm;
    json tc;
    tc["leading_ideal"] = exps_list_to_json(r.tangent_cone.leading_ideal);
    tc["numerator"] = r.tangent_cone.numerator.c;
    tc["reduced_numerator"] = r.tangent_cone.reduced_numerator.c;
    tc["hf"] = r.tangent_cone.hf;
    tc["hf_nondecreasing"] = r.tangent_cone.hf_nondecreasing;
    tc["hf_reason"] = r.tangent_cone.hf_reason;
    tc["multiplicity"] = r.tangent_cone.multiplicity;
    j["tangent_cone"] = tc;
    j["timings"] = {{"tables_ms", r.timings.tables_ms},
                    {"classify_ms", r.timings.classify_ms},
                    {"criteria_ms", r.timings.criteria_ms},
                    {"oracle_ms", r.timings.oracle_ms},
                    {"hilbert_ms", r.timings.hilbert_ms},
                    {"total_ms", r.timings.total_ms}};
    return j;
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.input = j.at("input").get<std::array<Int, 4>>();
    r.sorted = j.at("sorted").get<std::array<Int, 4>>();
    r.input_permutation = j.at("input_permutation").get<std::array<int, 4>>();
    r.a_values = j.at("a_values").get<std::array<Int, 4>>();
    r.critical_degrees = j.at("critical_degrees").get<std::array<Int, 4>>();
    r.case_label = j.at("case").get<std::string>();
    r.mu = j.at("mu").get<Int>();
    r.degenerate = j.at("degenerate").get<bool>();
    r.structure_ok = j.at("structure_ok").get<bool>();
    r.minimal_generators = pairs_from_json(j.at("minimal_generators"));
    r.set_S = pairs_from_json(j.at("set_S"));
    r.set_I = pairs_from_json(j.at("set_I"));
    r.set_R = pairs_from_json(j.at("set_R"));
    r.symmetric = j.at("symmetric").get<bool>();
    r.frobenius_number = j.at("frobenius").get<Int>();
    r.apery_size = j.at("apery_size").get<Int>();
    r.apery = j.at("apery").get<std::vector<Int>>();
    if (!j.at("gorenstein").is_null()) {
        const json& g = j.at("gorenstein");
        GorensteinReport gr;
        gr.perm_case = g.at("perm_case").get<std::string>();
        gr.a = g.at("a").get<std::array<Int, 4>>();
        gr.aij = g.at("aij").get<std::array<std::array<Int, 4>, 4>>();
        gr.generators = pairs_from_json(g.at("generators"));
        gr.relations_ok = g.at("relations_ok").get<bool>();
        gr.lexinf_groebner_ok = g.at("lexinf_groebner_ok").get<bool>();
        gr.apery_avoidance = exps_list_from_json(g.at("apery_avoidance"));
        r.gorenstein = std::move(gr);
    }
    const json& cm = j.at("cm");
    r.is_cm = cm.at("is_cm").get<bool>();
    r.method = cm.at("method").get<std::string>();
    r.case_tag = cm.at("case_tag").get<std::string>();
    if (!cm.at("certificate").is_null()) {
        const json& c = cm.at("certificate");
        r.certificate = NotCmCertificate{c.at("v2").get<Int>(), c.at("v3").get<Int>(),
                                         c.at("v4").get<Int>(), c.at("m").get<Int>(),
                                         c.at("best_with_x1").get<Int>()};
    }
    for (const auto& i : cm.at("inequalities"))
        r.inequalities.push_back({i.at("label").get<std::string>(), i.at("lhs").get<Int>(),
                                  i.at("rhs").get<Int>(), i.at("holds").get<bool>()});
    r.trace = cm.at("trace").get<std::string>();
    r.oracle_ran = cm.at("oracle_ran").get<bool>();
    r.oracle_agrees = cm.at("oracle_agrees").get<bool>();
    const json& tc = j.at("tangent_cone");
    r.tangent_cone.leading_ideal = exps_list_from_json(tc.at("leading_ideal"));
    r.tangent_cone.numerator = IntPolynomial{tc.at("numerator").get<std::vector<Int>>()};
    r.tangent_cone.reduced_numerator =
        IntPolynomial{tc.at("reduced_numerator").get<std::vector<Int>>()};
    r.tangent_cone.hf = tc.at("hf").get<std::vector<Int>>();
    r.tangent_cone.hf_nondecreasing = tc.at("hf_nondecreasing").get<bool>();
    r.tangent_cone.hf_reason = tc.at("hf_reason").get<std::string>();
    r.tangent_cone.multiplicity = tc.at("multiplicity").get<Int>();
    return r;
}

std::string csv_header() {
    return "n1,n2,n3,n4,case,mu,degenerate,num_mingens,symmetric,gorenstein_case,cm,method,"
           "cert_v2,cert_v3,cert_v4,multiplicity,numerator_nonnegative,hf_nondecreasing";
}

std::string csv_row(const AnalysisReport& r) {
    std::ostringstream s;
    s << r.sorted[0] << ',' << r.sorted[1] << ',' << r.sorted[2] << ',' << r.sorted[3] << ','
      << r.case_label << ',' << r.mu << ',' << (r.degenerate ? 1 : 0) << ','
      << r.minimal_generators.size() << ',' << (r.symmetric ? 1 : 0) << ','
      << (r.gorenstein ? r.gorenstein->perm_case : "-") << ',' << (r.is_cm ? 1 : 0) << ','
      << r.method << ',';
    if (r.certificate)
        s << r.certificate->v2 << ',' << r.certificate->v3 << ',' << r.certificate->v4;
    else
        s << ",,";
    bool nonneg = true;
    for (Int c : r.tangent_cone.reduced_numerator.c)
        if (c < 0) nonneg = false;
    s << ',' << r.tangent_cone.multiplicity << ',' << (nonneg ? 1 : 0) << ','
      << (r.tangent_cone.hf_nondecreasing ? 1 : 0);
    return s.str();
}

void run_sweep(const SweepOptions& sopt, const AnalysisOptions& aopt, std::ostream& out) {
    if (sopt.max < sopt.min) throw InvalidInput("sweep range is empty or inverted");
    if (sopt.max > sopt.n4_cap)
        throw InvalidInput("sweep range exceeds the n4 cap of " + std::to_string(sopt.n4_cap) +
                           "; raise --n4-cap deliberately for larger sweeps");
    std::vector<std::array<Int, 4>> tuples;
    for (Int n1 = std::max<Int>(1, sopt.min); n1 <= sopt.max; ++n1)
        for (Int n2 = n1 + 1; n2 <= sopt.max; ++n2)
            for (Int n3 = n2 + 1; n3 <= sopt.max; ++n3)
                for (Int n4 = n3 + 1; n4 <= sopt.max; ++n4) {
                    if (std::gcd(std::gcd(n1, n2), std::gcd(n3, n4)) != 1) continue;
                    tuples.push_back({n1, n2, n3, n4});
                }

    std::vector<std::string> rows(tuples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= tuples.size()) return;
            AnalysisReport r = analyze(tuples[k], aopt);
            bool keep = true;
            if (sopt.gorenstein_only && !r.symmetric) keep = false;
            if (sopt.non_cm_only && r.is_cm) keep = false;
            if (sopt.nondecreasing_only && !r.tangent_cone.hf_nondecreasing) keep = false;
            rows[k] = keep ? csv_row(r) : std::string();
        }
    };
    int jobs = std::max(1, sopt.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    out << csv_header() << '\n';
    for (const std::string& row : rows)
        if (!row.empty()) out << row << '\n';
}

std::string render_text_report(const AnalysisReport& r) {
    std::ostringstream s;
    s << "generators: (" << r.sorted[0] << ", " << r.sorted[1] << ", " << r.sorted[2] << ", "
      << r.sorted[3] << ")\n";
    s << "a-values: (" << r.a_values[0] << ", " << r.a_values[1] << ", " << r.a_values[2]
      << ", " << r.a_values[3] << ")\n";
    s << "case: " << r.case_label << "  mu(C_A) = " << r.mu
      << (r.degenerate ? "  [degenerate embedding]" : "") << "\n";
    s << "minimal generators (" << r.minimal_generators.size() << "):\n";
    for (const auto& [p, q] : r.minimal_generators)
        s << "  " << to_string(Binomial{p, q}) << "\n";
    s << "|S| = " << r.set_S.size() << "  |I| = " << r.set_I.size() << "  |R| = "
      << r.set_R.size() << "\n";
    s << "symmetric (Gorenstein): " << (r.symmetric ? "yes" : "no")
      << "  Frobenius = " << r.frobenius_number << "\n";
    if (r.gorenstein) {
        s << "Bresinsky form: case " << r.gorenstein->perm_case << ", generators:\n";
        for (const auto& [p, q] : r.gorenstein->generators)
            s << "  " << to_string(p) << " - " << to_string(q) << "\n";
        s << "relations verified: " << (r.gorenstein->relations_ok ? "yes" : "no")
          << ", lex-inf Groebner: " << (r.gorenstein->lexinf_groebner_ok ? "yes" : "no")
          << "\n";
    }
    s << "Cohen-Macaulay tangent cone: " << (r.is_cm ? "YES" : "NO") << " (method: "
      << r.method << (r.case_tag.empty() ? "" : ", case " + r.case_tag) << ")\n";
    for (const auto& i : r.inequalities)
        s << "  " << i.label << ": " << i.lhs << (i.holds ? " <= " : " > ") << i.rhs << "\n";
    if (r.certificate)
        s << "  certificate: (v2,v3,v4) = (" << r.certificate->v2 << "," << r.certificate->v3
          << "," << r.certificate->v4 << "), m = " << r.certificate->m
          << ", best x1-length = " << r.certificate->best_with_x1 << "\n";
    if (r.oracle_ran)
        s << "  oracle " << (r.oracle_agrees ? "agrees" : "DISAGREES") << "\n";
    s << "tangent cone leading ideal (" << r.tangent_cone.leading_ideal.size() << " gens): ";
    for (std::size_t i = 0; i < r.tangent_cone.leading_ideal.size(); ++i)
        s << (i ? ", " : "") << to_string(r.tangent_cone.leading_ideal[i]);
    s << "\nreduced Hilbert numerator: " << to_string(r.tangent_cone.reduced_numerator)
      << "\nHF: ";
    for (std::size_t i = 0; i < r.tangent_cone.hf.size(); ++i)
        s << (i ? " " : "") << r.tangent_cone.hf[i];
    s << "\nHF non-decreasing: " << (r.tangent_cone.hf_nondecreasing ? "yes" : "no") << " ("
      << r.tangent_cone.hf_reason << ")\n";
    s << "multiplicity: " << r.tangent_cone.multiplicity << "\n";
    return s.str();
}

}  // namespace tc4

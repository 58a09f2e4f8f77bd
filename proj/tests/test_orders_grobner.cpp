#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tc4/grobner.hpp"
#include "tc4/toric.hpp"

#include <random>

using namespace tc4;

namespace {

Exponents mono(Int a, Int b, Int c, Int d) {
    Exponents m;
    m.e = {a, b, c, d};
    return m;
}

Binomial bin(Exponents p, Exponents q) { return Binomial::make(p, q); }

std::vector<Binomial> e43_gens(Int m) {
    return {bin(mono(m + 1, 0, 0, 0), mono(0, 1, 1, 0)),
            bin(mono(0, m, 0, 0), mono(1, 0, 0, 1)),
            bin(mono(0, 0, 2, 0), mono(0, m - 1, 0, 1)),
            bin(mono(0, 0, 0, 2), mono(m, 0, 1, 0)),
            bin(mono(m, m - 1, 0, 0), mono(0, 0, 1, 1))};
}

}  // namespace

TEST_CASE("order axioms hold for every kind") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<Int> d(0, 6);
    std::vector<OrderSpec> orders = {
        OrderSpec::lex_order(), OrderSpec::lexinf_order({0, 2, 1, 3}),
        OrderSpec::neg_degree_lex_order(), OrderSpec::graded_revlex_order(),
        OrderSpec::sdeg_revlex_order({10, 17, 22, 28}, 1)};
    for (const OrderSpec& o : orders) {
        for (int trial = 0; trial < 300; ++trial) {
            Exponents u = mono(d(rng), d(rng), d(rng), d(rng));
            Exponents v = mono(d(rng), d(rng), d(rng), d(rng));
            Exponents w = mono(d(rng), d(rng), d(rng), d(rng));
            CHECK(order_compare(o, u, u) == 0);
            CHECK(order_compare(o, u, v) == -order_compare(o, v, u));
            // multiplicative
            CHECK(order_compare(o, u + w, v + w) == order_compare(o, u, v));
        }
    }
}

TEST_CASE("lex-inf reverses lex and makes 1 largest") {
    OrderSpec li = OrderSpec::lexinf_order();
    CHECK(order_compare(li, mono(0, 0, 0, 0), mono(3, 1, 0, 2)) > 0);
    // lm of x2^a2 - x1^a21 x4^a24 is the x1-free side
    CHECK(order_compare(li, mono(0, 4, 0, 0), mono(4, 0, 0, 1)) > 0);
}

TEST_CASE("lex-inf leading monomials match the Apery avoidance set (case 1a)") {
    // (10,17,22,28): f1..f5 with lm's {x3x4, x2^4, x3^2, x4^2, x2^2x4}
    OrderSpec li = OrderSpec::lexinf_order();
    std::vector<std::pair<Exponents, Exponents>> gens = {
        {mono(5, 0, 0, 0), mono(0, 0, 1, 1)},  {mono(0, 4, 0, 0), mono(4, 0, 0, 1)},
        {mono(0, 0, 2, 0), mono(1, 2, 0, 0)},  {mono(0, 0, 0, 2), mono(0, 2, 1, 0)},
        {mono(4, 0, 1, 0), mono(0, 2, 0, 1)}};
    std::vector<Exponents> lms;
    for (auto& [p, q] : gens) lms.push_back(oriented(p, q, li)->lead);
    std::vector<Exponents> expect = {mono(0, 0, 1, 1), mono(0, 4, 0, 0), mono(0, 0, 2, 0),
                                     mono(0, 0, 0, 2), mono(0, 2, 0, 1)};
    CHECK(lms == expect);
}

TEST_CASE("buchberger: single generator passes through") {
    OrderSpec o = OrderSpec::graded_revlex_order();
    std::vector<GBElem> in = {*oriented(mono(0, 4, 0, 0), mono(4, 0, 0, 1), o)};
    auto gb = buchberger(in, o);
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == in[0]);
}

TEST_CASE("buchberger requires a global order and mora a local one") {
    CHECK_THROWS_AS(buchberger({}, OrderSpec::lexinf_order()), InvalidInput);
    CHECK_THROWS_AS(mora_standard_basis({}, OrderSpec::lex_order()), InvalidInput);
}

TEST_CASE("division invariant: fiber differences reduce to zero") {
    GeneratorTuple g = GeneratorTuple::from({10, 17, 22, 28});
    std::vector<Binomial> mingens = classify(g).mingens.gens;
    OrderSpec o = OrderSpec::graded_revlex_order();
    StandardBasisResult gb = buchberger(to_elems(mingens, o), o);
    // every equal-S-degree difference is in I(C) and must reduce to zero
    int checked = 0;
    for (Int s = 1; s <= 180; ++s) {
        auto f = oracle::fiber({10, 17, 22, 28}, s);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                CHECK(reduces_to_zero(Binomial::make(f[i], f[j]), gb));
                ++checked;
            }
    }
    CHECK(checked > 50);
    // and under the local order with Mora normal form
    OrderSpec local = OrderSpec::neg_degree_lex_order();
    StandardBasisResult sb = mora_standard_basis(to_elems(mingens, local), local);
    for (Int s : {50, 68, 94, 100, 118}) {
        auto f = oracle::fiber({10, 17, 22, 28}, s);
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                CHECK(reduces_to_zero(Binomial::make(f[i], f[j]), sb));
    }
}

TEST_CASE("mora standard basis of the e43 tangent cone (m = 4)") {
    OrderSpec local = OrderSpec::neg_degree_lex_order();
    auto sb = mora_standard_basis(to_elems(e43_gens(4), local), local);
    auto lf = lowest_forms_ideal(sb);
    std::vector<Exponents> monos;
    for (const GBElem& e : lf) {
        CHECK(!e.has_tail);  // all lowest forms are monomials here
        monos.push_back(e.lead);
    }
    MonomialIdeal got = MonomialIdeal::make(monos);
    MonomialIdeal expect = MonomialIdeal::make(
        {mono(0, 1, 1, 0), mono(0, 0, 2, 0), mono(1, 0, 0, 1), mono(0, 0, 1, 1),
         mono(0, 0, 0, 2), mono(0, 4, 0, 1), mono(6, 0, 1, 0), mono(0, 9, 0, 0)});
    CHECK(got == expect);
}

TEST_CASE("mora leaves a standard basis unchanged up to reduction") {
    OrderSpec local = OrderSpec::neg_degree_lex_order();
    auto sb = mora_standard_basis(to_elems(e43_gens(5), local), local);
    auto sb2 = mora_standard_basis(sb.basis, local);
    CHECK(sb2.basis == sb.basis);
}

TEST_CASE("lowest forms of individual binomials") {
    OrderSpec local = OrderSpec::neg_degree_lex_order();
    // x2^4 - x1 x4 (m = 4): the lowest form is the quadratic monomial
    StandardBasisResult sb{{*oriented(mono(0, 4, 0, 0), mono(1, 0, 0, 1), local)}, local, true};
    auto lf = lowest_forms_ideal(sb);
    REQUIRE(lf.size() == 1);
    CHECK(!lf[0].has_tail);
    CHECK(lf[0].lead == mono(1, 0, 0, 1));
    // x1^5 - x2 x3
    sb.basis = {*oriented(mono(5, 0, 0, 0), mono(0, 1, 1, 0), local)};
    lf = lowest_forms_ideal(sb);
    CHECK(lf[0].lead == mono(0, 1, 1, 0));
    // balanced: x1^2 x2 - x3^3 stays a binomial
    sb.basis = {*oriented(mono(2, 1, 0, 0), mono(0, 0, 3, 0), local)};
    lf = lowest_forms_ideal(sb);
    CHECK(lf[0].has_tail);
}

TEST_CASE("leading term ideal minimalizes monomial input") {
    OrderSpec o = OrderSpec::graded_revlex_order();
    std::vector<GBElem> in = {GBElem::monomial(mono(0, 0, 1, 1)),
                              GBElem::monomial(mono(0, 0, 2, 1)),  // divisible, dropped
                              GBElem::monomial(mono(0, 1, 0, 0))};
    auto gb = buchberger(in, o);
    MonomialIdeal lt = leading_term_ideal(gb);
    CHECK(lt == MonomialIdeal::make({mono(0, 0, 1, 1), mono(0, 1, 0, 0)}));
}

TEST_CASE("the five Gorenstein generators form a lex-inf Groebner basis") {
    for (std::array<Int, 4> n : {std::array<Int, 4>{10, 17, 22, 28},
                                 std::array<Int, 4>{9, 11, 34, 35},
                                 std::array<Int, 4>{1199, 2051, 2352, 3032},
                                 std::array<Int, 4>{627, 1546, 1662, 3377},
                                 std::array<Int, 4>{813, 1032, 1240, 1835}}) {
        GeneratorTuple g = GeneratorTuple::from(n);
        auto rep = classify(g);
        auto d = detect_bresinsky(g, rep.mingens.gens);
        REQUIRE(d.has_value());
        CHECK(verify_lexinf_groebner(*d));
    }
}

TEST_CASE("lex-inf verification fails on a corrupted f5") {
    GeneratorTuple g = GeneratorTuple::from({10, 17, 22, 28});
    auto d = detect_bresinsky(g, classify(g).mingens.gens);
    REQUIRE(d.has_value());
    std::swap(d->generators[4].lhs, d->generators[4].rhs);
    d->generators[4].lhs.e[0] += 1;  // no longer in the ideal
    CHECK(!verify_lexinf_groebner(*d));
}

TEST_CASE("mora stays within budget on the e43 family") {
    OrderSpec local = OrderSpec::neg_degree_lex_order();
    for (Int m = 4; m <= 8; ++m) {
        GBOptions tight{100000};
        CHECK_NOTHROW(mora_standard_basis(to_elems(e43_gens(m), local), local, tight));
    }
}

TEST_CASE("minimum degree of I_* equals the minimum lowest-form degree") {
    for (std::array<Int, 4> n : {std::array<Int, 4>{10, 17, 22, 28},
                                 std::array<Int, 4>{9, 11, 34, 35},
                                 std::array<Int, 4>{30, 34, 42, 51},
                                 std::array<Int, 4>{49, 63, 65, 78}}) {
        GeneratorTuple g = GeneratorTuple::from(n);
        auto mingens = classify(g).mingens.gens;
        MonomialIdeal lt = tangent_cone_leading_ideal(mingens);
        Int lt_min = lt.gens.front().total_degree();
        for (const Exponents& m : lt.gens) lt_min = std::min(lt_min, m.total_degree());
        Int gen_min = -1;
        for (const Binomial& b : mingens) {
            Int low = std::min(b.plus.total_degree(), b.minus.total_degree());
            gen_min = gen_min < 0 ? low : std::min(gen_min, low);
        }
        CHECK(lt_min == gen_min);
    }
}

TEST_CASE("groebner budget is enforced") {
    GeneratorTuple g = GeneratorTuple::from({10, 17, 22, 28});
    GBOptions tiny{3};
    CHECK_THROWS_AS(toric_generators_saturation(g, tiny), BudgetExceeded);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "momideal/poly.hpp"
#include "support.hpp"

using namespace momideal;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

const Monomial one{0, 0}, x{1, 0}, y{0, 1}, x2{2, 0}, xy{1, 1}, y2{0, 2};

}  // namespace

TEST_CASE("monomial order comparisons") {
    CHECK(compare(x2, xy, MonomialOrder::Lex) > 0);
    CHECK(compare(y2, x, MonomialOrder::Grlex) > 0);
    CHECK(compare(Monomial{0, 3}, x, MonomialOrder::Lex) < 0);
    CHECK(compare(x, x, MonomialOrder::Lex) == 0);
    // grlex refines by degree first, lex ignores it
    testing::Sampler rng(7001);
    for (int i = 0; i < 200; ++i) {
        Monomial a{unsigned(rng.uniform(0, 6)), unsigned(rng.uniform(0, 6))};
        Monomial b{unsigned(rng.uniform(0, 6)), unsigned(rng.uniform(0, 6))};
        if (a.total_degree() < b.total_degree())
            CHECK(compare(a, b, MonomialOrder::Grlex) < 0);
        if (a.ex > b.ex) CHECK(compare(a, b, MonomialOrder::Lex) > 0);
    }
}

TEST_CASE("column enumeration lists degree blocks in moment-matrix order") {
    auto cols = column_monomials(6);
    CHECK(cols == std::vector<Monomial>{one, x, y, x2, xy, y2});
}

TEST_CASE("leading terms") {
    auto [c1, m1] = P("16 + 6*x - 27*y + 5*y^2").leading_term(MonomialOrder::Lex);
    CHECK(c1 == 6);
    CHECK(m1 == x);
    auto [c2, m2] = P("8 - 14*y + 7*y^2 - y^3").leading_term(MonomialOrder::Lex);
    CHECK(c2 == -1);
    CHECK(m2 == Monomial{0, 3});
    auto [c3, m3] = Polynomial(Rational(5)).leading_term(MonomialOrder::Grlex);
    CHECK(c3 == 5);
    CHECK(m3 == one);
    CHECK_THROWS_AS(Polynomial{}.leading_term(MonomialOrder::Lex), ZeroPolynomial);
}

TEST_CASE("evaluation and products") {
    CHECK(P("14 - 21*x + 2*y + 5*x^2").evaluate(2, 4) == 0);
    Polynomial p = P("3*x^2*y - 7/2*y + 5");
    CHECK(p.evaluate(0, 0) == p.coeff(one));
    CHECK(P("x") * P("14 - 21*x + 2*y + 5*x^2") ==
          P("14*x - 21*x^2 + 2*x*y + 5*x^3"));
}

TEST_CASE("ring identities on random polynomials") {
    testing::Sampler rng(7002);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = rng.polynomial(4, 4), b = rng.polynomial(4, 4),
                   c = rng.polynomial(3, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Polynomial{});
        Rational px = rng.rational(5, 3), py = rng.rational(5, 3);
        CHECK((a * b).evaluate(px, py) == a.evaluate(px, py) * b.evaluate(px, py));
    }
}

TEST_CASE("division by an ordered tuple") {
    Polynomial f = P("x*y^2 + 1");
    std::vector<Polynomial> divisors{P("x*y + 1"), P("y + 1")};
    auto r = divide(f, divisors, MonomialOrder::Lex);
    CHECK(r.remainder == Polynomial(Rational(2)));
    // reassembly is the built-in oracle for every division
    Polynomial back = r.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        back += r.quotients[i] * divisors[i];
    CHECK(back == f);

    SUBCASE("self-division") {
        auto s = divide(f, std::vector<Polynomial>{f}, MonomialOrder::Lex);
        CHECK(s.quotients[0] == Polynomial(Rational(1)));
        CHECK(s.remainder.is_zero());
    }
    SUBCASE("a monomial multiple of a relation reduces to zero") {
        auto s = divide(P("14*x - 21*x^2 + 2*x*y + 5*x^3"),
                        std::vector<Polynomial>{P("14 - 21*x + 2*y + 5*x^2")},
                        MonomialOrder::Lex);
        CHECK(s.remainder.is_zero());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(divide(f, std::vector<Polynomial>{}, MonomialOrder::Lex),
                        EmptyDivisorList);
        CHECK_THROWS_AS(
            divide(f, std::vector<Polynomial>{Polynomial{}}, MonomialOrder::Lex),
            ZeroDivisor);
    }
}

TEST_CASE("division invariants on random inputs") {
    testing::Sampler rng(7003);
    for (int i = 0; i < 60; ++i) {
        MonomialOrder ord =
            rng.uniform(0, 1) ? MonomialOrder::Lex : MonomialOrder::Grlex;
        Polynomial f = rng.polynomial(5, 6);
        std::vector<Polynomial> divisors;
        int count = rng.uniform(1, 3);
        for (int d = 0; d < count; ++d) {
            Polynomial g = rng.polynomial(3, 3);
            if (!g.is_zero()) divisors.push_back(g);
        }
        if (divisors.empty()) continue;
        auto r = divide(f, divisors, ord);

        Polynomial back = r.remainder;
        for (std::size_t j = 0; j < divisors.size(); ++j)
            back += r.quotients[j] * divisors[j];
        CHECK(back == f);
        // remainder purity
        for (const auto& [m, c] : r.remainder.terms())
            for (const auto& g : divisors)
                CHECK(!g.leading_monomial(ord).divides(m));
        // LM(a_i f_i) <= LM(f)
        if (!f.is_zero())
            for (std::size_t j = 0; j < divisors.size(); ++j)
                if (!r.quotients[j].is_zero()) {
                    Monomial lm =
                        (r.quotients[j] * divisors[j]).leading_monomial(ord);
                    CHECK(compare(lm, f.leading_monomial(ord), ord) <= 0);
                }
    }
}

TEST_CASE("s-polynomials") {
    Polynomial f = P("x^2 - y"), g = P("x*y - 1");
    CHECK(s_polynomial(f, g, MonomialOrder::Lex) == P("x - y^2"));
    CHECK(s_polynomial(f, f, MonomialOrder::Lex).is_zero());
    CHECK(s_polynomial(f * Rational(3), g * Rational(-7, 2), MonomialOrder::Lex) ==
          s_polynomial(f, g, MonomialOrder::Lex));
    CHECK_THROWS_AS(s_polynomial(f, Polynomial{}, MonomialOrder::Lex),
                    ZeroPolynomial);
    // leading terms cancel below the lcm
    testing::Sampler rng(7004);
    for (int i = 0; i < 30; ++i) {
        Polynomial a = rng.polynomial(4, 4), b = rng.polynomial(4, 4);
        if (a.is_zero() || b.is_zero()) continue;
        Polynomial s = s_polynomial(a, b, MonomialOrder::Grlex);
        Monomial l = lcm(a.leading_monomial(MonomialOrder::Grlex),
                         b.leading_monomial(MonomialOrder::Grlex));
        if (!s.is_zero())
            CHECK(compare(s.leading_monomial(MonomialOrder::Grlex), l,
                          MonomialOrder::Grlex) < 0);
    }
}

TEST_CASE("buchberger") {
    SUBCASE("single generator") {
        Polynomial f = P("x^2 - y");
        auto gb = buchberger({f}, MonomialOrder::Lex);
        CHECK(gb.polys == std::vector<Polynomial>{f});
        CHECK(is_groebner_basis(gb));
    }
    SUBCASE("textbook pair") {
        auto gb = buchberger({P("x^2 - y"), P("x*y - 1")}, MonomialOrder::Lex);
        CHECK(is_groebner_basis(gb));
        auto red = reduce_basis(gb);
        CHECK(red.polys == std::vector<Polynomial>{P("y^3 - 1"), P("x - y^2")});
    }
    SUBCASE("relation generators against the integer-scaled basis") {
        auto gb = buchberger({P("14 - 21*x + 2*y + 5*x^2"),
                              P("12 - 8*x - 9*y + 5*x*y"),
                              P("16 + 6*x - 27*y + 5*y^2")},
                             MonomialOrder::Lex);
        CHECK(is_groebner_basis(gb));
        std::vector<Polynomial> expected{P("8 - 14*y + 7*y^2 - y^3"),
                                         P("16 + 6*x - 27*y + 5*y^2")};
        for (const auto& e : expected) CHECK(ideal_membership(e, gb));
        GroebnerBasis other = buchberger(expected, MonomialOrder::Lex);
        for (const auto& g : gb.polys) CHECK(ideal_membership(g, other));
    }
    SUBCASE("inputs survive as a prefix and zeros are dropped") {
        Polynomial f = P("x + y"), g = P("x - y");
        auto gb = buchberger({Polynomial{}, f, g}, MonomialOrder::Grlex);
        REQUIRE(gb.polys.size() >= 2);
        CHECK(gb.polys[0] == f);
        CHECK(gb.polys[1] == g);
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(buchberger({}, MonomialOrder::Lex), EmptyInput);
        CHECK_THROWS_AS(buchberger({Polynomial{}}, MonomialOrder::Lex), EmptyInput);
    }
}

TEST_CASE("reduce_basis") {
    auto gb = buchberger({P("14 - 21*x + 2*y + 5*x^2"), P("12 - 8*x - 9*y + 5*x*y"),
                          P("16 + 6*x - 27*y + 5*y^2")},
                         MonomialOrder::Lex);
    auto red = reduce_basis(gb);
    CHECK(red.reduced);
    CHECK(red.polys == std::vector<Polynomial>{P("y^3 - 7*y^2 + 14*y - 8"),
                                               P("x + 5/6*y^2 - 9/2*y + 8/3")});
    SUBCASE("idempotent") { CHECK(reduce_basis(red) == red); }
    SUBCASE("monic rescale of a single generator") {
        Polynomial f = P("3*x^2 - 6*y");
        auto r = reduce_basis(buchberger({f}, MonomialOrder::Lex));
        CHECK(r.polys == std::vector<Polynomial>{P("x^2 - 2*y")});
    }
    SUBCASE("permutation invariance") {
        std::vector<Polynomial> gens{P("14 - 21*x + 2*y + 5*x^2"),
                                     P("12 - 8*x - 9*y + 5*x*y"),
                                     P("16 + 6*x - 27*y + 5*y^2")};
        testing::Sampler rng(7005);
        for (int i = 0; i < 6; ++i) {
            std::shuffle(gens.begin(), gens.end(), rng.engine());
            CHECK(reduce_basis(buchberger(gens, MonomialOrder::Lex)) == red);
        }
    }
    SUBCASE("reduced members are mutually irreducible") {
        for (std::size_t i = 0; i < red.polys.size(); ++i)
            for (const auto& [m, c] : red.polys[i].terms())
                for (std::size_t j = 0; j < red.polys.size(); ++j)
                    if (i != j)
                        CHECK(!red.polys[j].leading_monomial(red.order).divides(m));
    }
}

TEST_CASE("ideal membership") {
    auto gb = reduce_basis(buchberger({P("14 - 21*x + 2*y + 5*x^2"),
                                       P("12 - 8*x - 9*y + 5*x*y"),
                                       P("16 + 6*x - 27*y + 5*y^2")},
                                      MonomialOrder::Lex));
    CHECK(ideal_membership(P("14*x - 21*x^2 + 2*x*y + 5*x^3"), gb));
    CHECK(ideal_membership(Polynomial{}, gb));
    CHECK(!ideal_membership(Polynomial(Rational(1)), gb));
    CHECK(!ideal_membership(P("x"), gb));
}

TEST_CASE("standard monomials") {
    auto gb = reduce_basis(buchberger({P("14 - 21*x + 2*y + 5*x^2"),
                                       P("12 - 8*x - 9*y + 5*x*y"),
                                       P("16 + 6*x - 27*y + 5*y^2")},
                                      MonomialOrder::Lex));
    auto std_monos = standard_monomials(gb);
    REQUIRE(std_monos.has_value());
    CHECK(*std_monos == std::vector<Monomial>{one, y, y2});
    CHECK(!standard_monomials(buchberger({P("x - y")}, MonomialOrder::Lex))
               .has_value());
}

TEST_CASE("text form round-trips") {
    CHECK(P("5*x^2 - 21*x + 2*y + 14").to_string() == "5*x^2 - 21*x + 2*y + 14");
    CHECK(Polynomial{}.to_string() == "0");
    CHECK(P("0").is_zero());
    CHECK(P("x + 5/6*y^2 - 9/2*y + 8/3").to_string() ==
          "x + 5/6*y^2 - 9/2*y + 8/3");
    CHECK(P("-y^3 + x*y").to_string() == "x*y - y^3");
    testing::Sampler rng(7006);
    for (int i = 0; i < 60; ++i) {
        Polynomial p = rng.polynomial(5, 5);
        CHECK(parse_polynomial(p.to_string(MonomialOrder::Lex)) == p);
        CHECK(parse_polynomial(p.to_string(MonomialOrder::Grlex)) == p);
    }
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z^2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
}

TEST_CASE("display normalization") {
    Polynomial p = P("x + 5/6*y^2 - 9/2*y + 8/3");
    CHECK(p.primitive_integer_form(MonomialOrder::Lex) ==
          P("6*x + 5*y^2 - 27*y + 16"));
    CHECK(Polynomial{}.primitive_integer_form(MonomialOrder::Lex).is_zero());
    // positive leading coefficient under the stated order
    Polynomial q = P("-2*x^2 + 4*y");
    CHECK(q.primitive_integer_form(MonomialOrder::Lex) == P("x^2 - 2*y"));
    CHECK(p.monic(MonomialOrder::Lex) == p);
}

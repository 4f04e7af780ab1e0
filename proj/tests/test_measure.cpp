#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momideal/measure.hpp"
#include "support.hpp"

using namespace momideal;

namespace {

AtomicMeasure reference_measure() {
    return AtomicMeasure({{2, 4}, {3, 2}, {1, 1}},
                         {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
}

AtomicMeasure equal_density_measure() {
    return AtomicMeasure({{2, 4}, {3, 2}, {1, 1}},
                         {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
}

}  // namespace

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(AtomicMeasure({{1, 1}}, {Rational(1), Rational(1)}),
                    LengthMismatch);
    CHECK_THROWS_AS(AtomicMeasure({}, {}), EmptyInput);
    CHECK_THROWS_AS(AtomicMeasure({{1, 1}, {2, 2}},
                                  {Rational(1, 2), Rational(-1, 2)}),
                    NonpositiveDensity);
    CHECK_THROWS_AS(AtomicMeasure({{1, 1}, {1, 1}},
                                  {Rational(1, 2), Rational(1, 2)}),
                    DuplicateAtom);
    CHECK_THROWS_AS(AtomicMeasure({{1, 1}, {2, 2}}, {Rational(1), Rational(1)}),
                    DensitySumNotOne);
    AtomicMeasure normalized({{1, 1}, {2, 2}}, {Rational(3), Rational(1)}, true);
    CHECK(normalized.densities() ==
          std::vector<Rational>{Rational(3, 4), Rational(1, 4)});
    // negative coordinates are fine for relation work
    CHECK_NOTHROW(AtomicMeasure({{-1, 2}}, {Rational(1)}));
}

TEST_CASE("moments") {
    AtomicMeasure mu = reference_measure();
    CHECK(moment(mu, {1, 0}) == Rational(13, 6));
    CHECK(moment(mu, {0, 0}) == 1);
    CHECK(moment(mu, {1, 1}) == Rational(37, 6));
    CHECK(moment(equal_density_measure(), {0, 1}) == Rational(7, 3));
}

TEST_CASE("monomial basis") {
    CHECK(monomial_basis(0) == std::vector<Monomial>{{0, 0}});
    CHECK(monomial_basis(1) == std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}});
    auto b2 = monomial_basis(2);
    CHECK(b2.size() == 6);
    CHECK(b2 == std::vector<Monomial>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    CHECK(monomial_basis(5).size() == 21);
}

TEST_CASE("moment matrix") {
    AtomicMeasure mu = reference_measure();
    RatMatrix m3 = moment_matrix(mu, 3);
    REQUIRE(m3.rows() == 10);
    CHECK(m3.at(0, 0) == 1);
    CHECK(m3.at(0, 1) == Rational(13, 6));
    CHECK(m3.at(0, 4) == Rational(37, 6));
    CHECK(m3.at(9, 9) == Rational(4139, 2));
    RatMatrix n3 = moment_matrix(equal_density_measure(), 3);
    CHECK(n3.at(0, 1) == 2);
    CHECK(n3.at(0, 2) == Rational(7, 3));
    CHECK(n3.at(9, 9) == 1387);

    SUBCASE("point mass at the origin") {
        AtomicMeasure delta({{0, 0}}, {Rational(1)});
        RatMatrix m = moment_matrix(delta, 2);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                CHECK(m.at(i, j) == (i == 0 && j == 0 ? 1 : 0));
    }
    SUBCASE("sum decomposition over the atoms") {
        testing::Sampler rng(8201);
        for (int t = 0; t < 10; ++t) {
            AtomicMeasure m = rng.measure(std::size_t(rng.uniform(1, 4)));
            unsigned k = unsigned(rng.uniform(0, 3));
            RatMatrix total = moment_matrix(m, k);
            RatMatrix acc(total.rows(), total.cols());
            for (std::size_t i = 0; i < m.atom_count(); ++i) {
                AtomicMeasure delta({m.atoms()[i]}, {Rational(1)});
                RatMatrix part = moment_matrix(delta, k);
                for (std::size_t r = 0; r < acc.rows(); ++r)
                    for (std::size_t c = 0; c < acc.cols(); ++c)
                        acc.at(r, c) += m.densities()[i] * part.at(r, c);
            }
            CHECK(acc == total);
        }
    }
    SUBCASE("rank one for every point mass, rank bounded by atom count") {
        testing::Sampler rng(8202);
        for (int t = 0; t < 10; ++t) {
            AtomicMeasure delta(
                {{rng.rational(9, 4), rng.rational(9, 4)}}, {Rational(1)});
            CHECK(rref(moment_matrix(delta, unsigned(rng.uniform(0, 4)))).rank == 1);
            AtomicMeasure m = rng.measure(std::size_t(rng.uniform(1, 5)));
            CHECK(rref(moment_matrix(m, unsigned(rng.uniform(0, 4)))).rank <=
                  m.atom_count());
        }
    }
    SUBCASE("psd and the Vandermonde factorization") {
        testing::Sampler rng(8203);
        for (int t = 0; t < 10; ++t) {
            AtomicMeasure m = rng.measure(std::size_t(rng.uniform(1, 5)));
            unsigned k = unsigned(rng.uniform(0, 3));
            RatMatrix mm = moment_matrix(m, k);
            CHECK(psd_check(mm));
            RatMatrix v = vandermonde(m, k);
            RatMatrix lambda(m.atom_count(), m.atom_count());
            for (std::size_t i = 0; i < m.atom_count(); ++i)
                lambda.at(i, i) = m.densities()[i];
            CHECK(matmul(matmul(transpose(v), lambda), v) == mm);
        }
    }
}

TEST_CASE("vandermonde matrix") {
    CHECK(vandermonde(reference_measure(), 2) ==
          parse_matrix("1 2 4 4 8 16\n1 3 2 9 6 4\n1 1 1 1 1 1\n"));
    SUBCASE("all-ones row for the point mass at (1,1)") {
        AtomicMeasure delta({{1, 1}}, {Rational(1)});
        RatMatrix v = vandermonde(delta, 3);
        REQUIRE(v.rows() == 1);
        for (std::size_t j = 0; j < v.cols(); ++j) CHECK(v.at(0, j) == 1);
    }
    SUBCASE("full rank for random atoms") {
        testing::Sampler rng(8204);
        for (int t = 0; t < 10; ++t) {
            std::size_t n = std::size_t(rng.uniform(1, 6));
            unsigned k = unsigned(rng.uniform(2, 4));
            AtomicMeasure m(rng.distinct_atoms(n, false, 30, 7), rng.densities(n));
            std::size_t dim = (std::size_t(k) + 1) * (k + 2) / 2;
            CHECK(rref(vandermonde(m, k)).rank == std::min(n, dim));
        }
    }
}

TEST_CASE("measure text format") {
    const char* text =
        "# reference measure\n"
        "1/2 2 4\n"
        "1/3 3 2\n"
        "1/6 1 1\n";
    AtomicMeasure mu = parse_measure(text);
    CHECK(mu == reference_measure());
    CHECK(parse_measure(to_text(mu)) == mu);
    CHECK(to_text(mu) == "1/2 2 4\n1/3 3 2\n1/6 1 1\n");

    CHECK_THROWS_AS(parse_measure("1/2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_measure("1/2 2 4 9\n"), ParseError);
    CHECK_THROWS_AS(parse_measure("a b c\n"), ParseError);
    CHECK_THROWS_AS(parse_measure("# nothing here\n"), ParseError);
    CHECK_THROWS_AS(parse_measure("1/2 2 4\n"), DensitySumNotOne);
    CHECK(parse_measure("2 2 4\n6 1 1\n", true).densities() ==
          std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
    // column information in errors
    try {
        parse_measure("1/2 2 x\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 7);
    }
}

#include "helpers.hpp"

#include "dgpoly/linear_change.hpp"
#include "dgpoly/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace dgpoly;

namespace {

Polynomial P(const char* text, std::size_t n) { return Polynomial::parse(text, n); }

}  // namespace

TEST_CASE("monomials_of_degree: sizes and order") {
    const auto one = monomials_of_degree(3, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].is_one());

    const auto two = monomials_of_degree(2, 2);
    REQUIRE(two.size() == 3);
    CHECK(Polynomial::monomial(two[0]) == P("x1^2", 2));
    CHECK(Polynomial::monomial(two[1]) == P("x1 x2", 2));
    CHECK(Polynomial::monomial(two[2]) == P("x2^2", 2));

    CHECK(monomials_of_degree(4, 3).size() == 20);

    for (std::size_t n = 1; n <= 6; ++n) {
        for (int d = 0; d <= 10; ++d) {
            const auto monos = monomials_of_degree(n, d);
            CHECK(monos.size() == oracle::binomial(static_cast<unsigned>(n + d - 1), static_cast<unsigned>(d)));
            for (std::size_t i = 1; i < monos.size(); ++i) CHECK(grevlex_less(monos[i], monos[i - 1]));
        }
    }
}

TEST_CASE("grevlex breaks degree ties from the last variable") {
    // x1 x3 < x2^2 in grevlex with x1 > x2 > x3.
    CHECK(grevlex_less(P("x1 x3", 3).leading_monomial(), P("x2^2", 3).leading_monomial()));
    CHECK(grevlex_less(P("x3^2", 3).leading_monomial(), P("x1 x2", 3).leading_monomial()));
    CHECK(grevlex_less(P("x1^5", 3).leading_monomial(), P("x3^6", 3).leading_monomial()));
}

TEST_CASE("arithmetic examples") {
    const Polynomial p = P("3/2 x1^2 x3 - x2 + 7", 3);
    CHECK(p * Polynomial::constant(3, 1) == p);
    CHECK(P("x1", 2) * P("x2", 2) == P("x2", 2) * P("x1", 2));
    CHECK((P("x1 + x2", 2)).pow(2) == P("x1^2 + 2 x1 x2 + x2^2", 2));
    CHECK((p - p).is_zero());
    CHECK(p * Scalar(0) == Polynomial(3));
}

TEST_CASE("ring axioms and graded components on random inputs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const Polynomial a = testing_util::random_homogeneous(rng, n, rng() % 3) +
                             testing_util::random_homogeneous(rng, n, rng() % 3);
        const Polynomial b = testing_util::random_homogeneous(rng, n, rng() % 3) +
                             testing_util::random_homogeneous(rng, n, 1 + rng() % 2);
        const Polynomial c = testing_util::random_homogeneous(rng, n, rng() % 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
        for (int d = 0; d <= 4; ++d) {
            Polynomial expected(n);
            for (int i = 0; i <= d; ++i) expected += a.component(i) * b.component(d - i);
            CHECK((a * b).component(d) == expected);
        }
    }
}

TEST_CASE("parse and print round-trip") {
    CHECK(P("3/2 x1^2 x3 - x2 + 7", 3).to_string() == "3/2 x1^2 x3 - x2 + 7");
    CHECK(P("0", 2).to_string() == "0");
    CHECK(P("x1 x2 - x2^3", 2).to_string() == "-x2^3 + x1 x2");
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        Polynomial p(n);
        for (int d = 0; d <= 3; ++d) p += testing_util::random_homogeneous(rng, n, d, 3);
        const std::string text = p.to_string();
        CHECK(Polynomial::parse(text, n) == p);
        CHECK(Polynomial::parse(text, n).to_string() == text);
    }
    CHECK_THROWS_AS(P("x4", 3), ParseError);
    CHECK_THROWS_AS(P("x1 +", 3), ParseError);
    CHECK_THROWS_AS(P("", 3), ParseError);
    CHECK_THROWS_AS(P("1.5 x1", 3), ParseError);
}

TEST_CASE("substitute examples and properties") {
    const Polynomial p = P("x1^2 - 3 x1 x2 + 2", 2);
    CHECK(substitute(p, LinearChange::identity(2)) == p);

    const LinearChange swap = LinearChange::from_rows({{0, 1}, {1, 0}});
    CHECK(substitute(P("x1^2", 2), swap) == P("x2^2", 2));

    const LinearChange c = LinearChange::from_rows({{2, 3}, {0, 1}});
    CHECK(substitute(P("x1", 2), c) == P("2 x1 + 3 x2", 2));

    CHECK_THROWS_AS(LinearChange::from_rows({{1, 2}, {2, 4}}), std::invalid_argument);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = testing_util::small_rational(rng);
            rows[i][i] += 10;  // diagonally dominant, hence invertible
        }
        const LinearChange ch = LinearChange::from_rows(rows);
        const Polynomial a = testing_util::random_homogeneous(rng, n, 2);
        const Polynomial b = testing_util::random_homogeneous(rng, n, 1);
        CHECK(substitute(a * b, ch) == substitute(a, ch) * substitute(b, ch));
        CHECK(substitute(a + b, ch) == substitute(a, ch) + substitute(b, ch));
        CHECK(substitute(substitute(a, ch), ch.inverse()) == a);
        CHECK(substitute(a, ch).is_homogeneous());
        CHECK(substitute(a, ch).degree() == (a.is_zero() ? -1 : 2));
    }
}

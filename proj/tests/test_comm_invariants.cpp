#include "helpers.hpp"

#include "dgpoly/free_resolution.hpp"
#include "dgpoly/quotient_ring.hpp"

#include <doctest.h>

using namespace dgpoly;

namespace {

QuotientRing free_ring(std::size_t g, int weight) {
    return QuotientRing(std::vector<int>(g, weight), default_variable_names(g, "g"), {});
}

/// k[g_1..g_m] / (all products g_i g_j).
QuotientRing square_zero_ring(std::size_t m) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) gens.push_back(Polynomial::variable(m, i) * Polynomial::variable(m, j));
    }
    const std::vector<int> w(m, 1);
    return QuotientRing(w, default_variable_names(m, "g"), groebner_basis(gens, w));
}

/// Coefficients of prod 1/(1 - t^w), by the usual coin-change recursion.
std::vector<long long> free_hilbert(const std::vector<int>& weights, int bound) {
    std::vector<long long> h(bound + 1, 0);
    h[0] = 1;
    for (int w : weights) {
        for (int d = w; d <= bound; ++d) h[d] += h[d - w];
    }
    return h;
}

void check_minimal(const BettiTable& t) {
    for (std::size_t i = 1; i < t.maps.size(); ++i) {
        for (const auto& image : t.maps[i]) {
            CHECK_FALSE(image.empty());
            for (const auto& e : image) {
                CHECK_FALSE(e.value.is_zero());
                CHECK(e.value.degree() > 0);
            }
        }
    }
}

void check_alternating_sum(const QuotientRing& r, const BettiTable& t) {
    REQUIRE(t.terminated);
    const int bound = t.internal_degree_bound;
    const auto h = hilbert_series(r, bound);
    std::vector<long long> total(bound + 1, 0);
    for (std::size_t i = 0; i < t.generator_degrees.size(); ++i) {
        const long long sign = i % 2 == 0 ? 1 : -1;
        for (int q : t.generator_degrees[i]) {
            for (int d = q; d <= bound; ++d) total[d] += sign * static_cast<long long>(h[d - q]);
        }
    }
    CHECK(total[0] == 1);
    for (int d = 1; d <= bound; ++d) CHECK(total[d] == 0);
}

}  // namespace

TEST_CASE("buchberger: examples") {
    const auto none = buchberger(extract_presentation(AlgebraSpec::zero(2), 4));
    CHECK(none.groebner().empty());

    const std::vector<int> w{1, 1};
    const Polynomial q = Polynomial::parse("x1^2 - 3 x1 x2", 2);
    const auto single = groebner_basis({q}, w);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == q);

    const auto pres = extract_presentation(AlgebraSpec::representative(3), 8);
    const QuotientRing ring = buchberger(pres);
    CHECK(is_groebner_basis(ring.groebner(), ring.weights()));
    CHECK(groebner_basis(ring.groebner(), ring.weights()) == ring.groebner());
    for (const auto& rel : pres.relations) CHECK(ring.normal_form(rel).is_zero());
}

TEST_CASE("buchberger on a non-trivial ideal") {
    const std::vector<int> w{1, 1, 1};
    const std::vector<Polynomial> gens = {Polynomial::parse("x1 x2 - x3^2", 3), Polynomial::parse("x1^2 - x2 x3", 3),
                                          Polynomial::parse("x2^2 - x1 x3", 3)};
    const auto g = groebner_basis(gens, w);
    CHECK(is_groebner_basis(g, w));
    CHECK(groebner_basis(g, w) == g);
    for (const auto& p : gens) CHECK(reduce(p, g, w).is_zero());
    for (const auto& p : g) CHECK(p.leading_coefficient(w) == 1);
}

TEST_CASE("hilbert_series: examples") {
    CHECK(hilbert_series(free_ring(1, 2), 6) == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
    CHECK(hilbert_series(free_ring(3, 2), 4)[4] == 6);
    CHECK(hilbert_series(square_zero_ring(3), 3) == std::vector<std::size_t>{1, 3, 0, 0});

    for (std::size_t n = 2; n <= 3; ++n) {
        const auto report = cohomology_dims(AlgebraSpec::representative(n), 8);
        const auto ring = buchberger(extract_presentation(report, 8));
        CHECK(hilbert_series(ring, 8) == report.dims);
    }
}

TEST_CASE("krull_dimension and depth: examples") {
    for (std::size_t g = 1; g <= 4; ++g) {
        const auto r = free_ring(g, 2);
        CHECK(krull_dimension(r) == g);
        const auto depth = depth_interval(r, 10, 1);
        CHECK(depth.lower == g);
        CHECK(depth.upper == g);
    }
    const auto art = square_zero_ring(3);
    CHECK(krull_dimension(art) == 0);
    const auto depth = depth_interval(art, 6, 1);
    CHECK(depth.lower == 0);
    CHECK(depth.upper == 0);

    const auto rep3 = buchberger(extract_presentation(AlgebraSpec::representative(3), 8));
    CHECK(krull_dimension(rep3) == 2);
    const auto d3 = depth_interval(rep3, 8, 1);
    CHECK(d3.lower <= d3.upper);
    CHECK(d3.upper == 2);
    CHECK(d3.sequence.size() == d3.lower);
}

TEST_CASE("is_regular_on_quotient") {
    const auto r = free_ring(2, 1);
    const Polynomial g1 = Polynomial::variable(2, 0);
    CHECK(is_regular_on_quotient(r, {}, g1, 6));
    CHECK_FALSE(is_regular_on_quotient(r, {g1}, g1, 6));
    CHECK(is_regular_on_quotient(r, {g1}, Polynomial::variable(2, 1), 6));
}

TEST_CASE("minimal_free_resolution_of_k: Koszul cases") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto ring = buchberger(extract_presentation(AlgebraSpec::zero(n), 8));
        const auto t = minimal_free_resolution_of_k(ring, static_cast<int>(n) + 2, 12);
        REQUIRE(t.terminated);
        REQUIRE(t.betti.size() == n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            CHECK(t.betti[i] == oracle::binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)));
            for (int q : t.generator_degrees[i]) CHECK(q == static_cast<int>(i));
        }
        CHECK(t.projective_dimension() == n);
        check_minimal(t);
        check_alternating_sum(ring, t);
    }
    const auto one = minimal_free_resolution_of_k(free_ring(1, 2), 3, 12);
    CHECK(one.betti == std::vector<std::size_t>{1, 1});
    CHECK(one.projective_dimension() == 1);
    CHECK(one.generator_degrees[1] == std::vector<int>{2});
}

TEST_CASE("minimal_free_resolution_of_k: representative n = 3") {
    const auto ring = buchberger(extract_presentation(AlgebraSpec::representative(3), 8));
    const auto t = minimal_free_resolution_of_k(ring, 5, 12);
    CHECK_FALSE(t.terminated);
    CHECK(t.betti == std::vector<std::size_t>{1, 3, 4, 4, 4, 4});
    CHECK_FALSE(t.projective_dimension());
    CHECK(t.pd_lower_bound() == 5);
    check_minimal(t);
}

TEST_CASE("minimal_free_resolution_of_k: bound too small") {
    CHECK_THROWS_AS(minimal_free_resolution_of_k(free_ring(1, 2), 3, 2), BoundTooSmall);
    const auto ok = minimal_free_resolution_of_k(free_ring(1, 2), 3, 4);
    CHECK(ok.terminated);
}

TEST_CASE("hilbert series of a free ring matches the oracle count") {
    const std::vector<int> w{1, 2, 2, 3};
    const auto h = hilbert_series(QuotientRing(w, default_variable_names(4, "g"), {}), 9);
    const auto ref = free_hilbert(w, 9);
    for (int d = 0; d <= 9; ++d) CHECK(static_cast<long long>(h[d]) == ref[d]);
}

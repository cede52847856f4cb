#include "helpers.hpp"

#include "dgpoly/invariants.hpp"
#include "dgpoly/semifree.hpp"

#include <doctest.h>

#include <random>

using namespace dgpoly;

namespace {

SemifreeResolution em_for(const AlgebraSpec& spec, int truncation) {
    const auto pres = extract_presentation(spec, 8);
    const auto ring = buchberger(pres);
    const auto table = minimal_free_resolution_of_k(ring, static_cast<int>(pres.generators.size()) + 2, 12);
    return eilenberg_moore(spec, pres, table, truncation);
}

void check_valid(const SemifreeResolution& f, bool require_minimal) {
    const auto v = validate(f);
    INFO(f.method << " " << f.spec.to_string() << ": " << v.detail);
    CHECK(v.square_zero);
    CHECK(v.semifree);
    CHECK(v.quasi_isomorphism);
    if (require_minimal) CHECK(v.minimal);
    CHECK(v.ok(require_minimal));
    REQUIRE(v.cohomology.size() == static_cast<std::size_t>(f.truncation_degree + 1));
    CHECK(v.cohomology[0] == 1);
    for (int d = 1; d <= f.truncation_degree; ++d) CHECK(v.cohomology[d] == 0);
}

ModuleElement random_element(std::mt19937_64& rng, const SemifreeResolution& f, int terms) {
    ModuleElement m;
    for (int k = 0; k < terms; ++k) {
        const std::size_t j = rng() % f.basis.size();
        m = add(m, {{j, testing_util::random_homogeneous(rng, f.spec.n(), static_cast<int>(rng() % 3), 2)}});
    }
    return m;
}

}  // namespace

TEST_CASE("eilenberg_moore: examples") {
    const auto f2 = em_for(AlgebraSpec::zero(2), 6);
    CHECK(f2.level_sizes() == std::vector<std::size_t>{1, 2, 1});
    CHECK(dg_free_class(f2) == 2);
    check_valid(f2, true);

    const auto f3 = em_for(AlgebraSpec::zero(3), 6);
    CHECK(f3.level_sizes() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(dg_free_class(f3) == 3);
    check_valid(f3, true);

    const auto r2 = em_for(AlgebraSpec::representative(2), 8);
    CHECK(r2.level_sizes() == std::vector<std::size_t>{1, 1});
    CHECK(dg_free_class(r2) == 1);
    check_valid(r2, false);

    for (const auto& f : {f2, f3, r2}) {
        std::size_t nonzero_levels = 0;
        for (auto s : f.level_sizes()) nonzero_levels += s > 0;
        CHECK(dg_free_class(f) == static_cast<int>(nonzero_levels) - 1);
    }
}

TEST_CASE("eilenberg_moore needs a terminated table") {
    const AlgebraSpec spec = AlgebraSpec::representative(3);
    const auto pres = extract_presentation(spec, 8);
    const auto table = minimal_free_resolution_of_k(buchberger(pres), 4, 12);
    REQUIRE_FALSE(table.terminated);
    CHECK_THROWS_AS(eilenberg_moore(spec, pres, table, 6), std::domain_error);
}

TEST_CASE("eilenberg_moore reports a table that does not lift") {
    // Step 2 maps to g_1 * (step-1 generator), which is not a syzygy over k[g_1].
    const AlgebraSpec spec = AlgebraSpec::zero(1);
    const auto pres = extract_presentation(spec, 4);
    const Polynomial g = Polynomial::variable(1, 0);
    BettiTable fake;
    fake.betti = {1, 1, 1};
    fake.generator_degrees = {{0}, {1}, {2}};
    fake.maps = {{}, {{FreeEntry{0, g}}}, {{FreeEntry{0, g}}}};
    fake.internal_degree_bound = 6;
    fake.terminated = true;
    try {
        eilenberg_moore(spec, pres, fake, 4);
        FAIL("expected LiftObstruction");
    } catch (const LiftObstruction& e) {
        CHECK(e.degree() == 1);
    }
}

TEST_CASE("killing_cycles_resolution: examples") {
    const auto k1 = killing_cycles_resolution(AlgebraSpec::zero(1), 4);
    REQUIRE(k1.basis.size() == 2);
    REQUIRE(k1.basis[1].differential.size() == 1);
    CHECK(k1.basis[1].differential.at(0) == Polynomial::variable(1, 0));
    CHECK(dg_free_class(k1) == 1);
    check_valid(k1, true);

    const auto k2 = killing_cycles_resolution(AlgebraSpec::zero(2), 6);
    CHECK(k2.basis_ranks() == em_for(AlgebraSpec::zero(2), 6).basis_ranks());
    check_valid(k2, true);

    // Linear resolution: step-i generators in internal degree 2i, cohomological degree i.
    const auto k3 = killing_cycles_resolution(AlgebraSpec::representative(3), 6);
    const auto pres = extract_presentation(AlgebraSpec::representative(3), 8);
    const auto table = minimal_free_resolution_of_k(buchberger(pres), 5, 12);
    for (std::size_t i = 0; i < table.generator_degrees.size(); ++i) {
        for (int q : table.generator_degrees[i]) CHECK(q == 2 * static_cast<int>(i));
    }
    const auto ranks = k3.basis_ranks();
    for (std::size_t d = 0; d < ranks.size() && d < table.betti.size(); ++d) CHECK(ranks[d] == table.betti[d]);
    check_valid(k3, true);
}

TEST_CASE("killing cycles on random specs are valid and minimal") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const auto f = killing_cycles_resolution(testing_util::random_spec(rng, n), 4);
        check_valid(f, true);
    }
}

TEST_CASE("dg free class of t = 0 resolutions is n") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto f = killing_cycles_resolution(AlgebraSpec::zero(n), 2);
        CHECK(dg_free_class(f) == static_cast<int>(n));
        check_valid(f, true);
    }
    SemifreeResolution free_module;
    free_module.spec = AlgebraSpec::zero(2);
    free_module.basis.push_back({"e_0", 0, 0, 0, {}});
    free_module.basis.push_back({"e_1", 2, 0, 0, {}});
    CHECK(dg_free_class(free_module) == 0);
}

TEST_CASE("module Leibniz rule and suspension signs on random triples") {
    std::mt19937_64 rng(42);
    const std::vector<AlgebraSpec> specs = {AlgebraSpec::representative(2), AlgebraSpec::parse("1,-2,3"),
                                            AlgebraSpec::zero(2)};
    int triples = 0;
    for (const auto& spec : specs) {
        const auto f = killing_cycles_resolution(spec, 3);
        const Differential d(spec);
        for (int k = 0; k < 40; ++k, ++triples) {
            const int deg_a = static_cast<int>(rng() % 3);
            const Polynomial a = testing_util::random_homogeneous(rng, spec.n(), deg_a, 3);
            const ModuleElement m = random_element(rng, f, 3);
            const int shift = static_cast<int>(rng() % 4);
            const Scalar sa = deg_a % 2 == 0 ? 1 : -1;

            // d(a m) = d(a) m + (-1)^{|a|} a d(m)
            const ModuleElement lhs = apply_differential(f.basis, d, act(a, m));
            const ModuleElement rhs = add(act(d.apply(a), m), act(a, apply_differential(f.basis, d, m)), sa);
            CHECK(lhs == rhs);

            // a (S^i m) = (-1)^{|a| i} S^i (a m)
            const Suspended s{shift, m};
            const Suspended as = act(a, s);
            CHECK(as.shift == shift);
            const Scalar twist = (deg_a * shift) % 2 == 0 ? 1 : -1;
            CHECK(as.element == add({}, act(a, m), twist));

            // The same Leibniz rule holds after suspension.
            const Suspended dl = apply_differential(f.basis, d, act(a, s));
            const Suspended t1 = act(d.apply(a), s);
            const Suspended t2 = act(a, apply_differential(f.basis, d, s));
            CHECK(dl.element == add(t1.element, t2.element, sa));
        }
    }
    CHECK(triples >= 100);
}

TEST_CASE("ModulePiece round-trips and rejects foreign support") {
    const auto f = killing_cycles_resolution(AlgebraSpec::zero(2), 2);
    const ModulePiece piece(f.basis, 2, 1);
    for (std::size_t k = 0; k < piece.size(); ++k) {
        const SparseVector v{{static_cast<std::uint32_t>(k), Scalar(3)}};
        CHECK(piece.to_vector(piece.from_vector(v)) == v);
    }
    const ModuleElement wrong{{0, Polynomial::parse("x1^3", 2)}};
    CHECK_THROWS_AS(piece.to_vector(wrong), std::out_of_range);
}

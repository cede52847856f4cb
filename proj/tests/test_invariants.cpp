#include "helpers.hpp"

#include "dgpoly/invariants.hpp"

#include <doctest.h>

using namespace dgpoly;

namespace {

Polynomial P(const char* text, std::size_t n) { return Polynomial::parse(text, n); }

Verdict verdict_of(const std::vector<ClaimVerdict>& rows, const std::string& id) {
    for (const auto& r : rows) {
        if (r.id == id) return r.verdict;
    }
    FAIL("missing claim " << id);
    return Verdict::Inconclusive;
}

BoundsConfig small_config() {
    BoundsConfig cfg;
    cfg.max_degree = 6;
    cfg.truncation_degree = 4;
    cfg.square_zero_degree = 6;
    return cfg;
}

}  // namespace

TEST_CASE("dg_krull_certificate: examples") {
    const auto z = dg_krull_certificate(AlgebraSpec::zero(2));
    CHECK(z.valid());
    CHECK(z.length == 2);
    CHECK(z.upper_bound == 2);

    const auto r = dg_krull_certificate(AlgebraSpec::representative(3));
    CHECK(r.valid());
    CHECK(r.length == 3);
    REQUIRE(r.chain.size() == 4);
    CHECK(r.chain[0].empty());
    CHECK(r.chain[1] == std::vector<Polynomial>{P("x1", 3)});
    CHECK(r.chain[2] == std::vector<Polynomial>{P("x1", 3), P("x2", 3)});
    CHECK(r.chain[3] == std::vector<Polynomial>{P("x1", 3), P("x2", 3), P("x3", 3)});
    for (const auto& c : r.checks) {
        CHECK(c.dg_stable);
        CHECK(c.prime);
    }
    CHECK(r.strict_inclusions);

    const auto t = dg_krull_certificate(AlgebraSpec::parse("2,3"));
    CHECK(t.valid());
    CHECK(t.length == 2);
    REQUIRE(t.chain.size() == 3);
    CHECK(t.chain[1] == std::vector<Polynomial>{P("2 x1 + 3 x2", 2)});
    // d(y2) = y1 y2 lies in (y1).
    const Differential d(AlgebraSpec::parse("2,3"));
    CHECK(d.apply(P("x2", 2)) == P("2 x1 + 3 x2", 2) * P("x2", 2));
}

TEST_CASE("dg_krull_certificate on random specs") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto c = dg_krull_certificate(testing_util::random_spec(rng, n), 6);
        CHECK(c.valid());
        CHECK(c.length == static_cast<int>(n));
        CHECK(c.upper_bound == static_cast<int>(n));
    }
}

TEST_CASE("Interval helpers") {
    const Interval a{2, 5, "lo", "hi"};
    CHECK(a.contains(2));
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(6));
    CHECK_FALSE(a.exact());
    const Interval b{3, 3, "lo", "hi"};
    CHECK(b.exact() == 3);
    const Interval c{4, std::nullopt, "lo", ""};
    CHECK(c.contains(1000));
    CHECK(c.consistent());
    CHECK_FALSE((Interval{5, 4, "", ""}).consistent());
    const Interval s = shifted(a, -1);
    CHECK(s.lower == 1);
    CHECK(s.upper == 4);
}

TEST_CASE("cone length and level bounds for t = 0") {
    for (std::size_t n : {1u, 3u}) {
        const auto report = assemble_report(AlgebraSpec::zero(n), small_config());
        const int nn = static_cast<int>(n);
        CHECK(report.cl_k.exact() == nn);
        CHECK(report.level_k.exact() == nn + 1);
        CHECK(report.ghlen_k.exact() == nn);
        const auto [level, ghlen] = level_and_ghost_bounds(n, report.cl_k);
        CHECK(level.lower == nn + 1);
        CHECK(ghlen.upper == nn);
        const auto cl = cone_length_bounds(report.depth, report.betti, report.em_class);
        CHECK(cl.lower == nn);
        CHECK(cl.upper == nn);
    }
}

TEST_CASE("assemble_report: examples") {
    const auto r2 = assemble_report(AlgebraSpec::zero(2), small_config());
    CHECK(r2.gldim.exact() == 2);
    CHECK(r2.dgdim.length == 2);
    CHECK(r2.ghlen_k.exact() == 2);
    CHECK(r2.rouqdim.lower == 3);
    CHECK(r2.rouqdim.upper == 3);
    CHECK(r2.errors.empty());

    const auto r1 = assemble_report(AlgebraSpec::zero(1), small_config());
    CHECK(r1.gldim.exact() == 1);
    CHECK(r1.dgdim.length == 1);
    CHECK(r1.rouqdim.exact() == 2);

    const auto r3 = assemble_report(AlgebraSpec::representative(3), small_config());
    CHECK(r3.dgdim.valid());
    CHECK(r3.dgdim.length == 3);
    CHECK(r3.predicted_gldim == 3);
    CHECK(r3.predicted_rouqdim == 4);
    CHECK(r3.krull == 2);
    CHECK_FALSE(r3.gldim.upper);
    CHECK(r3.hilbert_matches_cohomology);

    for (const auto* r : {&r1, &r2, &r3}) CHECK(structural_violations(*r).empty());
}

TEST_CASE("verify_claims: examples") {
    const auto r3 = assemble_report(AlgebraSpec::representative(3), small_config());
    const auto one = verify_claims(r3, {"ThmDgkrull"});
    REQUIRE(one.size() == 1);
    CHECK(one[0].verdict == Verdict::Pass);

    const auto all3 = verify_claims(r3);
    CHECK(all3.size() == claim_ids().size());
    CHECK(verdict_of(all3, "Prop3.1-square-zero") == Verdict::Pass);
    CHECK(verdict_of(all3, "Prop4.2-classification") == Verdict::Pass);
    CHECK(verdict_of(all3, "Prop5.1-generators") == Verdict::Pass);
    CHECK(verdict_of(all3, "Prop5.1-freeness") == Verdict::Fail);
    for (const auto& row : all3) {
        if (row.verdict == Verdict::Fail) CHECK_FALSE(row.witness.empty());
    }

    const auto r2 = assemble_report(AlgebraSpec::representative(2), small_config());
    CHECK(verdict_of(verify_claims(r2), "Prop5.1-freeness") == Verdict::Pass);

    const auto z = assemble_report(AlgebraSpec::zero(3), small_config());
    for (const auto& row : verify_claims(z)) {
        INFO(row.id);
        CHECK((row.verdict == Verdict::Pass || row.verdict == Verdict::NotApplicable));
    }

    CHECK_THROWS_AS(verify_claims(r3, {"NoSuchClaim"}), std::invalid_argument);
}

TEST_CASE("verdict names") {
    CHECK(to_string(Verdict::Pass) == "PASS");
    CHECK(to_string(Verdict::Fail) == "FAIL");
    CHECK(to_string(Verdict::Inconclusive) == "INCONCLUSIVE");
    CHECK(to_string(Verdict::NotApplicable) == "NOT_APPLICABLE");
}

TEST_CASE("predicted_gldim") {
    CHECK(predicted_gldim(AlgebraSpec::zero(4)) == 4);
    CHECK(predicted_gldim(AlgebraSpec::representative(4)) == 6);
    CHECK(predicted_gldim(AlgebraSpec::parse("0,1")) == 1);
}

TEST_CASE("BoundsConfig::check") {
    BoundsConfig cfg;
    CHECK_NOTHROW(cfg.check());
    cfg.max_degree = 0;
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
}

TEST_CASE("sweep is deterministic and structurally sound") {
    const auto specs = sweep_specs(8, 99, std::nullopt);
    CHECK(specs == sweep_specs(8, 99, std::nullopt));
    CHECK_FALSE(specs == sweep_specs(8, 100, std::nullopt));
    for (const auto& s : specs) {
        CHECK(s.n() >= 1);
        CHECK(s.n() <= 4);
    }
    const auto fixed = sweep_specs(5, 1, std::size_t{2});
    for (const auto& s : fixed) CHECK(s.n() == 2);

    const auto result = sweep(specs, small_config());
    REQUIRE(result.reports.size() == specs.size());
    for (const auto& r : result.reports) CHECK(structural_violations(r).empty());
    for (const auto& id : claim_ids()) {
        std::size_t total = 0;
        for (const auto& [name, count] : result.counts.at(id)) total += count;
        CHECK(total == specs.size());
    }
}

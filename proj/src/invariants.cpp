#include "dgpoly/invariants.hpp"

#include "dgpoly/parallel.hpp"
#include "dgpoly/span_basis.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dgpoly {

void BoundsConfig::check() const {
    if (max_degree < 1 || internal_degree_bound < 1 || truncation_degree < 1 || square_zero_degree < 1 ||
        steps < 0) {
        throw std::invalid_argument("all bounds must be >= 1");
    }
}

std::optional<int> Interval::exact() const {
    if (upper && *upper == lower) return lower;
    return std::nullopt;
}

Interval shifted(const Interval& v, int by) {
    Interval out = v;
    out.lower += by;
    if (out.upper) *out.upper += by;
    return out;
}

bool PrimeChainCertificate::valid() const {
    if (chain.empty() || checks.size() != chain.size()) return false;
    bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.dg_stable && c.prime; });
    return all && strict_inclusions && length == static_cast<int>(chain.size()) - 1 && length <= upper_bound;
}

namespace {

std::size_t form_rank(const std::vector<Polynomial>& forms, std::size_t n) {
    SpanBasis span(n);
    MonomialIndex linear(monomials_of_degree(n, 1));
    for (const auto& f : forms) span.insert(f.to_vector(linear));
    return span.dim();
}

// d(I_e) inside I_{e+1} for 1 <= e < truncation, I = (forms).
bool dg_stable(const Differential& diff, const std::vector<Polynomial>& forms, int truncation) {
    const std::size_t n = diff.n();
    for (int e = 1; e < truncation; ++e) {
        MonomialIndex target(monomials_of_degree(n, e + 1));
        SpanBasis ideal(target.size());
        for (const auto& y : forms) {
            for (const auto& mu : monomials_of_degree(n, e)) ideal.insert((y * mu).to_vector(target));
        }
        for (const auto& y : forms) {
            for (const auto& mu : monomials_of_degree(n, e - 1)) {
                Polynomial image = diff.apply(y * mu);
                if (!image.is_zero() && !ideal.contains(image.to_vector(target))) return false;
            }
        }
    }
    return true;
}

}  // namespace

PrimeChainCertificate dg_krull_certificate(const AlgebraSpec& spec, int truncation) {
    if (truncation < 2) throw std::invalid_argument("truncation must be >= 2");
    const std::size_t n = spec.n();
    PrimeChainCertificate cert;
    cert.spec = spec;
    cert.truncation = truncation;
    cert.upper_bound = static_cast<int>(n);

    std::vector<Polynomial> forms;
    const ClassificationResult cls = classify(spec);
    for (std::size_t i = 0; i < n; ++i) {
        forms.push_back(cls.iso ? cls.iso->form(i) : Polynomial::variable(n, i));
    }
    const Differential diff(spec);
    cert.strict_inclusions = true;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Polynomial> gens(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(k));
        // An ideal generated by independent linear forms is generated by part
        // of a variable basis, hence prime.
        bool prime = form_rank(gens, n) == k;
        cert.checks.push_back({dg_stable(diff, gens, truncation), prime});
        if (k > 0 && !prime) cert.strict_inclusions = false;
        cert.chain.push_back(std::move(gens));
    }
    cert.length = static_cast<int>(n);
    return cert;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::NotApplicable: return "NOT_APPLICABLE";
    }
    return "INCONCLUSIVE";
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids{
        "Prop3.1-square-zero",   "Prop4.2-classification", "Prop5.1-generators",      "Prop5.1-freeness",
        "CorImpcor-depth-gldim", "ThmGldim",               "ThmDgkrull",              "LemDepthclk-inequality",
        "RemClsmaller-inequality", "ThmGhrodim"};
    return ids;
}

int predicted_gldim(const AlgebraSpec& spec) {
    const int n = static_cast<int>(spec.n());
    return spec.is_zero() ? n : n * (n - 1) / 2;
}

int resolution_steps(const QuotientRing& r, const BoundsConfig& cfg) {
    int steps = cfg.steps > 0 ? cfg.steps : static_cast<int>(r.nvars()) + 2;
    if (r.min_weight() > 0) steps = std::min(steps, cfg.internal_degree_bound / r.min_weight() - 1);
    return std::max(steps, 1);
}

Interval cone_length_bounds(const DepthInterval& depth, const std::optional<BettiTable>& betti,
                            std::optional<int> em_class) {
    Interval cl;
    cl.lower = static_cast<int>(depth.lower);
    cl.lower_source = "depth lower bound";
    if (betti && betti->terminated) {
        const int pd = static_cast<int>(*betti->projective_dimension());
        cl.upper = pd;
        cl.upper_source = "pd of k over H(A)";
        if (em_class && *em_class < pd) {
            cl.upper = *em_class;
            cl.upper_source = "DG free class of the Eilenberg-Moore resolution";
        }
    } else {
        cl.upper_source = "unbounded: Betti computation did not terminate";
    }
    return cl;
}

std::pair<Interval, Interval> level_and_ghost_bounds(std::size_t krull, const Interval& cl) {
    Interval level;
    level.lower = static_cast<int>(krull) + 1;
    level.lower_source = "Krull dimension of H(A) + 1";
    if (cl.upper) {
        level.upper = *cl.upper + 1;
        level.upper_source = "cone length upper bound + 1";
    } else {
        level.upper_source = "unbounded";
    }
    Interval ghlen = shifted(level, -1);
    ghlen.lower_source = "level lower bound - 1";
    ghlen.upper_source = level.upper ? "level upper bound - 1" : "unbounded";
    return {level, ghlen};
}

namespace {

std::string counted(std::size_t k, const std::string& noun) {
    return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

std::string show(const Interval& v) {
    if (auto e = v.exact()) return std::to_string(*e);
    return "[" + std::to_string(v.lower) + ", " + (v.upper ? std::to_string(*v.upper) + "]" : std::string("inf)"));
}

Interval depth_as_interval(const DepthInterval& d) {
    Interval v;
    v.lower = static_cast<int>(d.lower);
    v.upper = static_cast<int>(d.upper);
    v.lower_source = "regular sequence found";
    v.upper_source = "Krull dimension";
    return v;
}

std::string degree_list(const GradedPresentation& pres) {
    std::ostringstream out;
    for (std::size_t k = 0; k < pres.generators.size(); ++k) out << (k ? "," : "") << pres.generators[k].degree;
    return out.str();
}

std::vector<ClaimVerdict> compute_verdicts(const InvariantReport& r, bool core_ok) {
    std::vector<ClaimVerdict> out;
    const int n = static_cast<int>(r.spec.n());
    const bool zero = r.spec.is_zero();
    const int P = r.predicted_gldim;
    auto row = [&](const std::string& id, std::string statement, std::string predicted) -> ClaimVerdict& {
        out.push_back({id, std::move(statement), std::move(predicted), "", Verdict::Inconclusive, ""});
        return out.back();
    };
    auto inconclusive_all = [&](ClaimVerdict& v) {
        v.computed_value = "unavailable";
        v.witness = r.errors.empty() ? "" : r.errors.front();
    };

    {
        auto& v = row("Prop3.1-square-zero", "d^2 = 0 on every monomial through the checked degree", "0");
        if (r.square_zero.holds) {
            v.computed_value = "0 through degree " + std::to_string(r.square_zero.checked_degree);
            v.verdict = Verdict::Pass;
        } else {
            v.computed_value = "nonzero";
            v.verdict = Verdict::Fail;
            v.witness = "d^2(" + Polynomial::monomial(*r.square_zero.witness).to_string() +
                        ") = " + r.square_zero.witness_value.to_string();
        }
    }
    {
        auto& v = row("Prop4.2-classification", "A(t) is DG isomorphic to A(0,...,0) or A(1,0,...,0)",
                      zero ? "ZERO" : "NONZERO");
        const bool is_zero_tag = r.classification.tag == DifferentialClass::Zero;
        v.computed_value = std::string(is_zero_tag ? "ZERO" : "NONZERO") +
                           (r.classification.verified ? ", verified" : ", unverified");
        v.verdict = (r.classification.verified && is_zero_tag == zero) ? Verdict::Pass : Verdict::Fail;
        if (v.verdict == Verdict::Fail && !r.classification.verification_log.empty()) {
            v.witness = r.classification.verification_log.back();
        }
    }
    const int expected_gens = n * (n - 1) / 2;
    {
        auto& v = row("Prop5.1-generators", "H(A) is generated by n(n-1)/2 classes of degree 2",
                      counted(expected_gens, "generator") + " of degree 2");
        if (zero) {
            v.verdict = Verdict::NotApplicable;
            v.computed_value = "t = 0";
        } else if (!core_ok) {
            inconclusive_all(v);
        } else {
            const auto& pres = r.presentation;
            v.computed_value = counted(pres.generators.size(), "generator") + " of degrees {" +
                               degree_list(pres) + "} through degree " + std::to_string(pres.degree_bound);
            bool ok = static_cast<int>(pres.generators.size()) == expected_gens &&
                      pres.generator_count(2) == pres.generators.size();
            v.verdict = ok ? Verdict::Pass : Verdict::Fail;
            if (!ok) v.witness = "generator degrees {" + degree_list(pres) + "}";
        }
    }
    {
        auto& v = row("Prop5.1-freeness", "H(A) is a polynomial algebra on its generators", "no relations");
        if (zero) {
            v.verdict = Verdict::NotApplicable;
            v.computed_value = "t = 0";
        } else if (!core_ok) {
            inconclusive_all(v);
        } else {
            const auto& pres = r.presentation;
            v.computed_value = counted(pres.relations.size(), "minimal relation") + " through degree " +
                               std::to_string(pres.degree_bound);
            if (pres.relations.empty()) {
                v.verdict = Verdict::Pass;
            } else {
                v.verdict = Verdict::Fail;
                v.witness = pres.relations.front().to_string(pres.symbols(), pres.weights()) + " = 0";
            }
        }
    }
    {
        auto& v = row("CorImpcor-depth-gldim", "depth H(A) = gl.dim H(A) = predicted value", std::to_string(P));
        if (!core_ok) {
            inconclusive_all(v);
        } else {
            const Interval depth = depth_as_interval(r.depth);
            v.computed_value = "depth " + show(depth) + ", gl.dim " + show(r.gldim);
            if (!depth.contains(P)) {
                v.verdict = Verdict::Fail;
                v.witness = "depth " + show(depth) + " excludes " + std::to_string(P);
            } else if (!r.gldim.contains(P)) {
                v.verdict = Verdict::Fail;
                v.witness = "gl.dim " + show(r.gldim) + " excludes " + std::to_string(P);
            } else if (depth.exact() == P && r.gldim.exact() == P) {
                v.verdict = Verdict::Pass;
            }
        }
    }
    {
        auto& v = row("ThmGldim", "cl_A k = gl.dim H(A) = predicted value", std::to_string(P));
        if (!core_ok) {
            inconclusive_all(v);
        } else {
            v.computed_value = "gl.dim " + show(r.gldim) + ", cl " + show(r.cl_k);
            if (!r.gldim.contains(P)) {
                v.verdict = Verdict::Fail;
                v.witness = "gl.dim " + show(r.gldim) + " excludes " + std::to_string(P);
            } else if (!r.cl_k.contains(P)) {
                v.verdict = Verdict::Fail;
                v.witness = "cl " + show(r.cl_k) + " excludes " + std::to_string(P);
            } else if (r.gldim.exact() == P && r.cl_k.exact() == P) {
                v.verdict = Verdict::Pass;
            }
        }
    }
    {
        auto& v = row("ThmDgkrull", "DGdim A = n", std::to_string(n));
        v.computed_value = "chain length " + std::to_string(r.dgdim.length) + ", upper bound " +
                           std::to_string(r.dgdim.upper_bound);
        if (r.dgdim.valid() && r.dgdim.length == n && r.dgdim.upper_bound == n) {
            v.verdict = Verdict::Pass;
        } else {
            v.witness = "chain certificate did not validate";
        }
    }
    {
        auto& v = row("LemDepthclk-inequality", "depth H(A) <= cl_A k", "holds");
        if (!core_ok) {
            inconclusive_all(v);
        } else {
            v.computed_value = "depth " + show(depth_as_interval(r.depth)) + ", cl " + show(r.cl_k);
            if (r.cl_k.exact() && static_cast<int>(r.depth.upper) <= *r.cl_k.exact()) {
                v.verdict = Verdict::Pass;
            } else if (r.cl_k.upper && static_cast<int>(r.depth.lower) > *r.cl_k.upper) {
                v.verdict = Verdict::Fail;
                v.witness = "depth >= " + std::to_string(r.depth.lower) + " > cl upper bound " +
                            std::to_string(*r.cl_k.upper);
            }
        }
    }
    {
        auto& v = row("RemClsmaller-inequality", "cl_A k <= pd of k over H(A)", "holds");
        if (!core_ok || !r.betti) {
            inconclusive_all(v);
        } else if (!r.betti->terminated) {
            v.computed_value = "cl " + show(r.cl_k) + ", pd >= " + std::to_string(r.betti->pd_lower_bound());
            v.witness = "Betti computation did not terminate";
        } else {
            const int pd = static_cast<int>(*r.betti->projective_dimension());
            v.computed_value = "cl " + show(r.cl_k) + ", pd " + std::to_string(pd);
            if (r.cl_k.lower > pd) {
                v.verdict = Verdict::Fail;
                v.witness = "cl lower bound " + std::to_string(r.cl_k.lower) + " > pd " + std::to_string(pd);
            } else if (r.cl_k.upper && *r.cl_k.upper <= pd) {
                v.verdict = Verdict::Pass;
            }
        }
    }
    {
        auto& v = row("ThmGhrodim", "Rouq.dim A = gh.len k + 1 = gl.dim H(A) + 1 = predicted value",
                      std::to_string(r.predicted_rouqdim));
        if (!core_ok) {
            inconclusive_all(v);
        } else {
            v.computed_value = "Rouq.dim " + show(r.rouqdim) + ", gh.len " + show(r.ghlen_k);
            if (!r.rouqdim.contains(r.predicted_rouqdim)) {
                v.verdict = Verdict::Fail;
                v.witness = "Rouq.dim " + show(r.rouqdim) + " excludes " + std::to_string(r.predicted_rouqdim);
            } else if (r.rouqdim.exact() == r.predicted_rouqdim && r.ghlen_k.exact() && r.cl_k.exact() &&
                       *r.ghlen_k.exact() == *r.cl_k.exact()) {
                v.verdict = Verdict::Pass;
            }
        }
    }
    return out;
}

}  // namespace

InvariantReport assemble_report(const AlgebraSpec& spec, const BoundsConfig& cfg) {
    cfg.check();
    if (spec.n() == 0) throw std::invalid_argument("spec must have n >= 1");
    InvariantReport r;
    r.spec = spec;
    r.config = cfg;
    r.predicted_gldim = predicted_gldim(spec);
    r.predicted_rouqdim = r.predicted_gldim + 1;
    r.classification = classify(spec);
    const Differential diff(spec);
    r.square_zero = check_square_zero(diff, cfg.square_zero_degree);
    r.dgdim = dg_krull_certificate(spec, std::max(cfg.max_degree, 2));

    bool core_ok = true;
    std::optional<QuotientRing> ring;
    try {
        const CohomologyReport coh = cohomology_dims(spec, cfg.max_degree);
        r.cohomology = coh.dims;
        r.presentation = extract_presentation(coh, cfg.max_degree);
        ring.emplace(buchberger(r.presentation));
        r.groebner = ring->groebner();
        r.hilbert = hilbert_series(*ring, cfg.max_degree);
        r.hilbert_matches_cohomology = r.hilbert == r.cohomology;
        r.krull = krull_dimension(*ring);
        r.depth = depth_interval(*ring, cfg.max_degree, cfg.seed);
    } catch (const std::exception& e) {
        core_ok = false;
        r.errors.push_back(std::string("cohomology/presentation: ") + e.what());
    }

    if (core_ok) {
        r.steps = resolution_steps(*ring, cfg);
        try {
            r.betti = minimal_free_resolution_of_k(*ring, r.steps, cfg.internal_degree_bound);
        } catch (const std::exception& e) {
            r.errors.push_back(std::string("betti: ") + e.what());
        }
        if (r.betti && r.betti->terminated) {
            try {
                SemifreeResolution em = eilenberg_moore(spec, r.presentation, *r.betti, cfg.truncation_degree);
                if (validate(em).ok(false)) {
                    r.em_class = dg_free_class(em);
                } else {
                    r.errors.push_back("eilenberg-moore: resolution failed validation");
                }
            } catch (const std::exception& e) {
                r.errors.push_back(std::string("eilenberg-moore: ") + e.what());
            }
        }
        if (r.betti) {
            if (r.betti->terminated) {
                const int pd = static_cast<int>(*r.betti->projective_dimension());
                r.gldim = {pd, pd, "minimal resolution terminated", "minimal resolution terminated"};
            } else {
                r.gldim.lower = static_cast<int>(r.betti->pd_lower_bound());
                r.gldim.lower_source = "last nonzero Betti number computed";
                r.gldim.upper_source = "unbounded: resolution not terminated";
            }
        } else {
            r.gldim.lower_source = "no Betti data";
            r.gldim.upper_source = "unbounded: no Betti data";
        }
        r.cl_k = cone_length_bounds(r.depth, r.betti, r.em_class);
        std::tie(r.level_k, r.ghlen_k) = level_and_ghost_bounds(r.krull, r.cl_k);
        r.rouqdim.lower = r.ghlen_k.lower + 1;
        r.rouqdim.lower_source = "gh.len lower bound + 1";
        if (r.betti && r.betti->terminated) {
            r.rouqdim.upper = *r.gldim.upper + 1;
            r.rouqdim.upper_source = "gl.dim H(A) + 1";
        } else {
            r.rouqdim.upper_source = "unbounded";
        }
    }
    r.verdicts = compute_verdicts(r, core_ok);
    return r;
}

std::vector<ClaimVerdict> verify_claims(const InvariantReport& report, const std::vector<std::string>& ids) {
    if (ids.empty()) return report.verdicts;
    std::vector<ClaimVerdict> out;
    for (const auto& id : ids) {
        auto it = std::find_if(report.verdicts.begin(), report.verdicts.end(),
                               [&](const ClaimVerdict& v) { return v.id == id; });
        if (it == report.verdicts.end()) throw std::invalid_argument("unknown claim id: " + id);
        out.push_back(*it);
    }
    return out;
}

std::vector<std::string> structural_violations(const InvariantReport& r) {
    std::vector<std::string> bad;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
    };
    for (const auto& [name, v] : {std::pair<const char*, const Interval*>{"gl.dim", &r.gldim},
                                  {"cl", &r.cl_k},
                                  {"level", &r.level_k},
                                  {"gh.len", &r.ghlen_k},
                                  {"Rouq.dim", &r.rouqdim}}) {
        check(v->consistent(), std::string(name) + " lower > upper");
    }
    check(r.depth.lower <= r.depth.upper, "depth lower > upper");
    check(r.ghlen_k.lower == r.level_k.lower - 1 && r.ghlen_k.upper.has_value() == r.level_k.upper.has_value() &&
              (!r.ghlen_k.upper || *r.ghlen_k.upper == *r.level_k.upper - 1),
          "gh.len != level - 1");
    check(r.rouqdim.lower == r.ghlen_k.lower + 1, "Rouq.dim lower != gh.len lower + 1");
    if (r.gldim.upper) {
        check(r.rouqdim.upper && *r.rouqdim.upper <= *r.gldim.upper + 1, "Rouq.dim upper > gl.dim + 1");
    }
    check(r.cl_k.lower >= static_cast<int>(r.depth.lower), "cl lower < depth lower");
    if (r.betti && r.betti->terminated) {
        check(r.cl_k.upper && *r.cl_k.upper <= static_cast<int>(*r.betti->projective_dimension()), "cl upper > pd");
    }
    check(r.dgdim.length <= static_cast<int>(r.spec.n()), "DG Krull chain longer than n");
    return bad;
}

std::vector<AlgebraSpec> sweep_specs(std::size_t count, std::uint64_t seed, std::optional<std::size_t> n) {
    std::mt19937_64 rng(seed);
    std::vector<AlgebraSpec> specs;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t size = n ? *n : 1 + static_cast<std::size_t>(rng() % 4);
        std::vector<Scalar> t;
        for (std::size_t i = 0; i < size; ++i) t.emplace_back(static_cast<long>(rng() % 7) - 3);
        specs.emplace_back(std::move(t));
    }
    return specs;
}

SweepResult sweep(const std::vector<AlgebraSpec>& specs, const BoundsConfig& cfg) {
    SweepResult out;
    out.reports.resize(specs.size());
    parallel_for(specs.size(), [&](std::size_t k) { out.reports[k] = assemble_report(specs[k], cfg); });
    for (const auto& id : claim_ids()) {
        for (const char* name : {"PASS", "FAIL", "INCONCLUSIVE", "NOT_APPLICABLE"}) out.counts[id][name] = 0;
    }
    for (const auto& r : out.reports) {
        for (const auto& v : r.verdicts) ++out.counts[v.id][to_string(v.verdict)];
    }
    return out;
}

}  // namespace dgpoly

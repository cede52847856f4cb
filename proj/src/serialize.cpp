#include "dgpoly/serialize.hpp"

namespace dgpoly {

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json polynomial_list(const std::vector<Polynomial>& ps, const std::vector<std::string>& names,
                     std::span<const int> weights = {}) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.to_string(names, weights));
    return out;
}

Json size_list(const std::vector<std::size_t>& v) { return Json(v); }

}  // namespace

Json to_json(const AlgebraSpec& spec) {
    Json t = Json::array();
    for (const auto& c : spec.t) t.push_back(to_string(c));
    return {{"n", spec.n()}, {"t", t}};
}

Json to_json(const BoundsConfig& cfg) {
    return {{"max_degree", cfg.max_degree},
            {"internal_degree_bound", cfg.internal_degree_bound},
            {"steps", cfg.steps},
            {"truncation_degree", cfg.truncation_degree},
            {"square_zero_degree", cfg.square_zero_degree},
            {"seed", cfg.seed}};
}

Json to_json(const Interval& v) {
    return {{"lower", v.lower},
            {"upper", optional_int(v.upper)},
            {"exact", optional_int(v.exact())},
            {"lower_source", v.lower_source},
            {"upper_source", v.upper_source}};
}

Json to_json(const ClassificationResult& c, const AlgebraSpec& spec) {
    Json out{{"class", c.tag == DifferentialClass::Zero ? "ZERO" : "NONZERO"},
             {"representative", to_json(c.tag == DifferentialClass::Zero ? AlgebraSpec::zero(spec.n())
                                                                         : AlgebraSpec::representative(spec.n()))},
             {"verified", c.verified}};
    if (c.iso) {
        const auto names = default_variable_names(spec.n());
        Json forms = Json::array();
        Json inverse = Json::array();
        const LinearChange inv = c.iso->inverse();
        for (std::size_t i = 0; i < spec.n(); ++i) {
            forms.push_back(c.iso->form(i).to_string(names));
            inverse.push_back(inv.form(i).to_string(names));
        }
        out["pivot"] = c.pivot + 1;
        out["change_of_variables"] = forms;
        out["inverse"] = inverse;
    } else {
        out["pivot"] = nullptr;
        out["change_of_variables"] = nullptr;
        out["inverse"] = nullptr;
    }
    out["verification_log"] = c.verification_log;
    return out;
}

Json to_json(const CohomologyReport& report) {
    const auto names = default_variable_names(report.spec.n());
    Json reps = Json::array();
    for (const auto& r : report.representatives) reps.push_back(polynomial_list(r, names));
    return {{"max_degree", report.max_degree},
            {"dims", size_list(report.dims)},
            {"ranks", size_list(report.ranks)},
            {"cochain_dims", size_list(report.cochain_dims)},
            {"rank_nullity_consistent", report.rank_nullity_consistent()},
            {"representatives", reps}};
}

Json to_json(const GradedPresentation& pres) {
    const auto names = default_variable_names(pres.spec.n());
    Json gens = Json::array();
    for (const auto& g : pres.generators) {
        gens.push_back({{"symbol", g.symbol}, {"degree", g.degree}, {"representative", g.representative.to_string(names)}});
    }
    const auto weights = pres.weights();
    return {{"degree_bound", pres.degree_bound},
            {"generators", gens},
            {"relations", polynomial_list(pres.relations, pres.symbols(), weights)},
            {"relation_space_dims", size_list(pres.relation_space_dims)}};
}

Json to_json(const BettiTable& betti, const std::vector<std::string>& symbols, std::span<const int> weights) {
    Json maps = Json::array();
    for (std::size_t i = 1; i < betti.maps.size(); ++i) {
        Json step = Json::array();
        for (const auto& image : betti.maps[i]) {
            Json entries = Json::array();
            for (const auto& e : image) {
                entries.push_back({{"target", e.target + 1}, {"coefficient", e.value.to_string(symbols, weights)}});
            }
            step.push_back(entries);
        }
        maps.push_back(step);
    }
    const auto pd = betti.projective_dimension();
    return {{"betti", size_list(betti.betti)},
            {"generator_degrees", betti.generator_degrees},
            {"internal_degree_bound", betti.internal_degree_bound},
            {"terminated", betti.terminated},
            {"projective_dimension", pd ? Json(*pd) : Json(nullptr)},
            {"pd_lower_bound", betti.pd_lower_bound()},
            {"maps", maps}};
}

Json to_json(const SemifreeResolution& f, const ResolutionValidation& v) {
    const auto names = default_variable_names(f.spec.n());
    Json basis = Json::array();
    for (const auto& e : f.basis) {
        Json d = Json::array();
        for (const auto& [j, q] : e.differential) {
            d.push_back({{"target", f.basis[j].symbol}, {"coefficient", q.to_string(names)}});
        }
        basis.push_back(
            {{"symbol", e.symbol}, {"degree", e.degree}, {"shift", e.shift}, {"level", e.level}, {"differential", d}});
    }
    return {{"method", f.method},
            {"truncation_degree", f.truncation_degree},
            {"basis", basis},
            {"basis_ranks", size_list(f.basis_ranks())},
            {"level_sizes", size_list(f.level_sizes())},
            {"dg_free_class", dg_free_class(f)},
            {"validation",
             {{"square_zero", v.square_zero},
              {"semifree", v.semifree},
              {"minimal", v.minimal},
              {"quasi_isomorphism", v.quasi_isomorphism},
              {"cohomology", size_list(v.cohomology)},
              {"detail", v.detail}}}};
}

Json to_json(const PrimeChainCertificate& cert) {
    const auto names = default_variable_names(cert.spec.n());
    Json chain = Json::array();
    for (std::size_t k = 0; k < cert.chain.size(); ++k) {
        chain.push_back({{"generators", polynomial_list(cert.chain[k], names)},
                         {"dg_stable", cert.checks[k].dg_stable},
                         {"prime", cert.checks[k].prime}});
    }
    return {{"chain", chain},
            {"length", cert.length},
            {"upper_bound", cert.upper_bound},
            {"strict_inclusions", cert.strict_inclusions},
            {"truncation", cert.truncation},
            {"valid", cert.valid()}};
}

Json to_json(const ClaimVerdict& v) {
    return {{"id", v.id},
            {"statement", v.statement},
            {"predicted_value", v.predicted_value},
            {"computed_value", v.computed_value},
            {"verdict", to_string(v.verdict)},
            {"witness", v.witness}};
}

Json to_json(const InvariantReport& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
    const auto weights = r.presentation.weights();
    Json betti = r.betti ? to_json(*r.betti, r.presentation.symbols(), weights) : Json(nullptr);
    return {{"spec", to_json(r.spec)},
            {"classification", to_json(r.classification, r.spec)},
            {"square_zero",
             {{"holds", r.square_zero.holds}, {"checked_degree", r.square_zero.checked_degree}}},
            {"cohomology_dims", size_list(r.cohomology)},
            {"presentation", to_json(r.presentation)},
            {"groebner", polynomial_list(r.groebner, r.presentation.symbols(), weights)},
            {"hilbert", size_list(r.hilbert)},
            {"hilbert_matches_cohomology", r.hilbert_matches_cohomology},
            {"krull_dimension", r.krull},
            {"depth",
             {{"lower", r.depth.lower},
              {"upper", r.depth.upper},
              {"sequence", polynomial_list(r.depth.sequence, r.presentation.symbols(), weights)},
              {"seed", r.depth.seed},
              {"search_bound", r.depth.search_bound}}},
            {"resolution_steps", r.steps},
            {"betti", betti},
            {"em_class", optional_int(r.em_class)},
            {"gldim", to_json(r.gldim)},
            {"rgldim_note", "r.Gl.dim = l.Gl.dim since A is commutative"},
            {"dgdim", to_json(r.dgdim)},
            {"cl_k", to_json(r.cl_k)},
            {"level_k", to_json(r.level_k)},
            {"ghlen_k", to_json(r.ghlen_k)},
            {"rouqdim", to_json(r.rouqdim)},
            {"predicted", {{"gldim", r.predicted_gldim}, {"rouqdim", r.predicted_rouqdim}, {"dgdim", r.spec.n()}}},
            {"verdicts", verdicts},
            {"errors", r.errors}};
}

Json document(const std::string& kind, const BoundsConfig& cfg, Json body) {
    Json out{{"schema", "dgpoly." + kind}, {"schema_version", kSchemaVersion}, {"config", to_json(cfg)}};
    for (auto& [k, v] : body.items()) out[k] = std::move(v);
    return out;
}

Json classify_document(const AlgebraSpec& spec, const BoundsConfig& cfg) {
    Json body = to_json(classify(spec), spec);
    body["spec"] = to_json(spec);
    return document("classify", cfg, std::move(body));
}

Json cohomology_document(const AlgebraSpec& spec, const BoundsConfig& cfg) {
    const CohomologyReport report = cohomology_dims(spec, cfg.max_degree);
    const GradedPresentation pres = extract_presentation(report, cfg.max_degree);
    const PresentationCheck chk = check_presentation(report, pres);
    return document("cohomology", cfg,
                    {{"spec", to_json(spec)},
                     {"cohomology", to_json(report)},
                     {"presentation", to_json(pres)},
                     {"presentation_check",
                      {{"relations_are_coboundaries", chk.relations_are_coboundaries},
                       {"surjective", chk.surjective},
                       {"generators_indecomposable", chk.generators_indecomposable},
                       {"detail", chk.detail}}}});
}

Json resolve_document(const AlgebraSpec& spec, const BoundsConfig& cfg, const std::string& method) {
    SemifreeResolution f;
    Json betti = nullptr;
    if (method == "killing") {
        f = killing_cycles_resolution(spec, cfg.truncation_degree);
    } else if (method == "em") {
        const GradedPresentation pres = extract_presentation(spec, cfg.max_degree);
        const QuotientRing ring = buchberger(pres);
        const BettiTable table =
            minimal_free_resolution_of_k(ring, resolution_steps(ring, cfg), cfg.internal_degree_bound);
        betti = to_json(table, pres.symbols(), pres.weights());
        f = eilenberg_moore(spec, pres, table, cfg.truncation_degree);
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    const ResolutionValidation v = validate(f);
    return document("resolve", cfg,
                    {{"spec", to_json(spec)}, {"resolution", to_json(f, v)}, {"betti", betti}});
}

Json invariants_document(const InvariantReport& r) { return document("invariants", r.config, to_json(r)); }

Json verify_document(const InvariantReport& r, const std::vector<ClaimVerdict>& rows) {
    Json claims = Json::array();
    bool any_fail = false;
    for (const auto& v : rows) {
        claims.push_back(to_json(v));
        any_fail = any_fail || v.verdict == Verdict::Fail;
    }
    return document("verify", r.config, {{"spec", to_json(r.spec)}, {"claims", claims}, {"any_fail", any_fail}});
}

Json sweep_document(const SweepResult& s, const BoundsConfig& cfg, std::size_t count) {
    Json specs = Json::array();
    std::size_t violations = 0;
    for (const auto& r : s.reports) {
        Json row{{"spec", to_json(r.spec)}};
        Json verdicts = Json::object();
        for (const auto& v : r.verdicts) verdicts[v.id] = to_string(v.verdict);
        row["verdicts"] = verdicts;
        const auto bad = structural_violations(r);
        violations += bad.size();
        row["structural_violations"] = bad;
        specs.push_back(row);
    }
    Json counts = Json::object();
    for (const auto& id : claim_ids()) counts[id] = s.counts.at(id);
    return document("sweep", cfg,
                    {{"count", count}, {"counts", counts}, {"structural_violations", violations}, {"specs", specs}});
}

}  // namespace dgpoly

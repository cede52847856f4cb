#pragma once

#include "dgpoly/invariants.hpp"

#include <json.hpp>

namespace dgpoly {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const AlgebraSpec& spec);
Json to_json(const BoundsConfig& cfg);
Json to_json(const Interval& v);
Json to_json(const ClassificationResult& c, const AlgebraSpec& spec);
Json to_json(const CohomologyReport& report);
Json to_json(const GradedPresentation& pres);
Json to_json(const BettiTable& betti, const std::vector<std::string>& symbols, std::span<const int> weights);
Json to_json(const SemifreeResolution& f, const ResolutionValidation& v);
Json to_json(const PrimeChainCertificate& cert);
Json to_json(const ClaimVerdict& v);
Json to_json(const InvariantReport& r);

/// Top-level documents: {"schema": "dgpoly.<kind>", "schema_version": 1,
/// "config": ..., ...body}.
Json document(const std::string& kind, const BoundsConfig& cfg, Json body);

Json classify_document(const AlgebraSpec& spec, const BoundsConfig& cfg);
Json cohomology_document(const AlgebraSpec& spec, const BoundsConfig& cfg);
Json resolve_document(const AlgebraSpec& spec, const BoundsConfig& cfg, const std::string& method);
Json invariants_document(const InvariantReport& r);
Json verify_document(const InvariantReport& r, const std::vector<ClaimVerdict>& rows);
Json sweep_document(const SweepResult& s, const BoundsConfig& cfg, std::size_t count);

}  // namespace dgpoly

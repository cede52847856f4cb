#pragma once

#include "dgpoly/semifree.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgpoly {

struct BoundsConfig {
    int max_degree = 8;               // cohomology and presentation bound
    int internal_degree_bound = 12;   // Betti computation
    int steps = 0;                    // 0: number of generators + 2, capped by the bound
    int truncation_degree = 8;        // semifree resolutions
    int square_zero_degree = 8;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument when a bound is < 1.
    void check() const;
    bool operator==(const BoundsConfig&) const = default;
};

/// Closed interval [lower, upper]; upper = nullopt means unbounded.
struct Interval {
    int lower = 0;
    std::optional<int> upper;
    std::string lower_source;
    std::string upper_source;

    std::optional<int> exact() const;
    bool contains(int v) const { return v >= lower && (!upper || v <= *upper); }
    bool consistent() const { return !upper || lower <= *upper; }
};

Interval shifted(const Interval& v, int by);

struct PrimeChainCertificate {
    AlgebraSpec spec;
    /// chain[k] lists linear-form generators of the k-th ideal; chain[0] = (0).
    std::vector<std::vector<Polynomial>> chain;
    struct Check {
        bool dg_stable = false;
        bool prime = false;
    };
    std::vector<Check> checks;
    bool strict_inclusions = false;
    int length = 0;
    int upper_bound = 0;
    int truncation = 0;

    bool valid() const;
};

/// Chain (0) < (y_1) < ... < (y_1..y_n) in classified coordinates; stability
/// under d checked degreewise up to `truncation`.
PrimeChainCertificate dg_krull_certificate(const AlgebraSpec& spec, int truncation = 8);

enum class Verdict { Pass, Fail, Inconclusive, NotApplicable };
std::string to_string(Verdict v);

struct ClaimVerdict {
    std::string id;
    std::string statement;
    std::string predicted_value;
    std::string computed_value;
    Verdict verdict = Verdict::Inconclusive;
    std::string witness;
};

/// Every claim identifier, in report order.
const std::vector<std::string>& claim_ids();

struct InvariantReport {
    AlgebraSpec spec;
    BoundsConfig config;
    ClassificationResult classification;
    SquareZeroResult square_zero;
    std::vector<std::size_t> cohomology;
    GradedPresentation presentation;
    std::vector<Polynomial> groebner;
    std::vector<std::size_t> hilbert;
    bool hilbert_matches_cohomology = false;
    std::size_t krull = 0;
    DepthInterval depth;
    std::optional<BettiTable> betti;
    int steps = 0;
    std::optional<int> em_class;
    PrimeChainCertificate dgdim;

    Interval gldim;    // gl.dim H(A) = pd of k over H(A)
    Interval cl_k;
    Interval level_k;
    Interval ghlen_k;
    Interval rouqdim;
    int predicted_gldim = 0;
    int predicted_rouqdim = 0;

    std::vector<ClaimVerdict> verdicts;
    /// Sub-computations that failed, with reasons.
    std::vector<std::string> errors;
};

/// Value predicted for gl.dim: n when t = 0, n(n-1)/2 otherwise.
int predicted_gldim(const AlgebraSpec& spec);

/// Steps used for the Betti computation under `cfg`.
int resolution_steps(const QuotientRing& r, const BoundsConfig& cfg);

Interval cone_length_bounds(const DepthInterval& depth, const std::optional<BettiTable>& betti,
                            std::optional<int> em_class);
/// (level interval, ghost-length interval).
std::pair<Interval, Interval> level_and_ghost_bounds(std::size_t krull, const Interval& cl);

InvariantReport assemble_report(const AlgebraSpec& spec, const BoundsConfig& cfg);

/// Verdict rows for the selected claims (all when `ids` is empty).
std::vector<ClaimVerdict> verify_claims(const InvariantReport& report, const std::vector<std::string>& ids = {});

/// Structural inequalities every report must satisfy; empty when all hold.
std::vector<std::string> structural_violations(const InvariantReport& report);

/// `count` random specs: n fixed or uniform in 1..4, t_i uniform in -3..3.
std::vector<AlgebraSpec> sweep_specs(std::size_t count, std::uint64_t seed, std::optional<std::size_t> n);

struct SweepResult {
    std::vector<InvariantReport> reports;
    /// claim id -> verdict name -> count
    std::map<std::string, std::map<std::string, std::size_t>> counts;
};

SweepResult sweep(const std::vector<AlgebraSpec>& specs, const BoundsConfig& cfg);

}  // namespace dgpoly

#pragma once

#include "dgpoly/quotient_ring.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace dgpoly {

class BoundTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Entry of a map between graded free modules: coefficient `value` (an
/// element of R in normal form) on generator `target` of the codomain.
struct FreeEntry {
    std::size_t target = 0;
    Polynomial value;
};

/// Minimal graded free resolution of k over a QuotientRing, truncated at an
/// internal degree bound.
struct BettiTable {
    std::vector<std::size_t> betti;                    // beta_0 .. beta_s
    std::vector<std::vector<int>> generator_degrees;   // per step, internal degree of each generator
    /// maps[i][j]: image of generator j of F_i in F_{i-1}; maps[0] is empty.
    std::vector<std::vector<std::vector<FreeEntry>>> maps;
    int internal_degree_bound = 0;
    bool terminated = false;

    std::optional<std::size_t> projective_dimension() const;
    /// Smallest certified lower bound on pd: last step with beta != 0.
    std::size_t pd_lower_bound() const;
};

/// Builds F_0 .. F_steps degreewise; terminated iff some kernel vanishes in
/// every degree <= internal_degree_bound with at least one full generator
/// weight of headroom above the last generators.
///
/// Throws BoundTooSmall when the kernel vanishes below the bound only because
/// the bound leaves no headroom, so neither termination nor the next Betti
/// number can be certified.
BettiTable minimal_free_resolution_of_k(const QuotientRing& r, int steps, int internal_degree_bound);

}  // namespace dgpoly

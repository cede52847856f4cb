#pragma once

#include "dgpoly/free_resolution.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgpoly {

class LiftObstruction : public std::runtime_error {
public:
    LiftObstruction(const std::string& what, int degree) : std::runtime_error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

/// Element of a free A-module: basis index -> coefficient in A.
using ModuleElement = std::map<std::size_t, Polynomial>;

struct SemifreeBasisElement {
    std::string symbol;
    int degree = 0;  // cohomological degree of the basis element
    int shift = 0;   // i in Sigma^i
    int level = 0;   // filtration level
    ModuleElement differential;
};

/// Semifree DG module F = (+) A e_k with d(a e) = d(a) e + (-1)^{|a|} a d(e).
/// Basis elements are listed so that every differential refers only to
/// earlier entries; entry 0 is the augmentation generator e_0 -> 1.
struct SemifreeResolution {
    AlgebraSpec spec;
    std::string method;
    std::vector<SemifreeBasisElement> basis;
    int truncation_degree = 0;

    /// Number of basis elements of each cohomological degree 0..max.
    std::vector<std::size_t> basis_ranks() const;
    /// Number of basis elements on each filtration level.
    std::vector<std::size_t> level_sizes() const;
};

/// Degree-d piece of a free A-module: pairs (basis element, monomial).
class ModulePiece {
public:
    ModulePiece(const std::vector<SemifreeBasisElement>& basis, std::size_t n, int d, int max_level = -1);

    std::size_t size() const { return pairs_.size(); }
    const std::pair<std::size_t, Monomial>& operator[](std::size_t k) const { return pairs_[k]; }
    /// Throws std::out_of_range if the element has support outside the piece.
    SparseVector to_vector(const ModuleElement& m) const;
    ModuleElement from_vector(const SparseVector& v) const;

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, Monomial>> pairs_;
    std::map<std::pair<std::size_t, Monomial>, std::uint32_t> index_;
};

ModuleElement apply_differential(const std::vector<SemifreeBasisElement>& basis, const Differential& d,
                                 const ModuleElement& m);
/// a * m for a homogeneous a in A.
ModuleElement act(const Polynomial& a, const ModuleElement& m);
ModuleElement add(const ModuleElement& a, const ModuleElement& b, const Scalar& factor = 1);

/// Matrix of d : F^d -> F^{d+1}, optionally restricting the source to basis
/// elements on filtration levels <= max_level.
SparseMatrix module_differential_matrix(const std::vector<SemifreeBasisElement>& basis, const Differential& diff,
                                        int d, int max_level = -1);

/// Sigma^shift m, with |Sigma^i m| = |m| - i.
struct Suspended {
    int shift = 0;
    ModuleElement element;
    bool operator==(const Suspended&) const = default;
};

/// a (Sigma^i m) = (-1)^{|a| i} Sigma^i (a m).
Suspended act(const Polynomial& a, const Suspended& s);
/// d(Sigma^i m) = (-1)^i Sigma^i d(m).
Suspended apply_differential(const std::vector<SemifreeBasisElement>& basis, const Differential& d,
                             const Suspended& s);

struct ResolutionValidation {
    bool square_zero = true;
    bool semifree = true;
    bool minimal = true;
    bool quasi_isomorphism = true;
    /// dim H^d(F), d = 0..truncation_degree.
    std::vector<std::size_t> cohomology;
    std::string detail;

    bool ok(bool require_minimal) const {
        return square_zero && semifree && quasi_isomorphism && (minimal || !require_minimal);
    }
};

ResolutionValidation validate(const SemifreeResolution& f);

/// Lifts a terminated minimal resolution of k over H(A) to a semifree
/// resolution of k over A. Generator j of F_i in internal degree q becomes
/// a basis element of degree q - i on level i. Correction terms are sought on
/// levels <= max(i - 2, 0); LiftObstruction when none exists.
SemifreeResolution eilenberg_moore(const AlgebraSpec& spec, const GradedPresentation& pres, const BettiTable& betti,
                                   int truncation_degree);

/// Adjoins basis elements degree by degree until H^d(F) = 0 for
/// 1 <= d <= truncation_degree.
SemifreeResolution killing_cycles_resolution(const AlgebraSpec& spec, int truncation_degree);

/// Longest chain b_0 <- b_1 <- ... where b_{k} appears in d(b_{k+1}).
int dg_free_class(const SemifreeResolution& f);

}  // namespace dgpoly

#pragma once

#include "dgpoly/differential.hpp"
#include "dgpoly/span_basis.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dgpoly {

class NotACocycle : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DegreeOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Degreewise cohomology of A(t) up to a bound.
///
/// Representatives in degree d form the reduced echelon basis of a
/// complement of the coboundaries B^d inside the cocycles Z^d, computed in
/// the monomial basis monomials_of_degree(n, d). Their pivots avoid the pivots
/// of B^d, which makes class coordinates a pure read-off after reducing
/// modulo B^d.
struct CohomologyReport {
    AlgebraSpec spec;
    int max_degree = 0;
    std::vector<std::size_t> dims;       // dim H^0 .. dim H^max
    std::vector<std::size_t> ranks;      // rank of d : A^k -> A^{k+1}, k = 0..max
    std::vector<std::size_t> cochain_dims;  // dim A^k
    std::vector<std::vector<Polynomial>> representatives;

    // Echelon data for class computations.
    std::vector<MonomialIndex> bases;
    std::vector<SpanBasis> coboundaries;
    std::vector<std::vector<std::uint32_t>> rep_pivots;

    /// dim H^d == dim A^d - rank d^{d-1} - rank d^d in every degree.
    bool rank_nullity_consistent() const;
};

CohomologyReport cohomology_dims(const AlgebraSpec& spec, int max_degree);

/// Coordinates of [p] against the degree-`degree` representatives. Zero iff p
/// is a coboundary.
std::vector<Scalar> class_of(const CohomologyReport& report, const Polynomial& p, int degree);

/// Representative polynomial for given class coordinates.
Polynomial class_representative(const CohomologyReport& report, int degree, const std::vector<Scalar>& coords);

struct CohomologyClass {
    int degree = 0;
    std::vector<Scalar> coords;
    bool operator==(const CohomologyClass&) const = default;
};

/// Product of classes via representatives. Throws DegreeOutOfRange when the
/// total degree exceeds the report's bound.
CohomologyClass cup_product(const CohomologyReport& report, const std::vector<CohomologyClass>& classes);

struct PresentationGenerator {
    std::string symbol;
    int degree = 0;
    Polynomial representative;
};

/// Generators and relations presenting H(A) up to degree_bound. Relations are
/// polynomials in the generator symbols (variable i = generators[i]); the
/// grading is weighted by generator degrees.
struct GradedPresentation {
    AlgebraSpec spec;
    int degree_bound = 0;
    std::vector<PresentationGenerator> generators;
    std::vector<Polynomial> relations;
    /// Dimension of the kernel of the evaluation map from the free
    /// commutative algebra on the generators onto H^d, d = 0..degree_bound.
    std::vector<std::size_t> relation_space_dims;

    std::vector<int> weights() const;
    std::vector<std::string> symbols() const;
    std::size_t generator_count(int degree) const;
};

GradedPresentation extract_presentation(const CohomologyReport& report, int degree_bound);
GradedPresentation extract_presentation(const AlgebraSpec& spec, int degree_bound);

/// Evaluates a polynomial in the generator symbols on the representatives.
Polynomial evaluate_on_representatives(const GradedPresentation& pres, const Polynomial& q);

struct PresentationCheck {
    bool relations_are_coboundaries = true;
    bool surjective = true;
    bool generators_indecomposable = true;
    std::string detail;
};

/// Re-derives the presentation's certificate claims from the report.
PresentationCheck check_presentation(const CohomologyReport& report, const GradedPresentation& pres);

}  // namespace dgpoly

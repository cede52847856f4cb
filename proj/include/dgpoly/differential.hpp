#pragma once

#include "dgpoly/linear_change.hpp"
#include "dgpoly/polynomial.hpp"
#include "dgpoly/sparse_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgpoly {

/// Parameters (t_1, ..., t_n) of the DG polynomial algebra A(t) with
/// |x_i| = 1 and d(x_i) = sum_j t_j x_i x_j.
struct AlgebraSpec {
    std::vector<Scalar> t;

    AlgebraSpec() = default;
    explicit AlgebraSpec(std::vector<Scalar> params);
    /// The representative A(1, 0, ..., 0).
    static AlgebraSpec representative(std::size_t n);
    static AlgebraSpec zero(std::size_t n);
    /// Parses "a,b,c" with rational entries.
    static AlgebraSpec parse(std::string_view csv);

    std::size_t n() const { return t.size(); }
    bool is_zero() const;
    bool is_representative() const;
    std::string to_string() const;

    bool operator==(const AlgebraSpec&) const = default;
};

/// Differential of A(t), extended to all of A by the graded Leibniz rule
/// d(ab) = d(a) b + (-1)^{|a|} a d(b).
class Differential {
public:
    explicit Differential(AlgebraSpec spec);

    const AlgebraSpec& spec() const { return spec_; }
    std::size_t n() const { return spec_.n(); }
    /// d(x_i), homogeneous of degree 2.
    const Polynomial& generator_image(std::size_t i) const { return images_[i]; }
    const std::vector<Polynomial>& generator_images() const { return images_; }
    /// The linear form y = sum_j t_j x_j.
    Polynomial weight_form() const;

    Polynomial apply(const Polynomial& p) const;
    /// Leibniz expansion of a single monomial with a caller-owned memo.
    Polynomial apply(const Monomial& m, std::map<Monomial, Polynomial>& memo) const;

private:
    AlgebraSpec spec_;
    std::vector<Polynomial> images_;
};

inline Differential build_differential(const AlgebraSpec& spec) { return Differential(spec); }

struct SquareZeroResult {
    bool holds = true;
    std::optional<Monomial> witness;
    Polynomial witness_value;
    int checked_degree = 0;
};

/// Checks d(d(m)) = 0 for every monomial of degree 0..max_degree.
SquareZeroResult check_square_zero(const Differential& d, int max_degree = 8);

/// Matrix of d : A^deg -> A^{deg+1} in the monomial bases of
/// monomials_of_degree(n, deg) (columns) and (n, deg+1) (rows).
SparseMatrix differential_matrix(const Differential& d, int deg);

enum class DifferentialClass { Zero, Nonzero };

struct ClassificationResult {
    DifferentialClass tag = DifferentialClass::Zero;
    /// Rows are the forms y_1 = sum_j t_j x_j, then x_j for j != pivot.
    /// x_i -> y_i is a DG isomorphism A(1,0,...,0) -> A(t); its inverse maps
    /// A(t) onto A(1,0,...,0).
    std::optional<LinearChange> iso;
    std::size_t pivot = 0;
    std::vector<std::string> verification_log;
    bool verified = false;
};

ClassificationResult classify(const AlgebraSpec& spec);

}  // namespace dgpoly

#pragma once

#include "dgpoly/polynomial.hpp"
#include "dgpoly/sparse_matrix.hpp"

#include <vector>

namespace dgpoly {

/// Invertible linear change of variables. Row i holds the coefficients of
/// the linear form that replaces x_i under substitute().
class LinearChange {
public:
    /// Throws std::invalid_argument if the matrix is not square or singular.
    explicit LinearChange(SparseMatrix forms);
    static LinearChange identity(std::size_t n);
    static LinearChange from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t size() const { return forms_.rows(); }
    const SparseMatrix& matrix() const { return forms_; }
    /// The image of x_i as a degree-1 polynomial.
    Polynomial form(std::size_t i) const;
    LinearChange inverse() const;
    /// First apply *this, then other: x_i -> form_i(other's forms).
    LinearChange then(const LinearChange& other) const;

    bool operator==(const LinearChange&) const = default;

private:
    SparseMatrix forms_;
};

/// Ring homomorphism x_i -> c.form(i).
Polynomial substitute(const Polynomial& p, const LinearChange& c);

}  // namespace dgpoly

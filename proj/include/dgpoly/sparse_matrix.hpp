#pragma once

#include "dgpoly/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dgpoly {

/// Sparse vector: strictly increasing indices, no stored zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
};

using DenseVector = std::vector<Scalar>;

SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, std::size_t size);

/// a + factor * b
SparseVector axpy(const SparseVector& a, const Scalar& factor, const SparseVector& b);

/// Exact sparse matrix over the rationals, stored by columns.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    /// Throws std::invalid_argument on duplicate keys or out-of-range indices.
    /// Zero values are dropped.
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Triplet> entries);
    /// Columns must already be in canonical SparseVector form.
    static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);
    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    const SparseVector& column(std::size_t c) const { return columns_[c]; }
    std::vector<Triplet> entries() const;
    Scalar at(std::size_t r, std::size_t c) const;

    SparseVector multiply(const SparseVector& x) const;
    DenseVector multiply(const DenseVector& x) const;

    bool operator==(const SparseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

/// Exact rank over Q. Empty matrices have rank 0.
std::size_t rank(const SparseMatrix& m);

/// Null-space basis, size cols - rank. Each vector is scaled so its first
/// nonzero entry is 1.
std::vector<DenseVector> kernel_basis(const SparseMatrix& m);
std::vector<SparseVector> sparse_kernel_basis(const SparseMatrix& m);

/// Coordinates c with m*c = v when v lies in the column space.
std::optional<DenseVector> membership(const DenseVector& v, const SparseMatrix& m);
std::optional<SparseVector> membership(const SparseVector& v, const SparseMatrix& m);

/// Reduced row echelon form computed once and reused for several
/// right-hand sides. Pivots follow a Markowitz rule: shortest active row,
/// then the column in it with the fewest active entries.
class Elimination {
public:
    explicit Elimination(const SparseMatrix& m);

    std::size_t rank() const { return pivot_rows_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::uint32_t>& pivot_columns() const { return pivot_cols_; }

    std::vector<SparseVector> kernel() const;
    std::optional<SparseVector> solve(const SparseVector& rhs) const;

private:
    struct RowOp {
        std::uint32_t target;
        std::uint32_t source;  // == target for a scaling op
        Scalar factor;         // row[target] -= factor * row[source], or row[target] *= factor
    };

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> pivot_rows_;
    std::vector<std::uint32_t> pivot_cols_;
    std::vector<std::uint32_t> pivot_origin_;
    std::vector<RowOp> ops_;
};

}  // namespace dgpoly

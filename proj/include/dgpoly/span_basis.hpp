#pragma once

#include "dgpoly/sparse_matrix.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dgpoly {

/// Incrementally maintained reduced echelon basis of a subspace of Q^N.
///
/// The pivot of a vector is its first nonzero index. Every basis vector has
/// pivot coefficient 1 and zeros at all other pivots, so the basis of a given
/// subspace is unique and independent of insertion order.
class SpanBasis {
public:
    SpanBasis() = default;
    explicit SpanBasis(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }

    /// Adds v to the span; returns true iff the dimension grew.
    bool insert(const SparseVector& v);

    /// Remainder of v after clearing every pivot position.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    /// Coordinates against the basis vectors (ordered by pivot), when v is in
    /// the span.
    std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;

    /// Basis vectors ordered by increasing pivot.
    std::vector<SparseVector> vectors() const;
    std::vector<std::uint32_t> pivots() const;

private:
    std::size_t ambient_ = 0;
    std::map<std::uint32_t, SparseVector> basis_;
};

}  // namespace dgpoly

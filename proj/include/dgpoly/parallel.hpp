#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin that is kept as
// the reference implementation for tests and the benchmark.

#include "dgpoly/polynomial.hpp"
#include "dgpoly/sparse_matrix.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace dgpoly {

class Differential;

std::vector<std::size_t> batch_rank(std::span<const SparseMatrix> matrices);
std::vector<std::size_t> batch_rank_serial(std::span<const SparseMatrix> matrices);

/// Smallest index i with d(d(monos[i])) != 0.
std::optional<std::size_t> first_square_zero_failure(const Differential& d,
                                                     std::span<const Monomial> monos);
std::optional<std::size_t> first_square_zero_failure_serial(const Differential& d,
                                                            std::span<const Monomial> monos);

/// Runs job(i) for i in [0, count) on the OpenMP pool. Jobs must write only
/// to their own slot of any shared output. Exceptions are rethrown on the
/// calling thread (the one from the smallest index wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job);
void serial_for(std::size_t count, const std::function<void(std::size_t)>& job);

}  // namespace dgpoly

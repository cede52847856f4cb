#include "dgpoly/parallel.hpp"

#include "dgpoly/differential.hpp"

#include <exception>

namespace dgpoly {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job) {
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        try {
            job(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

void serial_for(std::size_t count, const std::function<void(std::size_t)>& job) {
    for (std::size_t i = 0; i < count; ++i) job(i);
}

std::vector<std::size_t> batch_rank(std::span<const SparseMatrix> matrices) {
    std::vector<std::size_t> out(matrices.size());
    parallel_for(matrices.size(), [&](std::size_t i) { out[i] = rank(matrices[i]); });
    return out;
}

std::vector<std::size_t> batch_rank_serial(std::span<const SparseMatrix> matrices) {
    std::vector<std::size_t> out;
    out.reserve(matrices.size());
    for (const auto& m : matrices) out.push_back(rank(m));
    return out;
}

namespace {

bool squares_to_zero(const Differential& d, const Monomial& m, std::map<Monomial, Polynomial>& memo) {
    Polynomial once = d.apply(m, memo);
    Polynomial twice(d.n());
    for (const auto& [mm, c] : once.terms()) twice += d.apply(mm, memo) * c;
    return twice.is_zero();
}

}  // namespace

std::optional<std::size_t> first_square_zero_failure(const Differential& d,
                                                     std::span<const Monomial> monos) {
    const auto n = static_cast<long long>(monos.size());
    std::vector<char> bad(monos.size(), 0);
#pragma omp parallel
    {
        std::map<Monomial, Polynomial> memo;
#pragma omp for schedule(static)
        for (long long i = 0; i < n; ++i) {
            bad[static_cast<std::size_t>(i)] = squares_to_zero(d, monos[static_cast<std::size_t>(i)], memo) ? 0 : 1;
        }
    }
    for (std::size_t i = 0; i < bad.size(); ++i) {
        if (bad[i]) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> first_square_zero_failure_serial(const Differential& d,
                                                            std::span<const Monomial> monos) {
    std::map<Monomial, Polynomial> memo;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (!squares_to_zero(d, monos[i], memo)) return i;
    }
    return std::nullopt;
}

}  // namespace dgpoly

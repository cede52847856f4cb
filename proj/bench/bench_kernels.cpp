// Serial reference kernels against their OpenMP counterparts.

#include "dgpoly/parallel.hpp"
#include "dgpoly/differential.hpp"

#include <benchmark/benchmark.h>

using namespace dgpoly;

namespace {

std::vector<SparseMatrix> differential_matrices(std::size_t n, int max_degree) {
    const Differential d(AlgebraSpec::representative(n));
    std::vector<SparseMatrix> mats;
    for (int deg = 0; deg <= max_degree; ++deg) mats.push_back(differential_matrix(d, deg));
    return mats;
}

std::vector<Monomial> all_monomials(std::size_t n, int max_degree) {
    std::vector<Monomial> out;
    for (int deg = 0; deg <= max_degree; ++deg) {
        for (auto& m : monomials_of_degree(n, deg)) out.push_back(std::move(m));
    }
    return out;
}

void BM_BatchRankSerial(benchmark::State& state) {
    auto mats = differential_matrices(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(batch_rank_serial(mats));
}

void BM_BatchRankParallel(benchmark::State& state) {
    auto mats = differential_matrices(static_cast<std::size_t>(state.range(0)), 8);
    for (auto _ : state) benchmark::DoNotOptimize(batch_rank(mats));
}

void BM_SquareZeroSerial(benchmark::State& state) {
    const Differential d(AlgebraSpec({1, 2, -3, 1, 2}));
    auto monos = all_monomials(5, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(first_square_zero_failure_serial(d, monos));
}

void BM_SquareZeroParallel(benchmark::State& state) {
    const Differential d(AlgebraSpec({1, 2, -3, 1, 2}));
    auto monos = all_monomials(5, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(first_square_zero_failure(d, monos));
}

}  // namespace

BENCHMARK(BM_BatchRankSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchRankParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareZeroSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareZeroParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

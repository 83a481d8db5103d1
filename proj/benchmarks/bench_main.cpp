#include "fusioncheck/criteria.hpp"
#include "fusioncheck/fixtures.hpp"
#include "fusioncheck/kron.hpp"
#include "fusioncheck/obstructions.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace fusioncheck;

void BM_ValidateK7(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fixture_k7());
}
BENCHMARK(BM_ValidateK7);

void BM_LocalizedK7(benchmark::State& state) {
    FusionRing ring = fixture_k7();
    LocalData L = local_data(ring, {6, 7});
    for (auto _ : state) benchmark::DoNotOptimize(localized_matrix(L, 3));
}
BENCHMARK(BM_LocalizedK7);

void BM_PrimaryT3Dense(benchmark::State& state) {
    FusionRing ring = fixture_k7();
    for (auto _ : state) benchmark::DoNotOptimize(primary_matrix(ring, 3));
}
BENCHMARK(BM_PrimaryT3Dense);

void BM_DenseMinEig216(benchmark::State& state) {
    SymMatrixR t = primary_matrix(fixture_rank6_nc(), 3);
    for (auto _ : state) benchmark::DoNotOptimize(min_eig_bounds(t));
}
BENCHMARK(BM_DenseMinEig216);

void BM_ReducedLogN(benchmark::State& state) {
    LocalData L = local_data(fixture_k7(), {6, 7});
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_matrix(L, n));
}
BENCHMARK(BM_ReducedLogN)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void BM_KronApply343(benchmark::State& state) {
    KronOperator op = primary_operator(fixture_k7(), 3);
    std::vector<double> x(op.dim(), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(kron_apply(op, x));
}
BENCHMARK(BM_KronApply343);

void BM_KronMinEig343(benchmark::State& state) {
    KronOperator op = primary_operator(fixture_k7(), 3);
    for (auto _ : state) benchmark::DoNotOptimize(kron_min_eig(op));
}
BENCHMARK(BM_KronMinEig343);

void BM_SearchK7(benchmark::State& state) {
    FusionRing ring = fixture_k7();
    for (auto _ : state)
        benchmark::DoNotOptimize(search_violation(ring, SearchBudget{2, 3, true}));
}
BENCHMARK(BM_SearchK7);

void BM_CornerDet(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(k7_corner_det(5, 5, 5, 6, 7, 7));
}
BENCHMARK(BM_CornerDet);

}  // namespace

BENCHMARK_MAIN();

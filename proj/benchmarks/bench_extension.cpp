#include "cochain/blending.hpp"
#include "cochain/extension.hpp"
#include "cochain/oracle.hpp"
#include "cochain/poincare.hpp"

#include <benchmark/benchmark.h>

using namespace cochain;

namespace {

// Args: n, r, k, family (0 full, 1 trimmed).
Family family_arg(const benchmark::State& state) { return state.range(3) ? Family::trimmed : Family::full; }

void BM_BoundaryBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1)), k = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_basis(n, r, k, family_arg(state)));
}

void BM_ExtendBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1)), k = static_cast<int>(state.range(2));
  const auto bases = boundary_basis(n, r, k, family_arg(state));
  for (auto _ : state)
    for (const auto& b : bases) benchmark::DoNotOptimize(extend(b));
  state.counters["elements"] = static_cast<double>(bases.size());
}

void BM_ProductPullback(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1)), k = static_cast<int>(state.range(2));
  const auto bases = basis_full(n, r, k);
  const IndexSet I = IndexSet::full(n);
  const IndexSet J = IndexSet::from_mask(n, (1u << (k + 1)) - 1);
  for (auto _ : state)
    for (const auto& u : bases) benchmark::DoNotOptimize(product_pullback(I, J, FormData(u)));
}

void BM_OracleEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1)), k = static_cast<int>(state.range(2));
  const auto bases = boundary_basis(n, r, k, family_arg(state));
  const IndexSet V = IndexSet::full(n);
  const RationalPoint x = RationalPoint::barycenter(V);
  std::vector<TangentVector> vs;
  for (int i = 1; i <= k; ++i) vs.push_back(TangentVector::edge(V, 0, i));
  for (auto _ : state)
    for (const auto& b : bases) benchmark::DoNotOptimize(extend_eval_oracle(b, x, vs));
}

void BM_ComplexHomotopy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1));
  const std::vector<Family> middle(static_cast<std::size_t>(n - 1), Family::trimmed);
  const RationalPoint a = RationalPoint::barycenter(IndexSet::full(n));
  for (auto _ : state) benchmark::DoNotOptimize(verify_complex(n, r, middle, a));
}

}  // namespace

BENCHMARK(BM_BoundaryBasis)->Args({2, 3, 1, 0})->Args({3, 2, 1, 1})->Args({3, 2, 2, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtendBasis)
    ->Args({2, 3, 0, 0})
    ->Args({2, 3, 1, 1})
    ->Args({3, 1, 1, 1})
    ->Args({3, 2, 1, 0})
    ->Args({3, 2, 2, 1})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductPullback)->Args({2, 3, 1, 0})->Args({3, 2, 2, 0})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OracleEval)->Args({2, 2, 1, 0})->Args({3, 2, 2, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComplexHomotopy)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

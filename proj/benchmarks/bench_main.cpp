#include <benchmark/benchmark.h>

#include "triaco/triaco.hpp"

using namespace triaco;

namespace {

Trialgebra dual_numbers() {
  Trialgebra t = Trialgebra::abelian(2);
  for (Op op : kAllOps) {
    Tensor3& p = t.product(op);
    p(0, 0, 0) = 1;
    p(0, 1, 1) = 1;
    p(1, 0, 1) = 1;
  }
  return t;
}

void TreeEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::vector<PlanarTree> trees;
    for (const auto& t : enumerate_trees(n)) trees.push_back(t);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(TreeEnumeration)->DenseRange(3, 6);

void CoboundaryRank(benchmark::State& state) {
  const Trialgebra d = dual_numbers();
  const TriBimodule ad = adjoint_module(d);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_rank(d, ad, n));
}
BENCHMARK(CoboundaryRank)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void CocycleSpace(benchmark::State& state) {
  const Trialgebra d = dual_numbers();
  const TriBimodule v = trivial_module(d, 2, Matrix::identity(2), Matrix::identity(2));
  for (auto _ : state) benchmark::DoNotOptimize(second_cohomology(d, v));
}
BENCHMARK(CocycleSpace);

void SolveDerivations(benchmark::State& state) {
  const Trialgebra d = dual_numbers();
  for (auto _ : state) benchmark::DoNotOptimize(solve_derivations(d));
}
BENCHMARK(SolveDerivations);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "toricfrob/catalog.hpp"
#include "toricfrob/classes.hpp"
#include "toricfrob/exactlin.hpp"
#include "toricfrob/frobenius.hpp"
#include "toricfrob/polyhedra.hpp"

using namespace toricfrob;

namespace {

const std::vector<std::string> kFans{"projective(3)", "delpezzo(3)", "fatal_example",
                                     "product(1,1,1)", "blowup(projective(3),[1,1,0])"};

IntMatrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_FSupp(benchmark::State& state) {
  const Fan f = catalog(kFans[state.range(0)]);
  const ClassGroup cg(f);
  for (auto _ : state) benchmark::DoNotOptimize(fsupp(f, cg));
  state.SetLabel(kFans[state.range(0)]);
}
BENCHMARK(BM_FSupp)->DenseRange(0, static_cast<int>(kFans.size()) - 1);

void BM_TraceKernel(benchmark::State& state) {
  const Fan f = catalog("delpezzo(3)");
  const ClassGroup cg(f);
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_kernel_decomposition(f, cg, 2, e));
  state.SetLabel("q=" + std::to_string(1u << e));
}
BENCHMARK(BM_TraceKernel)->DenseRange(1, 6);

void BM_TraceKernelThreefold(benchmark::State& state) {
  const Fan f = catalog("fatal_example");
  const ClassGroup cg(f);
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_kernel_decomposition(f, cg, 2, e));
  state.SetLabel("q=" + std::to_string(1u << e));
}
BENCHMARK(BM_TraceKernelThreefold)->DenseRange(1, 4);

void BM_EffectiveConeRays(benchmark::State& state) {
  const Fan f = catalog(kFans[state.range(0)]);
  const ClassGroup cg(f);
  for (auto _ : state) benchmark::DoNotOptimize(extreme_rays(eff_cone(cg)));
  state.SetLabel(kFans[state.range(0)]);
}
BENCHMARK(BM_EffectiveConeRays)->DenseRange(0, static_cast<int>(kFans.size()) - 1);

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_Simplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5);
  LinearProgram lp = LinearProgram::nonnegative(n);
  RatMatrix A(n / 2, n);
  RatVector b(n / 2);
  for (std::size_t i = 0; i < n / 2; ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = entry(rng);
    A(i, i) = 10;
    b[i] = 1 + static_cast<int>(i);
  }
  lp.equality_matrix = A;
  lp.equality_rhs = b;
  for (std::size_t j = 0; j < n; ++j) {
    lp.objective[j] = entry(rng);
    lp.upper[j] = Rational(3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(lp_optimize(lp, Sense::Maximize));
}
BENCHMARK(BM_Simplex)->RangeMultiplier(2)->Range(8, 32);

}  // namespace

BENCHMARK_MAIN();

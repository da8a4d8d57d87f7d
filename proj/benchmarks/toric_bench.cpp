#include <random>

#include <benchmark/benchmark.h>

#include "toric/quotient.hpp"
#include "toric/sl2.hpp"
#include "toric/variety.hpp"

namespace {

std::vector<toric::IntegerMatrix> random_matrices(std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dist(-20, 20);
  std::vector<toric::IntegerMatrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    toric::IntegerMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = dist(rng);
    out.push_back(std::move(m));
  }
  return out;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto ms = random_matrices(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(toric::smith_normal_form(ms[i++ % ms.size()]));
}
BENCHMARK(BM_SmithNormalForm);

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto ms = random_matrices(64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(toric::hermite_normal_form(ms[i++ % ms.size()]));
}
BENCHMARK(BM_HermiteNormalForm);

void BM_QuotientType(benchmark::State& state) {
  const toric::SimplicialCone cone = toric::standard_cone(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toric::quotient_type(cone));
}
BENCHMARK(BM_QuotientType)->Arg(3)->Arg(50)->Arg(1000);

void BM_IsTerminal(benchmark::State& state) {
  const toric::CyclicQuotientType t(state.range(0), {1, state.range(0) - 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(toric::is_terminal(t));
}
BENCHMARK(BM_IsTerminal)->Arg(7)->Arg(50)->Arg(1009);

void BM_AnalyzeWps(benchmark::State& state) {
  const toric::Fan fan = toric::build_wps_fan({1, 1, 2, 3});
  for (auto _ : state) benchmark::DoNotOptimize(toric::analyze(fan));
}
BENCHMARK(BM_AnalyzeWps);

void BM_LinkingEquations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toric::solve_linking_equations(state.range(0)));
}
BENCHMARK(BM_LinkingEquations)->Arg(1000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_VerifyInvariantIdeal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toric::sl2::verify_invariant_ideal());
}
BENCHMARK(BM_VerifyInvariantIdeal)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "modgb/modgb.hpp"

using namespace modgb;

namespace {

// J = (x1^2, ..., x_{n-r}^2) in n = 5 variables, r from the argument.
void BM_PurePower(benchmark::State& state) {
  const std::size_t n = 5;
  const auto r = static_cast<std::size_t>(state.range(0));
  const std::vector<Degree> d(n - r, 2);
  const auto spec = make_spec(n, {0, 1}, Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(pure_power_decomposition(d, spec, 2));
}
BENCHMARK(BM_PurePower)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_BoundReport(benchmark::State& state) {
  BoundInputs in;
  in.n = static_cast<std::size_t>(state.range(0));
  in.m = 2;
  in.r = 1;
  in.generator_degrees = std::vector<Degree>(in.n, 3);
  in.basis_degrees = {0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(bound_report(in, std::nullopt));
}
BENCHMARK(BM_BoundReport)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

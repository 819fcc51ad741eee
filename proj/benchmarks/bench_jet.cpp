// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "fedosov/jet.hpp"

namespace {

void BM_JetPolynomial(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::vector<double> x0(dim, 0.3);
  for (auto _ : state) {
    const auto x = fedosov::seed_coordinates(x0);
    fedosov::Jet2 acc(0.0);
    for (std::size_t i = 0; i < dim; ++i) acc += x[i] * x[(i + 1) % dim] + fedosov::pow(x[i] * x[i] + 1.0, -1.5);
    benchmark::DoNotOptimize(acc.hess().data());
  }
}
BENCHMARK(BM_JetPolynomial)->Arg(2)->Arg(6)->Arg(12);

}  // namespace

// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "fedosov/geometry.hpp"
#include "fedosov/monopole.hpp"
#include "fedosov/random_fields.hpp"

namespace {

using namespace fedosov;

void BM_CurvatureRandomForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto dim = static_cast<std::size_t>(state.range(0));
  PolynomialTwoForm form(dim, rng);
  const auto field = form.field();
  const PhasePoint x = random_point(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(curvature(field, x).lowered.max_abs());
}
BENCHMARK(BM_CurvatureRandomForm)->Arg(2)->Arg(4)->Arg(6);

void BM_CurvatureMonopole(benchmark::State& state) {
  const monopole::MonopoleParams prm;
  const TwoFormField fields[] = {monopole::form4_field(prm), monopole::form6_field(prm), monopole::form7_field(prm)};
  const auto& field = fields[state.range(0)];
  const PhasePoint x{0.3, 0.8, -0.5, 0.7, -0.4, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(curvature(field, x).mixed.max_abs());
  state.SetLabel(field.name());
}
BENCHMARK(BM_CurvatureMonopole)->DenseRange(0, 2);

void BM_CommutatorCheck(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto field = monopole::form6_field(monopole::MonopoleParams{});
  const auto a = random_quadratic_vector_field(6, rng);
  const PhasePoint x{0.3, 0.8, -0.5, 0.7, -0.4, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(commutator_check(field, a, x).max_abs());
}
BENCHMARK(BM_CommutatorCheck);

}  // namespace

// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "fedosov/constrained.hpp"
#include "fedosov/dynamics.hpp"
#include "fedosov/monopole.hpp"

namespace {

using namespace fedosov;

void BM_VectorFieldForm7(benchmark::State& state) {
  const auto field = monopole::form7_field(monopole::MonopoleParams{});
  const auto h = free_particle_hamiltonian(3);
  const PhasePoint x{1, 0, 0, 0, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(vector_field(field, h, x).data());
}
BENCHMARK(BM_VectorFieldForm7);

void BM_IntegrateMonopole(benchmark::State& state) {
  const auto field = monopole::form7_field(monopole::MonopoleParams{});
  const auto h = free_particle_hamiltonian(3);
  IntegratorConfig c;
  c.method = state.range(0) == 0 ? Method::Rk4 : Method::Rk45;
  c.step = state.range(0) == 0 ? 1e-3 : 1e-2;
  c.t_end = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(integrate(field, h, PhasePoint{1, 0, 0, 0, 1, 0}, c).size());
  state.SetLabel(to_string(c.method));
}
BENCHMARK(BM_IntegrateMonopole)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IntegrateConstrained(benchmark::State& state) {
  const constrained::ConstrainedSystem sys{constrained::Variant::A, {}};
  IntegratorConfig c;
  c.t_end = 1.0;
  const Vector x0 = constrained::on_surface_state({1, 0, 0}, {0, 1, 0});
  for (auto _ : state)
    benchmark::DoNotOptimize(constrained::integrate_constrained(sys, x0, c).physical.size());
}
BENCHMARK(BM_IntegrateConstrained)->Unit(benchmark::kMillisecond);

}  // namespace

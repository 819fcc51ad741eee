// SPDX-License-Identifier: Apache-2.0
#include "fedosov/fields.hpp"

namespace fedosov {

double ScalarField::operator()(const PhasePoint& x) const {
  const auto& c = x.coords();
  return value(std::vector<double>(c.data(), c.data() + c.size()));
}

Jet2 ScalarField::jet_at(const PhasePoint& x) const {
  Jet2 j = jet(seed_coordinates(x.coords()));
  if (j.is_constant()) return Jet2(j.value(), x.dim());
  return j;
}

std::vector<Jet2> VectorField::jet_at(const PhasePoint& x) const {
  auto a = jet(seed_coordinates(x.coords()));
  for (auto& c : a) {
    if (c.is_constant()) c = Jet2(c.value(), x.dim());
  }
  return a;
}

ScalarField coordinate_field(std::size_t index) {
  return ScalarField::from_generic([index](const auto& x) { return x[index]; },
                                   "x" + std::to_string(index));
}

ScalarField free_particle_hamiltonian(std::size_t n) {
  return ScalarField::from_generic(
      [n](const auto& x) {
        using S = std::decay_t<decltype(x[0])>;
        S h = 0.0;
        for (std::size_t i = 0; i < n; ++i) h += x[n + i] * x[n + i];
        return S(0.5 * h);
      },
      "free");
}

ScalarField oscillator_hamiltonian(std::size_t n) {
  return ScalarField::from_generic(
      [n](const auto& x) {
        using S = std::decay_t<decltype(x[0])>;
        S h = 0.0;
        for (std::size_t i = 0; i < 2 * n; ++i) h += x[i] * x[i];
        return S(0.5 * h);
      },
      "oscillator");
}

ScalarField linear_combination(double a, const ScalarField& f, double b, const ScalarField& g) {
  return ScalarField{[=](const std::vector<double>& x) { return a * f.value(x) + b * g.value(x); },
                     [=](const std::vector<Jet2>& x) { return Jet2(a) * f.jet(x) + Jet2(b) * g.jet(x); },
                     f.name + "+" + g.name};
}

}  // namespace fedosov

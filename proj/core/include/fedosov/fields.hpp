// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fedosov/jet.hpp"
#include "fedosov/phase_point.hpp"

namespace fedosov {

/// A scalar function of the phase coordinates, evaluable in doubles and jets.
/// Hamiltonians, observables and bracket arguments are all ScalarFields.
struct ScalarField {
  std::function<double(const std::vector<double>&)> value;
  std::function<Jet2(const std::vector<Jet2>&)> jet;
  std::string name;

  /// `f` must be callable as f(const std::vector<S>&) -> S for S in {double, Jet2}.
  template <class F>
  static ScalarField from_generic(F f, std::string name = {}) {
    return ScalarField{[f](const std::vector<double>& x) { return static_cast<double>(f(x)); },
                       [f](const std::vector<Jet2>& x) { return Jet2(f(x)); }, std::move(name)};
  }

  double operator()(const PhasePoint& x) const;
  Jet2 jet_at(const PhasePoint& x) const;
};

/// A vector field a^i(x) given through jets (used for covariant-derivative checks).
struct VectorField {
  std::function<std::vector<Jet2>(const std::vector<Jet2>&)> jet;
  std::string name;

  template <class F>
  static VectorField from_generic(F f, std::string name = {}) {
    return VectorField{[f](const std::vector<Jet2>& x) { return std::vector<Jet2>(f(x)); }, std::move(name)};
  }

  std::vector<Jet2> jet_at(const PhasePoint& x) const;
};

/// The coordinate function x^index.
ScalarField coordinate_field(std::size_t index);
/// p^2/2 on the last n coordinates of a 2n-dimensional space.
ScalarField free_particle_hamiltonian(std::size_t n);
/// (q^2 + p^2)/2.
ScalarField oscillator_hamiltonian(std::size_t n);
/// a f + b g.
ScalarField linear_combination(double a, const ScalarField& f, double b, const ScalarField& g);

}  // namespace fedosov

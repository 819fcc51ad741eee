// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fedosov/fields.hpp"
#include "fedosov/phase_point.hpp"
#include "fedosov/two_form.hpp"

namespace fedosov {

/// A random generic 2-form omega(x) = C + eps P(x) on R^{dim}.
///
/// C is a constant antisymmetric matrix with reciprocal condition at least
/// 0.05; every entry of P is a quadratic polynomial with standard-normal
/// coefficients. eps starts at 0.5 and is halved until omega stays
/// well-conditioned (rcond >= 1e-3) at probe points of the box [-box, box]^dim.
class PolynomialTwoForm {
 public:
  PolynomialTwoForm(std::size_t dim, std::mt19937_64& rng, double box = 1.0);

  std::size_t dim() const { return dim_; }
  double epsilon() const { return eps_; }
  double box() const { return box_; }
  TwoFormField field() const;

  template <class S>
  S entry(std::size_t i, std::size_t j, const std::vector<S>& x) const;

 private:
  struct Quadratic {
    double c0 = 0.0;
    std::vector<double> lin;
    std::vector<double> quad;  // upper triangle, row-major over a <= b
  };

  std::size_t dim_;
  double box_;
  double eps_ = 0.5;
  Matrix constant_;
  std::vector<Quadratic> poly_;  // strict upper triangle, row-major
};

PhasePoint random_point(std::size_t dim, std::mt19937_64& rng, double box = 1.0);

/// Random cubic polynomial scalar field with standard-normal coefficients.
ScalarField random_polynomial(std::size_t dim, std::mt19937_64& rng);

/// a^i(x) = quadratic polynomial per component.
VectorField random_quadratic_vector_field(std::size_t dim, std::mt19937_64& rng);

}  // namespace fedosov

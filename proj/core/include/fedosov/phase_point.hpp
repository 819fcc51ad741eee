// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>

#include <Eigen/Dense>

namespace fedosov {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A point of R^{2n} ordered as (q^1..q^n, p_1..p_n).
///
/// Construction rejects odd or empty coordinate vectors and non-finite
/// entries with std::invalid_argument.
class PhasePoint {
 public:
  explicit PhasePoint(Vector coords);
  PhasePoint(std::initializer_list<double> coords);

  static PhasePoint from_qp(std::span<const double> q, std::span<const double> p);

  std::size_t n() const { return static_cast<std::size_t>(coords_.size()) / 2; }
  std::size_t dim() const { return static_cast<std::size_t>(coords_.size()); }

  double operator[](std::size_t i) const { return coords_[static_cast<Eigen::Index>(i)]; }
  double q(std::size_t i) const { return (*this)[i]; }
  double p(std::size_t i) const { return (*this)[n() + i]; }

  const Vector& coords() const { return coords_; }

 private:
  Vector coords_;
};

}  // namespace fedosov

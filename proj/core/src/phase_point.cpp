// SPDX-License-Identifier: Apache-2.0
#include "fedosov/phase_point.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fedosov {

PhasePoint::PhasePoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() == 0 || coords_.size() % 2 != 0) {
    throw std::invalid_argument("phase point needs an even, positive number of coordinates, got " +
                                std::to_string(coords_.size()));
  }
  for (Eigen::Index i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i])) {
      throw std::invalid_argument("phase point coordinate " + std::to_string(i) + " is not finite");
    }
  }
}

PhasePoint::PhasePoint(std::initializer_list<double> coords)
    : PhasePoint(Eigen::Map<const Vector>(coords.begin(), static_cast<Eigen::Index>(coords.size()))) {}

PhasePoint PhasePoint::from_qp(std::span<const double> q, std::span<const double> p) {
  if (q.size() != p.size()) throw std::invalid_argument("q and p must have the same length");
  Vector x(static_cast<Eigen::Index>(q.size() + p.size()));
  for (std::size_t i = 0; i < q.size(); ++i) {
    x[static_cast<Eigen::Index>(i)] = q[i];
    x[static_cast<Eigen::Index>(q.size() + i)] = p[i];
  }
  return PhasePoint(std::move(x));
}

}  // namespace fedosov

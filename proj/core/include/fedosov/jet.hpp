// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fedosov {

/// Second-order truncated Taylor number: value, gradient and Hessian with
/// respect to the phase coordinates.
///
/// A jet of dimension zero is a plain constant and combines with jets of any
/// dimension. All arithmetic drops terms of order three and above, so the
/// value, gradient and Hessian of any composite expression are exact.
class Jet2 {
 public:
  Jet2() = default;
  Jet2(double value) : value_(value) {}  // NOLINT: implicit constant promotion is intended
  Jet2(double value, std::size_t dim);

  /// The coordinate function x^index evaluated at `value`.
  static Jet2 variable(double value, std::size_t index, std::size_t dim);

  /// Assembles a jet from parts; the Hessian is symmetrised.
  static Jet2 from_parts(double value, Eigen::VectorXd grad, Eigen::MatrixXd hess);

  double value() const { return value_; }
  std::size_t dim() const { return static_cast<std::size_t>(grad_.size()); }
  bool is_constant() const { return grad_.size() == 0; }

  /// Gradient and Hessian; both empty for a dimension-zero constant.
  const Eigen::VectorXd& grad() const { return grad_; }
  const Eigen::MatrixXd& hess() const { return hess_; }

  double d(std::size_t k) const;
  double dd(std::size_t a, std::size_t b) const;

  Jet2& operator+=(const Jet2& rhs);
  Jet2& operator-=(const Jet2& rhs);
  Jet2& operator*=(const Jet2& rhs);
  Jet2& operator/=(const Jet2& rhs);

  Jet2 operator-() const;

  /// f(this) given f, f', f'' at value().
  Jet2 chain(double f0, double f1, double f2) const;

 private:
  double value_ = 0.0;
  Eigen::VectorXd grad_;
  Eigen::MatrixXd hess_;
};

Jet2 operator+(Jet2 lhs, const Jet2& rhs);
Jet2 operator-(Jet2 lhs, const Jet2& rhs);
Jet2 operator*(const Jet2& lhs, const Jet2& rhs);
Jet2 operator/(const Jet2& lhs, const Jet2& rhs);

Jet2 sqrt(const Jet2& x);
Jet2 pow(const Jet2& x, double exponent);
Jet2 exp(const Jet2& x);
Jet2 log(const Jet2& x);
Jet2 sin(const Jet2& x);
Jet2 cos(const Jet2& x);

/// The partial derivative d_k of `x`, as a jet accurate to first order.
/// Its Hessian would need third derivatives and is left at zero.
Jet2 first_partial(const Jet2& x, std::size_t k);

/// Coordinate jets x^0..x^{N-1} seeded at `coords`.
std::vector<Jet2> seed_coordinates(std::span<const double> coords);
std::vector<Jet2> seed_coordinates(const Eigen::VectorXd& coords);

/// Value extraction usable from code templated on double or Jet2.
inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.value(); }

}  // namespace fedosov

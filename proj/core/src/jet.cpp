// SPDX-License-Identifier: Apache-2.0
#include "fedosov/jet.hpp"

#include <cmath>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Dimension of a binary result; constants broadcast.
std::size_t joint_dim(const Jet2& a, const Jet2& b) {
  if (a.is_constant()) return b.dim();
  if (b.is_constant() || a.dim() == b.dim()) return a.dim();
  throw ShapeMismatch("jet dimensions differ: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
}

}  // namespace

Jet2::Jet2(double value, std::size_t dim)
    : value_(value), grad_(Eigen::VectorXd::Zero(idx(dim))), hess_(Eigen::MatrixXd::Zero(idx(dim), idx(dim))) {}

Jet2 Jet2::variable(double value, std::size_t index, std::size_t dim) {
  Jet2 j(value, dim);
  j.grad_[idx(index)] = 1.0;
  return j;
}

Jet2 Jet2::from_parts(double value, Eigen::VectorXd grad, Eigen::MatrixXd hess) {
  if (hess.rows() != grad.size() || hess.cols() != grad.size()) {
    throw ShapeMismatch("jet Hessian must be square with the gradient's length");
  }
  Jet2 j;
  j.value_ = value;
  j.grad_ = std::move(grad);
  j.hess_ = 0.5 * (hess + hess.transpose());
  return j;
}

double Jet2::d(std::size_t k) const { return is_constant() ? 0.0 : grad_[idx(k)]; }

double Jet2::dd(std::size_t a, std::size_t b) const { return is_constant() ? 0.0 : hess_(idx(a), idx(b)); }

Jet2& Jet2::operator+=(const Jet2& rhs) {
  joint_dim(*this, rhs);
  value_ += rhs.value_;
  if (rhs.is_constant()) return *this;
  if (is_constant()) {
    grad_ = rhs.grad_;
    hess_ = rhs.hess_;
  } else {
    grad_ += rhs.grad_;
    hess_ += rhs.hess_;
  }
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& rhs) {
  joint_dim(*this, rhs);
  value_ -= rhs.value_;
  if (rhs.is_constant()) return *this;
  if (is_constant()) {
    grad_ = -rhs.grad_;
    hess_ = -rhs.hess_;
  } else {
    grad_ -= rhs.grad_;
    hess_ -= rhs.hess_;
  }
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& rhs) {
  joint_dim(*this, rhs);
  if (rhs.is_constant()) {
    value_ *= rhs.value_;
    grad_ *= rhs.value_;
    hess_ *= rhs.value_;
    return *this;
  }
  if (is_constant()) {
    const double a = value_;
    *this = rhs;
    value_ *= a;
    grad_ *= a;
    hess_ *= a;
    return *this;
  }
  // (uv)'' = u v'' + v u'' + u' v'^T + v' u'^T
  hess_ = value_ * rhs.hess_ + rhs.value_ * hess_ + grad_ * rhs.grad_.transpose() +
          rhs.grad_ * grad_.transpose();
  grad_ = value_ * rhs.grad_ + rhs.value_ * grad_;
  value_ *= rhs.value_;
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& rhs) {
  // 1/v has derivatives -1/v^2 and 2/v^3.
  const double v = rhs.value_;
  return *this *= rhs.chain(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet2 Jet2::operator-() const {
  Jet2 j = *this;
  j.value_ = -j.value_;
  j.grad_ = -j.grad_;
  j.hess_ = -j.hess_;
  return j;
}

Jet2 Jet2::chain(double f0, double f1, double f2) const {
  Jet2 j;
  j.value_ = f0;
  if (is_constant()) return j;
  j.grad_ = f1 * grad_;
  j.hess_ = f1 * hess_ + f2 * grad_ * grad_.transpose();
  return j;
}

Jet2 operator+(Jet2 lhs, const Jet2& rhs) { return lhs += rhs; }
Jet2 operator-(Jet2 lhs, const Jet2& rhs) { return lhs -= rhs; }
Jet2 operator*(const Jet2& lhs, const Jet2& rhs) {
  Jet2 r = lhs;
  return r *= rhs;
}
Jet2 operator/(const Jet2& lhs, const Jet2& rhs) {
  Jet2 r = lhs;
  return r /= rhs;
}

Jet2 sqrt(const Jet2& x) {
  const double s = std::sqrt(x.value());
  return x.chain(s, 0.5 / s, -0.25 / (s * x.value()));
}

Jet2 pow(const Jet2& x, double e) {
  const double v = x.value();
  if (e == 0.0) return x.chain(1.0, 0.0, 0.0);
  return x.chain(std::pow(v, e), e * std::pow(v, e - 1.0), e * (e - 1.0) * std::pow(v, e - 2.0));
}

Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.value());
  return x.chain(e, e, e);
}

Jet2 log(const Jet2& x) {
  const double v = x.value();
  return x.chain(std::log(v), 1.0 / v, -1.0 / (v * v));
}

Jet2 sin(const Jet2& x) {
  const double s = std::sin(x.value());
  return x.chain(s, std::cos(x.value()), -s);
}

Jet2 cos(const Jet2& x) {
  const double c = std::cos(x.value());
  return x.chain(c, -std::sin(x.value()), -c);
}

Jet2 first_partial(const Jet2& x, std::size_t k) {
  if (x.is_constant()) return Jet2(0.0);
  return Jet2::from_parts(x.grad()[idx(k)], x.hess().row(idx(k)).transpose(),
                          Eigen::MatrixXd::Zero(idx(x.dim()), idx(x.dim())));
}

std::vector<Jet2> seed_coordinates(std::span<const double> coords) {
  std::vector<Jet2> out;
  out.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out.push_back(Jet2::variable(coords[i], i, coords.size()));
  return out;
}

std::vector<Jet2> seed_coordinates(const Eigen::VectorXd& coords) {
  return seed_coordinates(std::span<const double>(coords.data(), static_cast<std::size_t>(coords.size())));
}

}  // namespace fedosov

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fedosov/jet.hpp"
#include "fedosov/phase_point.hpp"

namespace fedosov {

/// Square matrix of jets, row-major.
class JetMatrix {
 public:
  JetMatrix() = default;
  explicit JetMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t rows() const { return n_; }

  Jet2& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Jet2& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  Matrix values() const;
  /// d_k of every entry.
  Matrix partial(std::size_t k) const;
  /// d_a d_b of every entry.
  Matrix second_partial(std::size_t a, std::size_t b) const;

 private:
  std::size_t n_ = 0;
  std::vector<Jet2> entries_;
};

/// Inverse of a jet matrix, exact to second order:
/// d(A^-1) = -A^-1 dA A^-1 and the matching second-order term.
JetMatrix invert(const JetMatrix& a);

/// Storage type used by generic two-form evaluators for scalar type S.
template <class S>
struct FormMatrixOf;
template <>
struct FormMatrixOf<double> {
  using type = Matrix;
  static Matrix zero(std::size_t n) { return Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)); }
};
template <>
struct FormMatrixOf<Jet2> {
  using type = JetMatrix;
  static JetMatrix zero(std::size_t n) { return JetMatrix(n); }
};

/// Returns std::nullopt for an admissible point, otherwise a reason.
using DomainGuard = std::function<std::optional<std::string>(const PhasePoint&)>;

/// A field x -> omega_{mu nu}(x) of antisymmetric 2n x 2n matrices.
///
/// Evaluation is available in plain doubles (for integration) and in
/// second-order jets (for geometry). Antisymmetry is exact: after every
/// evaluation the strict lower triangle is overwritten with minus the upper
/// triangle and the diagonal with zero.
class TwoFormField {
 public:
  using ValueFn = std::function<Matrix(const Vector&)>;
  using JetFn = std::function<JetMatrix(const std::vector<Jet2>&)>;

  TwoFormField(std::size_t dim, ValueFn values, JetFn jets, DomainGuard guard = {}, std::string name = {});

  /// Builds a field from a generic callable `f(const std::vector<S>& x, M& w)`
  /// that fills w for S = double (M = Matrix) and S = Jet2 (M = JetMatrix).
  template <class F>
  static TwoFormField from_generic(std::size_t dim, F f, DomainGuard guard = {}, std::string name = {}) {
    ValueFn values = [dim, f](const Vector& x) {
      std::vector<double> xs(x.data(), x.data() + x.size());
      Matrix w = FormMatrixOf<double>::zero(dim);
      f(xs, w);
      return w;
    };
    JetFn jets = [dim, f](const std::vector<Jet2>& x) {
      JetMatrix w = FormMatrixOf<Jet2>::zero(dim);
      f(x, w);
      return w;
    };
    return TwoFormField(dim, std::move(values), std::move(jets), std::move(guard), std::move(name));
  }

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }

  /// std::nullopt when x is admissible.
  std::optional<std::string> violation(const PhasePoint& x) const;
  /// Throws DomainViolation (or ShapeMismatch on a dimension error).
  void require_admissible(const PhasePoint& x) const;

  Matrix values(const PhasePoint& x) const;
  /// Jets of omega seeded at x, so d_k and d_a d_b are exact.
  JetMatrix jets(const PhasePoint& x) const;

  /// The same field with omega replaced by -omega (reversed orientation).
  TwoFormField negated() const;

 private:
  std::size_t dim_;
  ValueFn values_;
  JetFn jets_;
  DomainGuard guard_;
  std::string name_;
};

}  // namespace fedosov

// SPDX-License-Identifier: Apache-2.0
#include "fedosov/two_form.hpp"

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void antisymmetrize(Matrix& w) {
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    w(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < w.cols(); ++j) w(j, i) = -w(i, j);
  }
}

void antisymmetrize(JetMatrix& w) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    w(i, i) = Jet2(0.0);
    for (std::size_t j = i + 1; j < w.rows(); ++j) w(j, i) = -w(i, j);
  }
}

}  // namespace

Matrix JetMatrix::values() const {
  Matrix m(idx(n_), idx(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(idx(i), idx(j)) = (*this)(i, j).value();
  return m;
}

Matrix JetMatrix::partial(std::size_t k) const {
  Matrix m(idx(n_), idx(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(idx(i), idx(j)) = (*this)(i, j).d(k);
  return m;
}

Matrix JetMatrix::second_partial(std::size_t a, std::size_t b) const {
  Matrix m(idx(n_), idx(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(idx(i), idx(j)) = (*this)(i, j).dd(a, b);
  return m;
}

JetMatrix invert(const JetMatrix& a) {
  const std::size_t n = a.rows();
  std::size_t dim = 0;
  for (std::size_t i = 0; i < n * n && dim == 0; ++i) dim = a(i / n, i % n).dim();

  const Matrix b = a.values().inverse();
  JetMatrix out(n);
  if (dim == 0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = Jet2(b(idx(i), idx(j)));
    return out;
  }

  std::vector<Matrix> first(dim);  // B A_k
  std::vector<Matrix> d_b(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    first[k] = b * a.partial(k);
    d_b[k] = -first[k] * b;
  }
  std::vector<Eigen::VectorXd> grads(n * n, Eigen::VectorXd(idx(dim)));
  std::vector<Eigen::MatrixXd> hessians(n * n, Eigen::MatrixXd(idx(dim), idx(dim)));
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t t = s; t < dim; ++t) {
      const Matrix dd = first[s] * first[t] * b + first[t] * first[s] * b - b * a.second_partial(s, t) * b;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          hessians[i * n + j](idx(s), idx(t)) = dd(idx(i), idx(j));
          hessians[i * n + j](idx(t), idx(s)) = dd(idx(i), idx(j));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) grads[i * n + j][idx(s)] = d_b[s](idx(i), idx(j));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = Jet2::from_parts(b(idx(i), idx(j)), std::move(grads[i * n + j]), std::move(hessians[i * n + j]));
  return out;
}

TwoFormField::TwoFormField(std::size_t dim, ValueFn values, JetFn jets, DomainGuard guard, std::string name)
    : dim_(dim), values_(std::move(values)), jets_(std::move(jets)), guard_(std::move(guard)), name_(std::move(name)) {
  if (dim_ == 0 || dim_ % 2 != 0) throw ShapeMismatch("two-form dimension must be even and positive");
}

std::optional<std::string> TwoFormField::violation(const PhasePoint& x) const {
  if (x.dim() != dim_) {
    return "point has dimension " + std::to_string(x.dim()) + ", form expects " + std::to_string(dim_);
  }
  if (guard_) return guard_(x);
  return std::nullopt;
}

void TwoFormField::require_admissible(const PhasePoint& x) const {
  if (x.dim() != dim_) {
    throw ShapeMismatch("point has dimension " + std::to_string(x.dim()) + ", form expects " +
                        std::to_string(dim_));
  }
  if (auto why = violation(x)) throw DomainViolation(name_.empty() ? *why : name_ + ": " + *why);
}

Matrix TwoFormField::values(const PhasePoint& x) const {
  require_admissible(x);
  Matrix w = values_(x.coords());
  antisymmetrize(w);
  return w;
}

JetMatrix TwoFormField::jets(const PhasePoint& x) const {
  require_admissible(x);
  JetMatrix w = jets_(seed_coordinates(x.coords()));
  antisymmetrize(w);
  // Constant entries are promoted so every entry carries derivatives.
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (w(i, j).is_constant()) w(i, j) = Jet2(w(i, j).value(), dim_);
  return w;
}

TwoFormField TwoFormField::negated() const {
  auto values = values_;
  auto jets = jets_;
  return TwoFormField(
      dim_, [values](const Vector& x) { return Matrix(-values(x)); },
      [jets, n = dim_](const std::vector<Jet2>& x) {
        JetMatrix w = jets(x);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) w(i, j) = -w(i, j);
        return w;
      },
      guard_, name_.empty() ? std::string("-omega") : "-" + name_);
}

}  // namespace fedosov

// SPDX-License-Identifier: Apache-2.0
#include "fedosov/random_fields.hpp"

#include <memory>

#include "fedosov/errors.hpp"
#include "fedosov/geometry.hpp"

namespace fedosov {

namespace {

Matrix random_antisymmetric(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix c = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      c(i, j) = normal(rng);
      c(j, i) = -c(i, j);
    }
  return c;
}

struct Cubic {
  double c0;
  std::vector<double> c1;
  std::vector<double> c2;  // a <= b
  std::vector<double> c3;  // a <= b <= c
};

Cubic random_cubic(std::size_t dim, std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> normal;
  Cubic c{normal(rng), {}, {}, {}};
  for (std::size_t a = 0; a < dim; ++a) c.c1.push_back(normal(rng));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a; b < dim; ++b) c.c2.push_back(normal(rng));
  if (degree >= 3) {
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a; b < dim; ++b)
        for (std::size_t d = b; d < dim; ++d) c.c3.push_back(normal(rng) / 3.0);
  }
  return c;
}

template <class S>
S eval_cubic(const Cubic& c, const std::vector<S>& x) {
  const std::size_t dim = c.c1.size();
  S out = S(c.c0);
  for (std::size_t a = 0; a < dim; ++a) out += S(c.c1[a]) * x[a];
  std::size_t k = 0;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a; b < dim; ++b) out += S(c.c2[k++]) * x[a] * x[b];
  k = 0;
  if (!c.c3.empty()) {
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = a; b < dim; ++b)
        for (std::size_t d = b; d < dim; ++d) out += S(c.c3[k++]) * x[a] * x[b] * x[d];
  }
  return out;
}

}  // namespace

PolynomialTwoForm::PolynomialTwoForm(std::size_t dim, std::mt19937_64& rng, double box) : dim_(dim), box_(box) {
  if (dim == 0 || dim % 2 != 0) throw ShapeMismatch("random 2-form dimension must be even and positive");
  do {
    constant_ = random_antisymmetric(dim, rng);
  } while (reciprocal_condition(constant_) < 0.05);

  std::normal_distribution<double> normal;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Quadratic q;
      q.c0 = normal(rng);
      for (std::size_t a = 0; a < dim; ++a) q.lin.push_back(normal(rng));
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b) q.quad.push_back(normal(rng));
      poly_.push_back(std::move(q));
    }

  std::vector<PhasePoint> probes;
  for (int k = 0; k < 32; ++k) probes.push_back(random_point(dim, rng, box));
  for (int attempt = 0; attempt < 40; ++attempt) {
    bool ok = true;
    for (const auto& x : probes) {
      const auto& c = x.coords();
      const std::vector<double> xs(c.data(), c.data() + c.size());
      Matrix w(constant_.rows(), constant_.cols());
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry(i, j, xs);
      if (reciprocal_condition(w) < 1e-3) {
        ok = false;
        break;
      }
    }
    if (ok) return;
    eps_ *= 0.5;
  }
}

template <class S>
S PolynomialTwoForm::entry(std::size_t i, std::size_t j, const std::vector<S>& x) const {
  if (i == j) return S(0.0);
  if (i > j) return S(-1.0) * entry(j, i, x);
  const std::size_t k = i * dim_ - i * (i + 1) / 2 + (j - i - 1);
  const Quadratic& q = poly_[k];
  S out = S(q.c0);
  for (std::size_t a = 0; a < dim_; ++a) out += S(q.lin[a]) * x[a];
  std::size_t m = 0;
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a; b < dim_; ++b) out += S(q.quad[m++]) * x[a] * x[b];
  return S(constant_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) + S(eps_) * out;
}

template double PolynomialTwoForm::entry<double>(std::size_t, std::size_t, const std::vector<double>&) const;
template Jet2 PolynomialTwoForm::entry<Jet2>(std::size_t, std::size_t, const std::vector<Jet2>&) const;

TwoFormField PolynomialTwoForm::field() const {
  auto self = std::make_shared<const PolynomialTwoForm>(*this);
  return TwoFormField::from_generic(
      dim_,
      [self](const auto& x, auto& w) {
        const std::size_t n = self->dim();
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) w(i, j) = self->entry(i, j, x);
      },
      {}, "random-polynomial");
}

PhasePoint random_point(std::size_t dim, std::mt19937_64& rng, double box) {
  std::uniform_real_distribution<double> u(-box, box);
  Vector x(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = u(rng);
  return PhasePoint(std::move(x));
}

ScalarField random_polynomial(std::size_t dim, std::mt19937_64& rng) {
  auto c = std::make_shared<const Cubic>(random_cubic(dim, rng, 3));
  return ScalarField::from_generic([c](const auto& x) { return eval_cubic(*c, x); }, "random-cubic");
}

VectorField random_quadratic_vector_field(std::size_t dim, std::mt19937_64& rng) {
  std::vector<Cubic> comps;
  for (std::size_t i = 0; i < dim; ++i) comps.push_back(random_cubic(dim, rng, 2));
  auto shared = std::make_shared<const std::vector<Cubic>>(std::move(comps));
  return VectorField{[shared](const std::vector<Jet2>& x) {
                       std::vector<Jet2> out;
                       for (const auto& c : *shared) out.push_back(eval_cubic(c, x));
                       return out;
                     },
                     "random-quadratic"};
}

}  // namespace fedosov

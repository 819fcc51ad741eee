// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "fedosov/errors.hpp"
#include "fedosov/jet.hpp"

using fedosov::Jet2;

namespace {

template <class S>
S composite(const std::vector<S>& x) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sin;
  using std::sqrt;
  return sin(x[0] * x[1]) / (x[2] * x[2] + 2.0) + pow(x[0] * x[0] + 1.5, -1.5) * exp(x[1]) +
         sqrt(x[2] * x[2] + x[0] * x[0] + 0.5) * log(x[1] + 3.0) - cos(x[2]) * x[0] * x[1];
}

double eval(const Eigen::Vector3d& x) { return composite(std::vector<double>{x[0], x[1], x[2]}); }

}  // namespace

TEST(Jet2, VariableAndConstant) {
  const Jet2 v = Jet2::variable(2.0, 1, 3);
  EXPECT_EQ(v.value(), 2.0);
  EXPECT_EQ(v.d(0), 0.0);
  EXPECT_EQ(v.d(1), 1.0);
  EXPECT_TRUE(v.hess().isZero());
  const Jet2 c(4.0);
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c.d(2), 0.0);
  EXPECT_EQ(c.dd(1, 2), 0.0);
}

TEST(Jet2, ProductRule) {
  const auto x = fedosov::seed_coordinates(std::vector<double>{1.5, -0.5});
  const Jet2 y = x[0] * x[0] * x[1];
  EXPECT_DOUBLE_EQ(y.value(), 1.5 * 1.5 * -0.5);
  EXPECT_DOUBLE_EQ(y.d(0), 2 * 1.5 * -0.5);
  EXPECT_DOUBLE_EQ(y.d(1), 1.5 * 1.5);
  EXPECT_DOUBLE_EQ(y.dd(0, 0), 2 * -0.5);
  EXPECT_DOUBLE_EQ(y.dd(0, 1), 2 * 1.5);
  EXPECT_DOUBLE_EQ(y.dd(1, 1), 0.0);
}

TEST(Jet2, ConstantsBroadcast) {
  const auto x = fedosov::seed_coordinates(std::vector<double>{2.0, 3.0});
  const Jet2 y = 2.0 * x[0] + 1.0 - x[1] / 4.0;
  EXPECT_DOUBLE_EQ(y.value(), 4.0 + 1.0 - 0.75);
  EXPECT_DOUBLE_EQ(y.d(0), 2.0);
  EXPECT_DOUBLE_EQ(y.d(1), -0.25);
}

TEST(Jet2, DimensionMismatchThrows) {
  const Jet2 a = Jet2::variable(1.0, 0, 2);
  const Jet2 b = Jet2::variable(1.0, 0, 3);
  EXPECT_THROW(a + b, fedosov::ShapeMismatch);
  EXPECT_THROW(a * b, fedosov::ShapeMismatch);
}

TEST(Jet2, PowerMatchesClosedForm) {
  // d/dx x^{-3/2} and d2/dx2 at x = 2
  const Jet2 x = Jet2::variable(2.0, 0, 1);
  const Jet2 y = fedosov::pow(x, -1.5);
  EXPECT_NEAR(y.d(0), -1.5 * std::pow(2.0, -2.5), 1e-15);
  EXPECT_NEAR(y.dd(0, 0), 3.75 * std::pow(2.0, -3.5), 1e-15);
}

TEST(Jet2, HessianSymmetric) {
  const auto x = fedosov::seed_coordinates(std::vector<double>{0.3, -0.7, 1.1});
  const Jet2 y = composite(x);
  EXPECT_LT((y.hess() - y.hess().transpose()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Jet2, FirstPartialCarriesHessianRow) {
  const auto x = fedosov::seed_coordinates(std::vector<double>{0.3, -0.7, 1.1});
  const Jet2 y = composite(x);
  const Jet2 dy = fedosov::first_partial(y, 1);
  EXPECT_EQ(dy.value(), y.d(1));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(dy.d(k), y.dd(1, k));
}

TEST(Jet2, AgreesWithFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double eps = std::numeric_limits<double>::epsilon();
  const double h1 = std::cbrt(eps);
  const double h2 = std::sqrt(std::sqrt(eps));
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Vector3d x0(u(rng), u(rng), u(rng));
    const Jet2 j = composite(fedosov::seed_coordinates(Eigen::VectorXd(x0)));
    EXPECT_NEAR(j.value(), eval(x0), 1e-14);
    for (int a = 0; a < 3; ++a) {
      const Eigen::Vector3d ea = Eigen::Vector3d::Unit(a);
      const double g = (eval(x0 + h1 * ea) - eval(x0 - h1 * ea)) / (2 * h1);
      EXPECT_NEAR(j.d(static_cast<std::size_t>(a)), g, 1e-6 * std::max(1.0, std::abs(g)));
      for (int b = 0; b < 3; ++b) {
        const Eigen::Vector3d eb = Eigen::Vector3d::Unit(b);
        const double hab = (eval(x0 + h2 * (ea + eb)) - eval(x0 + h2 * (ea - eb)) - eval(x0 - h2 * (ea - eb)) +
                            eval(x0 - h2 * (ea + eb))) /
                           (4 * h2 * h2);
        EXPECT_NEAR(j.dd(static_cast<std::size_t>(a), static_cast<std::size_t>(b)), hab,
                    1e-6 * std::max(1.0, std::abs(hab)));
      }
    }
  }
}

TEST(Jet2, DivisionInverse) {
  const auto x = fedosov::seed_coordinates(std::vector<double>{0.4, 1.3});
  const Jet2 y = (x[0] * x[1] + 2.0) / (x[0] * x[1] + 2.0);
  EXPECT_NEAR(y.value(), 1.0, 1e-15);
  EXPECT_LT(y.grad().cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(y.hess().cwiseAbs().maxCoeff(), 1e-15);
}

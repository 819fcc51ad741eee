// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fedosov/errors.hpp"
#include "fedosov/geometry.hpp"
#include "fedosov/monopole.hpp"
#include "oracles.hpp"

using namespace fedosov;
using namespace fedosov::monopole;

namespace {

MonopoleParams vanishing() {
  MonopoleParams p;
  p.f_mode = FMode::Constant;
  p.alpha = 0.0;
  p.g_mode = GMode::Zero;
  return p;
}

Matrix standard_lower() {
  Matrix m = Matrix::Zero(6, 6);
  m.topRightCorner(3, 3) = -Matrix::Identity(3, 3);
  m.bottomLeftCorner(3, 3) = Matrix::Identity(3, 3);
  return m;
}

PhasePoint admissible_point(std::mt19937_64& rng, const MonopoleParams& prm) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    Vector x(6);
    for (int i = 0; i < 6; ++i) x[i] = u(rng);
    PhasePoint pt(x);
    const auto r = singularity_guard(prm, pt);
    if (r.admissible && std::abs(r.denom_value) > 1e-2) return pt;
  }
}

}  // namespace

TEST(SingularityGuard, Examples) {
  const MonopoleParams prm;
  const auto origin = singularity_guard(prm, PhasePoint{0, 0, 0, 0, 1, 0});
  EXPECT_TRUE(origin.near_q_origin);
  EXPECT_FALSE(origin.admissible);
  EXPECT_FALSE(origin.describe().empty());

  const auto degenerate = singularity_guard(prm, PhasePoint{0, 1, 0, 0, 1, 0});
  EXPECT_NEAR(degenerate.denom_value, 0.0, 1e-15);
  EXPECT_FALSE(degenerate.admissible);

  const auto fine = singularity_guard(prm, PhasePoint{0, 2, 0, 0, 1, 0});
  EXPECT_DOUBLE_EQ(fine.denom_value, 0.75);
  EXPECT_TRUE(fine.admissible);
}

TEST(SingularityGuard, OriginHarmlessForConstantModes) {
  const auto r = singularity_guard(vanishing(), PhasePoint{0, 0, 0, 0, 0, 0});
  EXPECT_TRUE(r.near_q_origin);
  EXPECT_TRUE(r.near_p_origin);
  EXPECT_TRUE(r.admissible);
}

TEST(SingularityGuard, MarginIsConfigurable) {
  MonopoleParams prm;
  prm.margin = 0.5;
  EXPECT_FALSE(singularity_guard(prm, PhasePoint{0.3, 0, 0, 0, 1, 0}).admissible);
  prm.margin = 0.1;
  EXPECT_TRUE(singularity_guard(prm, PhasePoint{0.3, 0, 0, 0, 1, 0}).admissible);
}

TEST(Functions, ModesAndLambda) {
  MonopoleParams prm;
  prm.lambda = 2.0;
  EXPECT_DOUBLE_EQ(f_value(prm, {0.0, 2.0, 0.0}), 0.25);
  EXPECT_DOUBLE_EQ(g_value(prm, {0.0, 0.0, 2.0}), 0.125);
  prm.f_mode = FMode::Constant;
  prm.alpha = 3.0;
  prm.g_mode = GMode::Zero;
  EXPECT_EQ(f_value(prm, {1.0, 1.0, 1.0}), 3.0);
  EXPECT_EQ(g_value(prm, {1.0, 1.0, 1.0}), 0.0);
}

TEST(UpperMatrix, VanishingFunctionsGiveStandardForm) {
  const PhasePoint x{0.2, 0.3, -0.4, 0.5, 0.6, -0.7};
  Matrix expected = Matrix::Zero(6, 6);
  expected.topRightCorner(3, 3) = Matrix::Identity(3, 3);
  expected.bottomLeftCorner(3, 3) = -Matrix::Identity(3, 3);
  EXPECT_EQ(omega_upper_eq4(vanishing(), x), expected);
  EXPECT_EQ(omega_lower_eq6(vanishing(), x), standard_lower());
  EXPECT_EQ(omega_form7(vanishing(), x), standard_lower());
}

TEST(UpperMatrix, EntryFromDirectSubstitution) {
  const Matrix up = omega_upper_eq4(MonopoleParams{}, PhasePoint{0, 1, 0, 0, 0, 1});
  EXPECT_DOUBLE_EQ(up(0, 1), 1.0);
  EXPECT_EQ(up, Matrix(-up.transpose()));
}

TEST(UpperMatrix, ShapeAndDomainErrors) {
  EXPECT_THROW(omega_upper_eq4(MonopoleParams{}, PhasePoint{1, 0, 0, 1}), ShapeMismatch);
  EXPECT_THROW(omega_lower_eq6(MonopoleParams{}, PhasePoint{0, 1, 0, 0, 1, 0}), DomainViolation);
  EXPECT_THROW(omega_form7(MonopoleParams{}, PhasePoint{0, 0, 0, 0, 1, 0}), DomainViolation);
}

TEST(LowerMatrix, InvertsUpperMatrixEverywhere) {
  std::mt19937_64 rng(101);
  const MonopoleParams prm;
  for (int k = 0; k < 1000; ++k) {
    const PhasePoint x = admissible_point(rng, prm);
    const Matrix up = omega_upper_eq4(prm, x);
    const Matrix lo = omega_lower_eq6(prm, x);
    const double scale = std::max(1.0, up.cwiseAbs().maxCoeff() * lo.cwiseAbs().maxCoeff());
    ASSERT_LT((lo * up - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-12 * scale) << k;
  }
}

TEST(LowerMatrix, WithoutGHasQBlockAndUnitOffDiagonals) {
  MonopoleParams prm = MonopoleParams{}.without_g();
  const PhasePoint x{0.4, -0.5, 0.9, 0.3, 0.2, 0.1};
  const Matrix lo = omega_lower_eq6(prm, x);
  const double f = f_value(prm, {0.4, -0.5, 0.9});
  const double q[3] = {0.4, -0.5, 0.9};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double expected = 0.0;
      for (int k = 0; k < 3; ++k) expected += f * oracle::levi(i, j, k) * q[k];
      EXPECT_NEAR(lo(i, j), expected, 1e-15);
      EXPECT_EQ(lo(i, j + 3), i == j ? -1.0 : 0.0);
      EXPECT_EQ(lo(i + 3, j), i == j ? 1.0 : 0.0);
      EXPECT_EQ(lo(i + 3, j + 3), 0.0);
    }
}

TEST(Form7, EqualsLowerMatrixWithoutG) {
  std::mt19937_64 rng(103);
  for (MonopoleParams prm : {MonopoleParams{}, vanishing()}) {
    for (int k = 0; k < 50; ++k) {
      const PhasePoint x = admissible_point(rng, MonopoleParams{});
      EXPECT_EQ(omega_form7(prm, x), omega_lower_eq6(prm.without_g(), x));
    }
  }
}

TEST(Fields, Form4AndForm6Agree) {
  const MonopoleParams prm;
  const PhasePoint x{0.3, 0.8, -0.5, 0.7, -0.4, 0.9};
  const JetMatrix j4 = form4_field(prm).jets(x);
  const JetMatrix j6 = form6_field(prm).jets(x);
  EXPECT_LT((j4.values() - j6.values()).cwiseAbs().maxCoeff(), 1e-13);
  for (std::size_t a = 0; a < 6; ++a) {
    EXPECT_LT((j4.partial(a) - j6.partial(a)).cwiseAbs().maxCoeff(), 1e-12);
    for (std::size_t b = 0; b < 6; ++b)
      EXPECT_LT((j4.second_partial(a, b) - j6.second_partial(a, b)).cwiseAbs().maxCoeff(), 1e-11);
  }
}

TEST(Fields, MakeModel) {
  const MonopoleParams prm;
  EXPECT_EQ(make_model("standard", prm, 2).dim(), 4u);
  EXPECT_EQ(make_model("form7", prm).dim(), 6u);
  EXPECT_THROW(make_model("form5", prm), std::invalid_argument);
  EXPECT_TRUE(is_monopole_model("form6"));
  EXPECT_FALSE(is_monopole_model("standard"));
}

TEST(Fields, Form7ClosedForMonopoleNotForConstant) {
  const PhasePoint x{0.6, -0.2, 0.5, 0.1, 0.2, 0.3};
  EXPECT_LT(d_omega(form7_field(MonopoleParams{}), x).max_abs(), 1e-10);
  MonopoleParams a;
  a.f_mode = FMode::Constant;
  a.alpha = 2.0;
  EXPECT_NEAR(d_omega(form7_field(a), x)(0, 1, 2), 6.0, 1e-14);
}

TEST(ReferenceConnection, CountAndHomogeneity) {
  const std::array<double, 3> q{0.7, -1.1, 0.4};
  const TensorBlock g = reference_connection_eq41(q);
  EXPECT_EQ(count_nonzero(g, 1e-12), 18u);
  const TensorBlock g2 = reference_connection_eq41({1.4, -2.2, 0.8});
  EXPECT_LT(max_abs_difference(g2, std::pow(2.0, -3.0) * g), 1e-14);
}

TEST(ReferenceConnection, LiteralReadingIsNotAntisymmetric) {
  const std::array<double, 3> q{0.7, -1.1, 0.4};
  TensorBlock literal = reference_connection_eq41(q, 1.0, false);
  literal.declare_symmetry(1, 2, true);
  EXPECT_GT(literal.symmetry_violation(), 1e-3);
}

TEST(ReferenceCurvature, CountAndHomogeneity) {
  const std::array<double, 3> q{0.7, -1.1, 0.4};
  const TensorBlock r = reference_curvature_eq42(q);
  EXPECT_EQ(count_nonzero(r, 1e-12), 54u);
  const TensorBlock r2 = reference_curvature_eq42({1.4, -2.2, 0.8});
  EXPECT_LT(max_abs_difference(r2, std::pow(2.0, -4.0) * r), 1e-14);
}

TEST(ReferenceCurvature, MachineryHasSameSparsity) {
  const PhasePoint x{0.7, -1.1, 0.4, 0.2, 0.1, 0.3};
  const MonopoleParams prm;
  EXPECT_EQ(count_nonzero(skew_connection(form7_field(prm), x).lowered, 1e-12), 18u);
  EXPECT_EQ(count_nonzero(curvature(form7_field(prm), x).mixed, 1e-12), 54u);
}

TEST(ReferenceRicci, SliceValues) {
  const MonopoleParams prm;
  const PhasePoint slice{0, 1, 0, 0, 2, 0};
  EXPECT_DOUBLE_EQ(reference_R11_eq40(slice), -1.0);
  const double machinery = ricci(form6_field(prm), slice)(0, 0);
  EXPECT_NEAR(reference_R11_eq39(prm, slice), machinery, 1e-10);
}

TEST(ReferenceR1112, DerivedPoint) {
  const double expected = -3.0 * std::pow(2.0, -2.5) / std::pow(1.0 - std::pow(2.0, -1.5), 2);
  EXPECT_NEAR(reference_R1112_eq27(MonopoleParams{}, PhasePoint{0, 1, 1, 0, 1, 0}), expected, 1e-12);
}

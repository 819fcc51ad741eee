// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "fedosov/errors.hpp"
#include "fedosov/fields.hpp"
#include "fedosov/geometry.hpp"
#include "fedosov/monopole.hpp"
#include "fedosov/phase_point.hpp"
#include "fedosov/random_fields.hpp"
#include "fedosov/two_form.hpp"

using namespace fedosov;

TEST(PhasePoint, RejectsBadCoordinates) {
  EXPECT_THROW(PhasePoint({1.0, 2.0, 3.0}), std::invalid_argument);
  EXPECT_THROW(PhasePoint(Vector(0)), std::invalid_argument);
  EXPECT_THROW(PhasePoint({1.0, std::numeric_limits<double>::quiet_NaN()}), std::invalid_argument);
  const double q[] = {1.0, 2.0};
  const double p[] = {3.0};
  EXPECT_THROW(PhasePoint::from_qp(q, p), std::invalid_argument);
}

TEST(PhasePoint, QpAccessors) {
  const double q[] = {1.0, 2.0};
  const double p[] = {3.0, 4.0};
  const PhasePoint x = PhasePoint::from_qp(q, p);
  EXPECT_EQ(x.n(), 2u);
  EXPECT_EQ(x.dim(), 4u);
  EXPECT_EQ(x.q(1), 2.0);
  EXPECT_EQ(x.p(0), 3.0);
}

TEST(TwoFormField, OddDimensionRejected) {
  EXPECT_THROW(TwoFormField::from_generic(3, [](const auto&, auto&) {}), ShapeMismatch);
}

TEST(TwoFormField, UpperTriangleDefinesForm) {
  auto field = TwoFormField::from_generic(2, [](const auto& x, auto& w) {
    w(0, 1) = x[0] * x[1] + 1.0;
    w(1, 0) = 42.0;  // ignored
    w(0, 0) = 7.0;   // ignored
  });
  const Matrix m = field.values(PhasePoint{2.0, 3.0});
  EXPECT_EQ(m(0, 1), 7.0);
  EXPECT_EQ(m(1, 0), -7.0);
  EXPECT_EQ(m(0, 0), 0.0);
  const JetMatrix j = field.jets(PhasePoint{2.0, 3.0});
  EXPECT_EQ(j(1, 0).d(0), -3.0);
  EXPECT_EQ(j(1, 1).dim(), 2u);
}

TEST(TwoFormField, AntisymmetryExactOnRandomForms) {
  std::mt19937_64 rng(3);
  for (std::size_t dim : {2u, 4u, 6u}) {
    PolynomialTwoForm form(dim, rng);
    const Matrix m = form.field().values(random_point(dim, rng));
    EXPECT_EQ((m + m.transpose()).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(TwoFormField, DimensionMismatchAndGuard) {
  const auto f7 = monopole::form7_field(monopole::MonopoleParams{});
  EXPECT_THROW(f7.values(PhasePoint{1.0, 0.0}), ShapeMismatch);
  EXPECT_THROW(f7.values(PhasePoint{0, 0, 0, 0, 1, 0}), DomainViolation);
  EXPECT_TRUE(f7.violation(PhasePoint{0, 0, 0, 0, 1, 0}).has_value());
  EXPECT_FALSE(f7.violation(PhasePoint{1, 0, 0, 0, 1, 0}).has_value());
}

TEST(TwoFormField, NegatedFlipsValuesAndJets) {
  std::mt19937_64 rng(5);
  PolynomialTwoForm form(4, rng);
  const auto f = form.field();
  const auto g = f.negated();
  const PhasePoint x = random_point(4, rng);
  EXPECT_EQ((f.values(x) + g.values(x)).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((f.jets(x).partial(2) + g.jets(x).partial(2)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(TwoFormField, JetInverseMatchesMatrixInverse) {
  std::mt19937_64 rng(9);
  PolynomialTwoForm form(6, rng);
  const PhasePoint x = random_point(6, rng);
  const JetMatrix w = form.field().jets(x);
  const JetMatrix inv = invert(w);
  const Matrix expected = w.values().inverse();
  EXPECT_LT((inv.values() - expected).cwiseAbs().maxCoeff(), 1e-12);
  // d(W^-1) = -W^-1 dW W^-1
  for (std::size_t k = 0; k < 6; ++k)
    EXPECT_LT((inv.partial(k) + expected * w.partial(k) * expected).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(RandomForms, ReproducibleFromSeed) {
  std::mt19937_64 a(77), b(77);
  PolynomialTwoForm fa(4, a), fb(4, b);
  const PhasePoint x{0.1, -0.2, 0.3, 0.4};
  EXPECT_EQ(fa.field().values(x), fb.field().values(x));
  EXPECT_EQ(fa.epsilon(), fb.epsilon());
}

TEST(RandomForms, WellConditionedOnBox) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    PolynomialTwoForm form(2 + 2 * static_cast<std::size_t>(k % 3), rng);
    const PhasePoint x = random_point(form.dim(), rng);
    EXPECT_GT(reciprocal_condition(form.field().values(x)), 1e-4);
    EXPECT_GT(form.epsilon(), 0.0);
    EXPECT_LE(form.epsilon(), 0.5);
  }
}

TEST(ScalarField, GenericAndNamed) {
  const auto h = free_particle_hamiltonian(2);
  EXPECT_DOUBLE_EQ(h(PhasePoint{5.0, 5.0, 1.0, 2.0}), 2.5);
  const Jet2 j = h.jet_at(PhasePoint{5.0, 5.0, 1.0, 2.0});
  EXPECT_DOUBLE_EQ(j.d(3), 2.0);
  EXPECT_DOUBLE_EQ(j.dd(2, 2), 1.0);
  const auto osc = oscillator_hamiltonian(1);
  EXPECT_DOUBLE_EQ(osc(PhasePoint{3.0, 4.0}), 12.5);
  const auto c = linear_combination(2.0, coordinate_field(0), -1.0, coordinate_field(1));
  EXPECT_DOUBLE_EQ(c(PhasePoint{3.0, 4.0}), 2.0);
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ncc/lie_core.hpp"
#include "support.hpp"

using namespace ncc;
using ncc::testing::Sl2;

namespace {

// Killing form from its definition, ignoring the precomputed Gram matrix.
double brute_killing(const AlgebraElement& x, const AlgebraElement& y) {
  const auto& alg = x.algebra();
  double tr = 0.0;
  for (int i = 0; i < alg->dim(); ++i) {
    const AlgebraElement b = AlgebraElement::basis(alg, i);
    const AlgebraElement img = bracket(x, bracket(y, b));
    tr += img.coords()(i);
  }
  return tr;
}

}  // namespace

TEST(Algebra, Dimensions) {
  EXPECT_EQ(Algebra::parse("sl:2")->dim(), 3);
  EXPECT_EQ(Algebra::parse("sl:4")->dim(), 15);
  EXPECT_EQ(Algebra::parse("gl:3")->dim(), 9);
  EXPECT_EQ(Algebra::parse("so:1,2")->dim(), 3);
  EXPECT_EQ(Algebra::parse("so:2,3")->dim(), 10);
  EXPECT_EQ(Algebra::parse("sp:4")->dim(), 10);
  EXPECT_EQ(Algebra::parse("sp:6")->dim(), 21);
  EXPECT_EQ(Algebra::parse("so:1,2")->name(), "so_1,2");
}

TEST(Algebra, ParseErrors) {
  EXPECT_THROW(Algebra::parse("xx:2"), DomainError);
  EXPECT_THROW(Algebra::parse("sl"), DomainError);
  EXPECT_THROW(Algebra::parse("sl:a"), DomainError);
  EXPECT_THROW(Algebra::parse("sp:3"), DomainError);
  EXPECT_THROW(Algebra::parse("so:1"), DomainError);
}

TEST(Algebra, CoordinatesRoundTrip) {
  auto alg = Algebra::parse("so:2,3");
  std::mt19937_64 rng(3);
  const AlgebraElement x = ncc::testing::random_element(alg, rng);
  EXPECT_LT((alg->coordinates(x.matrix()) - x.coords()).norm(), 1e-12);
  Matrix off = Matrix::Identity(5, 5);
  EXPECT_THROW(alg->coordinates(off), ConsistencyError);
}

TEST(Bracket, Sl2Relations) {
  Sl2 s;
  EXPECT_LT((bracket(s.h, s.e) - s.e).norm(), 1e-14);
  EXPECT_LT((bracket(s.h, s.f) + s.f).norm(), 1e-14);
  EXPECT_LT((bracket(s.e, s.f) - s.h * 2.0).norm(), 1e-14);
  EXPECT_LT(bracket(s.z, s.z).norm(), 1e-14);
  // rotation of the (h, h0) plane by z
  EXPECT_LT((bracket(s.z, s.h) + s.h0).norm(), 1e-14);
  EXPECT_LT((bracket(s.z, s.h0) - s.h).norm(), 1e-14);
}

TEST(AdMatrix, SpectrumAndRadius) {
  Sl2 s;
  EXPECT_EQ(ad_matrix(AlgebraElement::zero(s.alg)).norm(), 0.0);
  const double rho = spectral_radius(ad_matrix(s.h));
  EXPECT_NEAR(rho, 1.0, 1e-12);
  for (double t : {0.3, -1.2, 2.5}) {
    EXPECT_NEAR(spectral_radius(ad_matrix(s.z * t)), std::abs(t), 1e-12);
  }
}

TEST(Killing, Sl2ValuesAgainstTraceDefinition) {
  Sl2 s;
  EXPECT_NEAR(killing(s.h, s.h), 2.0, 1e-12);
  EXPECT_NEAR(killing(s.h, s.e), 0.0, 1e-12);
  EXPECT_NEAR(killing(s.e, s.f), 4.0, 1e-12);
  EXPECT_NEAR(killing(s.z, s.z), -2.0, 1e-12);
  std::mt19937_64 rng(5);
  for (const char* spec : {"sl:3", "so:1,3", "sp:4"}) {
    auto alg = Algebra::parse(spec);
    for (int i = 0; i < 5; ++i) {
      const auto x = ncc::testing::random_element(alg, rng);
      const auto y = ncc::testing::random_element(alg, rng);
      EXPECT_NEAR(killing(x, y), brute_killing(x, y), 1e-10) << spec;
    }
  }
}

TEST(AdjointAction, ExamplesAndHomomorphism) {
  Sl2 s;
  std::mt19937_64 rng(7);
  const auto x = ncc::testing::random_element(s.alg, rng);
  EXPECT_LT((adjoint_action(GroupElement::identity(s.alg), x) - x).norm(), 1e-14);
  for (double t : {-1.0, 0.4, 2.0}) {
    EXPECT_LT((adjoint_action(GroupElement::exp(s.h * t), s.e) - s.e * std::exp(t)).norm(), 1e-12);
  }
  // Ad(exp y) = exp(ad y)
  const auto y = ncc::testing::random_element(s.alg, rng);
  const Vector lhs = adjoint_action(GroupElement::exp(y), x).coords();
  const Vector rhs = expm(ad_matrix(y)) * x.coords();
  EXPECT_LT((lhs - rhs).norm(), 1e-12);
}

TEST(AdjointAction, So12RotationByPiFlipsH0) {
  auto alg = Algebra::parse("so:1,2");
  Matrix r = Matrix::Zero(3, 3), b = Matrix::Zero(3, 3);
  r(2, 1) = 1.0;
  r(1, 2) = -1.0;
  b(0, 2) = b(2, 0) = 1.0;
  const auto x0 = AlgebraElement::from_matrix(alg, r);
  const auto h0 = AlgebraElement::from_matrix(alg, b);
  const auto moved = adjoint_action(GroupElement::exp(x0 * std::numbers::pi), h0);
  EXPECT_LT((moved + h0).norm(), 1e-12);
}

TEST(GroupElement, WordsAndInverse) {
  Sl2 s;
  const auto g = GroupElement::word(s.alg, {s.h * 0.3, s.z * 1.1, s.e * -0.4});
  ASSERT_EQ(g.log_factors().size(), 3u);
  const Matrix prod = expm(s.h.matrix() * 0.3) * expm(s.z.matrix() * 1.1) * expm(s.e.matrix() * -0.4);
  EXPECT_LT((g.matrix() - prod).norm(), 1e-12);
  EXPECT_LT(((g * g.inverse()).matrix() - Matrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_NEAR(g.matrix().determinant(), 1.0, 1e-12);
  EXPECT_TRUE(g.has_log_factors());
}

TEST(GroupElement, MixedAlgebrasRejected) {
  Sl2 s;
  auto other = Algebra::parse("so:1,2");
  EXPECT_THROW(bracket(s.h, AlgebraElement::zero(other)), std::exception);
}

TEST(Properties, JacobiAndInvariance) {
  std::mt19937_64 rng(11);
  for (const char* spec : {"sl:3", "so:2,2", "sp:4", "gl:2"}) {
    auto alg = Algebra::parse(spec);
    for (int i = 0; i < 10; ++i) {
      const auto x = ncc::testing::random_element(alg, rng);
      const auto y = ncc::testing::random_element(alg, rng);
      const auto z = ncc::testing::random_element(alg, rng);
      const auto jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
      EXPECT_LT(jac.norm(), 1e-12) << spec;
      EXPECT_NEAR(killing(bracket(x, y), z), -killing(y, bracket(x, z)), 1e-10) << spec;
    }
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ncc/numerics.hpp"

using namespace ncc;

namespace {

std::vector<double> sorted_real(const std::vector<Complex>& ev) {
  std::vector<double> out;
  for (const auto& z : ev) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Tolerances, DefaultsAndOrdering) {
  Tolerances t;
  EXPECT_EQ(t.eq_tol(), 1e-9);
  EXPECT_EQ(t.spec_tol(), 1e-7);
  EXPECT_EQ(t.boundary_band(), 1e-6);
  EXPECT_THROW(Tolerances(1e-6, 1e-9, 1e-3), DomainError);
  EXPECT_THROW(Tolerances(0.0, 1e-9, 1e-3), DomainError);
  EXPECT_THROW(Tolerances(1e-9, 1e-7, 1.0), DomainError);
}

TEST(Eigenvalues, IdentityAndRotation) {
  EXPECT_EQ(sorted_real(eigenvalues(Matrix::Identity(3, 3))), (std::vector<double>{1, 1, 1}));
  Matrix r(2, 2);
  r << 0, -1, 1, 0;
  auto ev = eigenvalues(r);
  ASSERT_EQ(ev.size(), 2u);
  std::vector<double> im{ev[0].imag(), ev[1].imag()};
  std::sort(im.begin(), im.end());
  EXPECT_NEAR(im[0], -1.0, 1e-12);
  EXPECT_NEAR(im[1], 1.0, 1e-12);
  EXPECT_NEAR(spectral_radius(r), 1.0, 1e-12);
}

TEST(Eigenvalues, AdHOnSl2) {
  // basis {h, e, f}: [h, e] = e, [h, f] = -f
  Matrix ad = Matrix::Zero(3, 3);
  ad(1, 1) = 1.0;
  ad(2, 2) = -1.0;
  const auto v = sorted_real(eigenvalues(ad));
  EXPECT_NEAR(v[0], -1.0, 1e-12);
  EXPECT_NEAR(v[1], 0.0, 1e-12);
  EXPECT_NEAR(v[2], 1.0, 1e-12);
}

TEST(Expm, ClosedForms) {
  EXPECT_TRUE(expm(Matrix::Zero(3, 3)).isApprox(Matrix::Identity(3, 3)));
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = -1;
  const Matrix ed = expm(d);
  EXPECT_NEAR(ed(0, 0), std::exp(1.0), 1e-13);
  EXPECT_NEAR(ed(1, 1), std::exp(-1.0), 1e-13);

  Matrix r(2, 2);
  r << 0, -1, 1, 0;
  for (double t : {0.3, 1.7, -2.9, 10.0}) {
    Matrix expected(2, 2);
    expected << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    EXPECT_LT((expm(r * t) - expected).norm(), 1e-12) << t;
  }

  Matrix n = Matrix::Zero(3, 3);
  n(0, 1) = 2.0;
  n(1, 2) = 3.0;
  Matrix series = Matrix::Identity(3, 3) + n + 0.5 * n * n;
  EXPECT_LT((expm(n) - series).norm(), 1e-13);
}

TEST(Expm, RejectsNonFinite) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(expm(a), DomainError);
  EXPECT_THROW(expm(Matrix::Zero(2, 3)), DimensionError);
}

TEST(IsInvertible, Basic) {
  EXPECT_TRUE(is_invertible(Matrix::Identity(4, 4)));
  EXPECT_FALSE(is_invertible(Matrix::Zero(3, 3)));
  Matrix b(1, 1);
  const double x = 2.0, y = -0.5;  // xy = -1: Bergman operator (1 + xy)^2 vanishes
  b(0, 0) = (1 + x * y) * (1 + x * y);
  EXPECT_FALSE(is_invertible(b));
  // relative criterion: scaling does not change the verdict
  EXPECT_TRUE(is_invertible(Matrix::Identity(2, 2) * 1e-12));
}

TEST(ClassifySpectrum, SnapsOntoTargets) {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = 1.0 + 1e-10;
  a(2, 2) = -1.0;
  const auto v = classify_spectrum(a, {-1.0, 0.0, 1.0}, Tolerances{});
  std::vector<double> sorted(v);
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<double>{-1.0, 0.0, 1.0}));
  a(1, 1) = 0.5;
  EXPECT_THROW(classify_spectrum(a, {-1.0, 0.0, 1.0}, Tolerances{}), NumericError);
}

TEST(PseudoInverse, MoorePenroseIdentities) {
  Matrix a(3, 2);
  a << 1, 2, 2, 4, 0, 1;
  const Matrix p = pseudo_inverse(a);
  EXPECT_LT((a * p * a - a).norm(), 1e-12);
  EXPECT_LT((p * a * p - p).norm(), 1e-12);
  EXPECT_EQ(numerical_rank(a, 1e-12), 2);
  Matrix s(2, 2);
  s << 1, 2, 2, 4;
  EXPECT_EQ(numerical_rank(s, 1e-12), 1);
}

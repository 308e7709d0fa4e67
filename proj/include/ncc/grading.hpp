#ifndef NCC_GRADING_HPP
#define NCC_GRADING_HPP

#include <array>
#include <string_view>
#include <vector>

#include "ncc/lie_core.hpp"

namespace ncc {

/// Euler element test: ad x is diagonalizable with spectrum in {-1, 0, 1}
/// and not zero. Diagonalizability is certified by (ad x)^3 = ad x.
bool check_euler(const AlgebraElement& x, const Tolerances& tol = {});

/// Spectral projectors of ad h onto g_{-1}, g_0, g_{+1} (coordinate space).
struct GradingData {
  AlgebraElement h;
  Matrix p_minus;
  Matrix p_zero;
  Matrix p_plus;
  std::array<int, 3> dims{};  // dim g_{-1}, dim g_0, dim g_{+1}
};

GradingData grading_projectors(const AlgebraElement& h, const Tolerances& tol = {});

/// A linear subspace of g, stored as a coordinate projector together with a
/// basis that is orthonormal for the trace form tr(x^T y).
class Subspace {
 public:
  Subspace() = default;
  Subspace(AlgebraPtr alg, Matrix projector, const Tolerances& tol);

  int dim() const { return static_cast<int>(basis_.size()); }
  const Matrix& projector() const { return projector_; }
  const std::vector<AlgebraElement>& basis() const { return basis_; }
  /// Columns are the coordinate vectors of basis().
  const Matrix& basis_coords() const { return basis_coords_; }

  AlgebraElement project(const AlgebraElement& x) const;
  /// Relative Frobenius distance of x from the subspace.
  double residual(const AlgebraElement& x) const;
  bool contains(const AlgebraElement& x, double tol) const { return residual(x) < tol; }

  /// Element from coordinates in the orthonormal basis.
  AlgebraElement element(const Vector& local) const;
  /// Coordinates of x (assumed in the subspace) in the orthonormal basis.
  Vector local_coords(const AlgebraElement& x) const;

 private:
  AlgebraPtr alg_;
  Matrix projector_;
  std::vector<AlgebraElement> basis_;
  Matrix basis_coords_;
  Matrix basis_pinv_;
};

/// Cartan involution theta(x) = -x^T, the involution tau_h = I - 2 (ad h)^2,
/// tau = tau_h theta, and the subspaces they cut out.
struct SymmetricStructure {
  GradingData grading;
  Matrix theta;  // coordinate matrices
  Matrix tau_h;
  Matrix tau;

  Subspace g_minus, g_zero, g_plus;
  Subspace h_alg, q, k, p;
  Subspace h_k, h_p, q_k, q_p;

  const AlgebraElement& h() const { return grading.h; }
  const AlgebraPtr& algebra() const { return grading.h.algebra(); }
  AlgebraElement apply_theta(const AlgebraElement& x) const;
  AlgebraElement apply_tau_h(const AlgebraElement& x) const;
  AlgebraElement apply_tau(const AlgebraElement& x) const;
};

/// Requires check_euler(h) and theta(h) = -h (h symmetric).
SymmetricStructure symmetric_structure(const AlgebraElement& h, const Tolerances& tol = {});

/// Canonical Euler elements by label:
///  - sl_n, gl_n: "h1" ... "h{n-1}" = diag((n-j)/n 1_j, -j/n 1_{n-j})
///  - so(p,q): "boost" (alias "h1"): E_{0p} + E_{p0}; "hn" when p = q:
///    half the sum of the boosts E_{i,p+i} + E_{p+i,i}
///  - sp_{2n}: "hn" = diag(1_n, -1_n) / 2
/// "h" selects the first available label of the family.
AlgebraElement euler_element(const AlgebraPtr& alg, std::string_view label);

/// gl_n Euler element diag(lambda 1_j, (lambda - 1) 1_{n-j}).
AlgebraElement gl_euler(const AlgebraPtr& alg, int j, double lambda);

}  // namespace ncc

#endif  // NCC_GRADING_HPP

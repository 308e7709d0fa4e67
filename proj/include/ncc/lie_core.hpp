#ifndef NCC_LIE_CORE_HPP
#define NCC_LIE_CORE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncc/numerics.hpp"

namespace ncc {

enum class Family { sl, gl, so_pq, sp };

std::string to_string(Family f);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A real matrix Lie algebra given by a fixed ordered basis of its defining
/// representation.
///
/// Canonical bases:
///  - sl_n: E_ii - E_{i+1,i+1} (i < n-1), then E_ij for i != j in row-major order
///  - gl_n: E_ij in row-major order
///  - so(p,q): for i < j, E_ij - E_ji when i, j lie in the same signature
///    block and E_ij + E_ji otherwise; metric I_{p,q} = diag(1_p, -1_q)
///  - sp_{2n}: [[A, 0], [0, -A^T]] for A = E_ij, then [[0, S], [0, 0]] and
///    [[0, 0], [S, 0]] for the symmetric units S = E_ii, E_ij + E_ji
///
/// On construction the basis is checked for linear independence and closure
/// under the commutator; both checks use eq_tol.
class Algebra {
 public:
  static AlgebraPtr build(Family family, std::vector<int> params, const Tolerances& tol = {});
  /// Parses "sl:2", "gl:2", "so:1,2", "sp:4".
  static AlgebraPtr parse(std::string_view spec, const Tolerances& tol = {});

  Family family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  int defining_dim() const { return defining_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const std::string& name() const { return name_; }
  const Tolerances& tolerances() const { return tol_; }

  /// Coordinates of a defining-representation matrix. Throws ConsistencyError
  /// when the relative residual exceeds eq_tol.
  Vector coordinates(const Matrix& m) const;
  /// Relative distance of `m` from the span of the basis.
  double span_residual(const Matrix& m) const;
  Matrix matrix_of(const Vector& coords) const;

  /// ad of the i-th basis element, in basis coordinates.
  const Matrix& ad_basis(int i) const { return ad_basis_[static_cast<std::size_t>(i)]; }
  /// Gram matrix of the Killing form on the basis.
  const Matrix& killing_gram() const { return killing_gram_; }

 private:
  Algebra(Family family, std::vector<int> params, const Tolerances& tol);
  void make_basis();
  void finalize();

  Family family_;
  std::vector<int> params_;
  int defining_dim_ = 0;
  std::string name_;
  Tolerances tol_;
  std::vector<Matrix> basis_;
  Matrix flat_;       // columns are vec(basis_i)
  Matrix flat_pinv_;  // pseudo-inverse of flat_
  std::vector<Matrix> ad_basis_;
  Matrix killing_gram_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement from_coords(AlgebraPtr alg, Vector coords);
  static AlgebraElement from_matrix(AlgebraPtr alg, const Matrix& m);
  static AlgebraElement zero(AlgebraPtr alg);
  static AlgebraElement basis(AlgebraPtr alg, int i);

  const AlgebraPtr& algebra() const { return alg_; }
  const Vector& coords() const { return coords_; }
  const Matrix& matrix() const { return matrix_; }
  /// Frobenius norm of the defining matrix.
  double norm() const { return matrix_.norm(); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(double s) const;
  friend AlgebraElement operator*(double s, const AlgebraElement& x) { return x * s; }

 private:
  AlgebraElement(AlgebraPtr alg, Vector coords, Matrix m)
      : alg_(std::move(alg)), coords_(std::move(coords)), matrix_(std::move(m)) {}

  AlgebraPtr alg_;
  Vector coords_;
  Matrix matrix_;
};

void require_same_algebra(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
Matrix ad_matrix(const AlgebraElement& x);
double killing(const AlgebraElement& x, const AlgebraElement& y);

/// An element of the identity component, kept as the ordered product of
/// exponentials that produced it.
class GroupElement {
 public:
  static GroupElement identity(AlgebraPtr alg);
  static GroupElement exp(const AlgebraElement& x);
  /// Product exp(xs[0]) exp(xs[1]) ...
  static GroupElement word(AlgebraPtr alg, const std::vector<AlgebraElement>& xs);
  /// Wraps a matrix produced by a factorization of a group element. The caller
  /// vouches for membership; no log factors are recorded.
  static GroupElement from_factorization(AlgebraPtr alg, Matrix m);

  const AlgebraPtr& algebra() const { return alg_; }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<AlgebraElement>& log_factors() const { return factors_; }
  bool has_log_factors() const { return has_factors_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;

 private:
  GroupElement(AlgebraPtr alg, Matrix m, std::vector<AlgebraElement> f, bool has)
      : alg_(std::move(alg)), matrix_(std::move(m)), factors_(std::move(f)), has_factors_(has) {}

  AlgebraPtr alg_;
  Matrix matrix_;
  std::vector<AlgebraElement> factors_;
  bool has_factors_ = true;
};

/// Ad(g)x = g x g^{-1}.
AlgebraElement adjoint_action(const GroupElement& g, const AlgebraElement& x);

/// The matrix of Ad(g) on basis coordinates.
Matrix adjoint_matrix(const GroupElement& g);

}  // namespace ncc

#endif  // NCC_LIE_CORE_HPP

#include "ncc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

namespace ncc {

Tolerances::Tolerances(double eq_tol, double spec_tol, double boundary_band)
    : eq_tol_(eq_tol), spec_tol_(spec_tol), boundary_band_(boundary_band) {
  if (!(eq_tol > 0.0 && eq_tol <= spec_tol && spec_tol <= boundary_band &&
        boundary_band < 1.0)) {
    throw DomainError("tolerances must satisfy 0 < eq_tol <= spec_tol <= band < 1");
  }
}

void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) {
    throw DomainError(std::string(what) + ": non-finite entry");
  }
}

namespace {

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError(std::string(what) + ": matrix must be square and non-empty");
  }
}

}  // namespace

std::vector<Complex> eigenvalues(const Matrix& a) {
  require_square(a, "eigenvalues");
  require_finite(a, "eigenvalues");
  // Hessenberg reduction followed by shifted QR on the real Schur form.
  Eigen::EigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigenvalues: QR iteration did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double spectral_radius(const Matrix& a) {
  double r = 0.0;
  for (const auto& ev : eigenvalues(a)) r = std::max(r, std::abs(ev));
  return r;
}

bool has_full_rank(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  const auto n = a.rows();
  return numerical_rank(a, static_cast<double>(n) * std::numeric_limits<double>::epsilon()) == n;
}

Matrix expm(const Matrix& a) {
  require_square(a, "expm");
  require_finite(a, "expm");
  // Eigen's implementation is Higham's scaling and squaring with Pade(13).
  Matrix out = a.exp();
  return out;
}

bool is_invertible(const Matrix& a, const Tolerances& tol) {
  require_square(a, "is_invertible");
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (smax == 0.0) return false;
  return smin > tol.eq_tol() * smax;
}

std::vector<double> classify_spectrum(const Matrix& a,
                                      const std::vector<double>& targets,
                                      const Tolerances& tol) {
  std::vector<double> out;
  for (const auto& ev : eigenvalues(a)) {
    auto it = std::find_if(targets.begin(), targets.end(), [&](double v) {
      return std::abs(ev - Complex(v, 0.0)) < tol.spec_tol();
    });
    if (it == targets.end()) {
      throw NumericError("classify_spectrum: eigenvalue (" + std::to_string(ev.real()) +
                         ", " + std::to_string(ev.imag()) + ") matches no target");
    }
    out.push_back(*it);
  }
  return out;
}

Matrix pseudo_inverse(const Matrix& a) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  return cod.pseudoInverse();
}

int numerical_rank(const Matrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * std::max(1.0, s(0))) ++r;
  }
  return r;
}

}  // namespace ncc

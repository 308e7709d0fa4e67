#ifndef NCC_NUMERICS_HPP
#define NCC_NUMERICS_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ncc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Error taxonomy shared by all modules.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thresholds used throughout the library.
///
/// eq_tol decides "equals zero", spec_tol snaps eigenvalues onto target
/// values, boundary_band is the shell excluded around cone and ball
/// boundaries. Construction enforces 0 < eq_tol <= spec_tol <= band < 1.
class Tolerances {
 public:
  Tolerances() = default;
  Tolerances(double eq_tol, double spec_tol, double boundary_band);

  double eq_tol() const { return eq_tol_; }
  double spec_tol() const { return spec_tol_; }
  double boundary_band() const { return boundary_band_; }

 private:
  double eq_tol_ = 1e-9;
  double spec_tol_ = 1e-7;
  double boundary_band_ = 1e-6;
};

/// Throws DomainError when any entry is NaN or infinite.
void require_finite(const Matrix& a, const char* what);

std::vector<Complex> eigenvalues(const Matrix& a);

/// Largest modulus over the spectrum.
double spectral_radius(const Matrix& a);

Matrix expm(const Matrix& a);

/// Smallest singular value exceeds eq_tol times the largest.
bool is_invertible(const Matrix& a, const Tolerances& tol = {});

/// Snaps every eigenvalue of `a` onto one of `targets` (within spec_tol).
/// Throws NumericError when an eigenvalue matches no target.
std::vector<double> classify_spectrum(const Matrix& a,
                                      const std::vector<double>& targets,
                                      const Tolerances& tol = {});

/// Moore-Penrose pseudo-inverse via complete orthogonal decomposition.
Matrix pseudo_inverse(const Matrix& a);

/// Numerical rank with relative threshold.
int numerical_rank(const Matrix& a, double rel_tol);

/// Full rank at machine precision (threshold n * epsilon). Group elements are
/// validated with this rather than eq_tol: det-1 matrices near the edge of the
/// Bruhat cell are legitimately ill-conditioned.
bool has_full_rank(const Matrix& a);

}  // namespace ncc

#endif  // NCC_NUMERICS_HPP

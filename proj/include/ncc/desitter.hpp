#ifndef NCC_DESITTER_HPP
#define NCC_DESITTER_HPP

#include <complex>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncc/numerics.hpp"

namespace ncc {

/// A vector of R^{1,d}, components x_0, ..., x_d.
class MinkowskiVector {
 public:
  MinkowskiVector() = default;
  explicit MinkowskiVector(Vector x);
  MinkowskiVector(std::initializer_list<double> xs);
  static MinkowskiVector basis(int d, int i);

  int d() const { return static_cast<int>(x_.size()) - 1; }
  const Vector& components() const { return x_; }
  double operator[](int i) const { return x_(i); }

  MinkowskiVector operator+(const MinkowskiVector& o) const;
  MinkowskiVector operator-(const MinkowskiVector& o) const;
  MinkowskiVector operator*(double s) const;

 private:
  Vector x_;
};

double lorentz_form(const MinkowskiVector& x, const MinkowskiVector& y);

/// A point of dS^d = { beta(x, x) = -1 }.
class DSPoint {
 public:
  /// Throws DomainError when beta(x, x) + 1 exceeds eq_tol (relative to |x|^2).
  explicit DSPoint(MinkowskiVector v, const Tolerances& tol = {});
  /// Rescales the spatial part so that the point lies on dS^d.
  static DSPoint normalized(const MinkowskiVector& v);

  const MinkowskiVector& vector() const { return v_; }
  int d() const { return v_.d(); }
  double operator[](int i) const { return v_[i]; }

 private:
  MinkowskiVector v_;
};

/// z = x + i y in C^{1+d}.
struct ComplexPoint {
  Eigen::VectorXcd z;
  int d() const { return static_cast<int>(z.size()) - 1; }
  static ComplexPoint from_real(const MinkowskiVector& x);
};

enum class Verdict { inside, outside, boundary };
const char* to_string(Verdict v);

/// Closed forward-cone order: y - x future-directed causal (with eq_tol slack).
bool causal_leq(const DSPoint& x, const DSPoint& y, const Tolerances& tol = {});

DSPoint boost_flow(double t, const DSPoint& x);

/// gamma(t) = cosh(t) e_1 + sinh(t) e_0.
DSPoint boost_orbit(int d, double t);

/// x_1 > |x_0| with boundary_band; points inside the band are `boundary`.
Verdict wedge_member(const DSPoint& x, const Tolerances& tol = {});

/// Order-convex hull of the boost orbit gamma sampled on an n_grid-point grid
/// of [-t_max, t_max].
bool observer_member(const DSPoint& x, double t_max, int n_grid, const Tolerances& tol = {});

/// cosh(t) x + sinh(t) v for timelike v (beta(v,v) = 1), cos(t) x + sin(t) v
/// for spacelike v (beta(v,v) = -1); beta(x, v) = 0 is required.
DSPoint ds_geodesic(const DSPoint& x, const MinkowskiVector& v, double t,
                    const Tolerances& tol = {});

/// Im z in the open forward light cone (relative eq_tol slack).
bool crown_member(const ComplexPoint& z, const Tolerances& tol = {});

ComplexPoint complex_boost(double t, const ComplexPoint& z);

/// alpha_{it}(x) in the crown for t_k = pi (k + 1/2) / n_grid, k < n_grid.
bool kms_member(const DSPoint& x, int n_grid, const Tolerances& tol = {});

/// z = (i x_0, i x_1, x_2, ..., x_d) with x_0 > |x_1| on the complex quadric.
bool tau_fixed_crown_member(const ComplexPoint& z, const Tolerances& tol = {});

nlohmann::json to_json(const MinkowskiVector& v);
MinkowskiVector minkowski_from_json(const nlohmann::json& j);
/// Complex points are arrays of [re, im] pairs.
nlohmann::json to_json(const ComplexPoint& z);
ComplexPoint complex_from_json(const nlohmann::json& j);

}  // namespace ncc

#endif  // NCC_DESITTER_HPP

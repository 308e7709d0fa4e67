#include "ncc/desitter.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ncc {

MinkowskiVector::MinkowskiVector(Vector x) : x_(std::move(x)) {
  if (x_.size() < 3) throw DimensionError("MinkowskiVector: need d >= 2");
  require_finite(x_, "MinkowskiVector");
}

MinkowskiVector::MinkowskiVector(std::initializer_list<double> xs)
    : MinkowskiVector(Vector(Eigen::Map<const Vector>(xs.begin(), static_cast<Eigen::Index>(xs.size())))) {}

MinkowskiVector MinkowskiVector::basis(int d, int i) {
  Vector x = Vector::Zero(d + 1);
  x(i) = 1.0;
  return MinkowskiVector(std::move(x));
}

MinkowskiVector MinkowskiVector::operator+(const MinkowskiVector& o) const {
  if (d() != o.d()) throw DimensionError("MinkowskiVector: dimension mismatch");
  return MinkowskiVector(Vector(x_ + o.x_));
}
MinkowskiVector MinkowskiVector::operator-(const MinkowskiVector& o) const {
  if (d() != o.d()) throw DimensionError("MinkowskiVector: dimension mismatch");
  return MinkowskiVector(Vector(x_ - o.x_));
}
MinkowskiVector MinkowskiVector::operator*(double s) const { return MinkowskiVector(Vector(x_ * s)); }

double lorentz_form(const MinkowskiVector& x, const MinkowskiVector& y) {
  if (x.d() != y.d()) throw DimensionError("lorentz_form: dimension mismatch");
  const auto& a = x.components();
  const auto& b = y.components();
  return a(0) * b(0) - a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

DSPoint::DSPoint(MinkowskiVector v, const Tolerances& tol) : v_(std::move(v)) {
  const double r = lorentz_form(v_, v_) + 1.0;
  if (std::abs(r) > tol.eq_tol() * std::max(1.0, v_.components().squaredNorm())) {
    throw DomainError("DSPoint: beta(x, x) = " + std::to_string(r - 1.0) + ", expected -1");
  }
}

DSPoint DSPoint::normalized(const MinkowskiVector& v) {
  Vector x = v.components();
  const double spatial = x.tail(x.size() - 1).norm();
  if (spatial == 0.0) throw DomainError("DSPoint::normalized: zero spatial part");
  x.tail(x.size() - 1) *= std::sqrt(1.0 + x(0) * x(0)) / spatial;
  return DSPoint(MinkowskiVector(std::move(x)));
}

ComplexPoint ComplexPoint::from_real(const MinkowskiVector& x) {
  return {x.components().cast<std::complex<double>>()};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::inside: return "inside";
    case Verdict::outside: return "outside";
    case Verdict::boundary: return "boundary";
  }
  return "?";
}

bool causal_leq(const DSPoint& x, const DSPoint& y, const Tolerances& tol) {
  if (x.d() != y.d()) throw DimensionError("causal_leq: dimension mismatch");
  const double v0 = y[0] - x[0];
  // beta(v, v) for v = y - x with both points on dS, without cancellation in v
  const double bvv = -2.0 - 2.0 * lorentz_form(x.vector(), y.vector());
  return v0 >= -tol.eq_tol() && bvv >= -tol.eq_tol();
}

DSPoint boost_flow(double t, const DSPoint& x) {
  Vector v = x.vector().components();
  const double c = std::cosh(t), s = std::sinh(t);
  const double x0 = v(0), x1 = v(1);
  v(0) = c * x0 + s * x1;
  v(1) = c * x1 + s * x0;
  return DSPoint(MinkowskiVector(std::move(v)));
}

DSPoint boost_orbit(int d, double t) {
  Vector v = Vector::Zero(d + 1);
  v(0) = std::sinh(t);
  v(1) = std::cosh(t);
  return DSPoint(MinkowskiVector(std::move(v)));
}

Verdict wedge_member(const DSPoint& x, const Tolerances& tol) {
  const double gap = x[1] - std::abs(x[0]);
  if (gap > tol.boundary_band()) return Verdict::inside;
  if (gap < -tol.boundary_band()) return Verdict::outside;
  return Verdict::boundary;
}

bool observer_member(const DSPoint& x, double t_max, int n_grid, const Tolerances& tol) {
  if (!(t_max > 0.0)) throw PreconditionError("observer_member: t_max must be positive");
  if (n_grid < 2) throw PreconditionError("observer_member: n_grid must be >= 2");
  // {t : gamma(t) <= x} is down-closed and {s : x <= gamma(s)} is up-closed,
  // so it suffices to look at the grid extremes of each set.
  bool below = false, above = false;
  for (int k = 0; k < n_grid && !(below && above); ++k) {
    const double t = -t_max + 2.0 * t_max * k / (n_grid - 1);
    const DSPoint g = boost_orbit(x.d(), t);
    below = below || causal_leq(g, x, tol);
    above = above || causal_leq(x, g, tol);
  }
  return below && above;
}

DSPoint ds_geodesic(const DSPoint& x, const MinkowskiVector& v, double t, const Tolerances& tol) {
  const double bvv = lorentz_form(v, v);
  const double bxv = lorentz_form(x.vector(), v);
  if (std::abs(bxv) > tol.eq_tol()) throw DomainError("ds_geodesic: beta(x, v) != 0");
  if (std::abs(bvv - 1.0) < tol.eq_tol()) {
    return DSPoint(x.vector() * std::cosh(t) + v * std::sinh(t), tol);
  }
  if (std::abs(bvv + 1.0) < tol.eq_tol()) {
    return DSPoint(x.vector() * std::cos(t) + v * std::sin(t), tol);
  }
  throw DomainError("ds_geodesic: beta(v, v) must be +1 or -1");
}

bool crown_member(const ComplexPoint& z, const Tolerances& tol) {
  const Vector y = z.z.imag();
  const double y0sq = y(0) * y(0);
  const double rest = y.tail(y.size() - 1).squaredNorm();
  return y(0) > 0.0 && y0sq - rest > tol.eq_tol() * (y0sq + rest);
}

ComplexPoint complex_boost(double t, const ComplexPoint& z) {
  using namespace std::complex_literals;
  ComplexPoint out = z;
  const double c = std::cos(t), s = std::sin(t);
  out.z(0) = c * z.z(0) + 1i * s * z.z(1);
  out.z(1) = 1i * s * z.z(0) + c * z.z(1);
  return out;
}

bool kms_member(const DSPoint& x, int n_grid, const Tolerances& tol) {
  if (n_grid < 8) throw PreconditionError("kms_member: n_grid must be >= 8");
  const ComplexPoint z = ComplexPoint::from_real(x.vector());
  for (int k = 0; k < n_grid; ++k) {
    const double t = std::numbers::pi * (k + 0.5) / n_grid;
    if (!crown_member(complex_boost(t, z), tol)) return false;
  }
  return true;
}

bool tau_fixed_crown_member(const ComplexPoint& z, const Tolerances& tol) {
  const double eps = tol.eq_tol();
  const Eigen::VectorXcd& w = z.z;
  if (std::abs(w(0).real()) > eps || std::abs(w(1).real()) > eps) return false;
  for (Eigen::Index j = 2; j < w.size(); ++j) {
    if (std::abs(w(j).imag()) > eps) return false;
  }
  const double x0 = w(0).imag(), x1 = w(1).imag();
  if (!(x0 > std::abs(x1))) return false;
  double q = -x0 * x0 + x1 * x1;
  for (Eigen::Index j = 2; j < w.size(); ++j) q -= w(j).real() * w(j).real();
  return std::abs(q + 1.0) < eps * std::max(1.0, x0 * x0);
}

nlohmann::json to_json(const MinkowskiVector& v) {
  const auto& x = v.components();
  return std::vector<double>(x.data(), x.data() + x.size());
}

MinkowskiVector minkowski_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("point must be a JSON array");
  const auto xs = j.get<std::vector<double>>();
  return MinkowskiVector(Vector(Eigen::Map<const Vector>(xs.data(), static_cast<Eigen::Index>(xs.size()))));
}

nlohmann::json to_json(const ComplexPoint& z) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < z.z.size(); ++i) out.push_back({z.z(i).real(), z.z(i).imag()});
  return out;
}

ComplexPoint complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() < 3) throw DomainError("complex point must be an array of >= 3 pairs");
  ComplexPoint z{Eigen::VectorXcd(static_cast<Eigen::Index>(j.size()))};
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& p = j[i];
    if (p.is_number()) {
      z.z(static_cast<Eigen::Index>(i)) = p.get<double>();
    } else {
      z.z(static_cast<Eigen::Index>(i)) = {p.at(0).get<double>(), p.at(1).get<double>()};
    }
  }
  return z;
}

}  // namespace ncc

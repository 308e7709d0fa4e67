#include "ncc/cones.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

namespace ncc {

std::string to_string(ConeKind k) {
  switch (k) {
    case ConeKind::sampled: return "sampled";
    case ConeKind::lorentz: return "lorentz";
    case ConeKind::gl2_cm: return "gl2_cm";
  }
  return "?";
}

double twisted_norm(const SymmetricStructure& s, const AlgebraElement& x) {
  const double v = -killing(x, s.apply_theta(x));
  return std::sqrt(std::max(0.0, v));
}

namespace {

Matrix q_gram(const SymmetricStructure& s) {
  const Matrix& b = s.q.basis_coords();
  return b.transpose() * s.algebra()->killing_gram() * b;
}

bool is_lorentzian(const SymmetricStructure& s, const Tolerances& tol) {
  if (s.q.dim() < 2) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(q_gram(s));
  const auto& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  int pos = 0;
  int neg = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > tol.spec_tol() * scale) ++pos;
    else if (ev(i) < -tol.spec_tol() * scale) ++neg;
  }
  return pos == 1 && neg == s.q.dim() - 1 && killing(s.h(), s.h()) > 0.0;
}

}  // namespace

ConeModel build_cone(const StructurePtr& structure, int sample_count, std::uint64_t seed,
                     const Tolerances& tol) {
  if (sample_count < 1) throw DomainError("build_cone: sample_count must be positive");
  const SymmetricStructure& s = *structure;
  if (s.algebra()->family() == Family::gl) {
    throw DomainError("build_cone: Killing form of gl_n is degenerate; use build_gl2_cone");
  }
  ConeModel cone;
  cone.structure = structure;
  cone.sample_count = sample_count;
  cone.seed = seed;
  cone.tol = tol;
  cone.margin = tol.eq_tol();

  const AlgebraElement& h = s.h();
  cone.orbit_samples.push_back(h);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-cone.box_radius, cone.box_radius);
  for (int i = 1; i < sample_count; ++i) {
    Vector local(s.h_alg.dim());
    for (Eigen::Index j = 0; j < local.size(); ++j) local(j) = box(rng);
    const AlgebraElement y = s.h_alg.element(local);
    const AlgebraElement sample =
        AlgebraElement::from_coords(h.algebra(), expm(ad_matrix(y)) * h.coords());
    if (s.q.residual(sample) > tol.eq_tol()) {
      throw ConsistencyError("build_cone: orbit sample left q");
    }
    cone.orbit_samples.push_back(sample);
  }

  if (is_lorentzian(s, tol)) {
    cone.kind = ConeKind::lorentz;
    const double nh = std::sqrt(killing(h, h));
    for (const auto& w : s.q_k.basis()) {
      const double nw = std::sqrt(-killing(w, w));
      cone.exact_generators.push_back(h + w * (nh / nw));
      cone.exact_generators.push_back(h - w * (nh / nw));
    }
  }
  return cone;
}

ConeModel build_gl2_cone(const StructurePtr& structure, double m, const Tolerances& tol) {
  const auto& alg = structure->algebra();
  if (alg->family() != Family::gl || alg->defining_dim() != 2) {
    throw DomainError("build_gl2_cone: algebra must be gl_2");
  }
  if (!(m >= 0.0)) throw DomainError("build_gl2_cone: m must be non-negative");
  ConeModel cone;
  cone.structure = structure;
  cone.kind = ConeKind::gl2_cm;
  cone.m = m;
  cone.tol = tol;
  cone.margin = tol.eq_tol();
  Matrix hs_plus_z(2, 2), hs_minus_z(2, 2);
  hs_plus_z << 0.5, -0.5, 0.5, -0.5;
  hs_minus_z << 0.5, 0.5, -0.5, -0.5;
  cone.exact_generators = {AlgebraElement::from_matrix(alg, hs_plus_z),
                           AlgebraElement::from_matrix(alg, hs_minus_z)};
  return cone;
}

Eigen::Vector3d gl2_cone_coords(const AlgebraElement& x) {
  // Columns: vec(1), vec(h_s + z), vec(h_s - z) in column-major order.
  Eigen::Matrix<double, 4, 3> b;
  b << 1.0, 0.5, 0.5,
       0.0, 0.5, -0.5,
       0.0, -0.5, 0.5,
       1.0, -0.5, -0.5;
  const Eigen::Vector4d v(x.matrix()(0, 0), x.matrix()(1, 0), x.matrix()(0, 1), x.matrix()(1, 1));
  const Eigen::Vector3d c = b.colPivHouseholderQr().solve(v);
  if ((b * c - v).norm() > 1e-9 * std::max(1.0, v.norm())) {
    throw DomainError("gl2_cone_coords: element is not in q");
  }
  return c;
}

bool in_max_cone(const AlgebraElement& x, const ConeModel& cone, bool interior) {
  const SymmetricStructure& s = *cone.structure;
  if (s.q.residual(x) > cone.tol.eq_tol()) throw DomainError("in_max_cone: x is not in q");
  const double eps = cone.tol.eq_tol();

  switch (cone.kind) {
    case ConeKind::gl2_cm: {
      const Eigen::Vector3d c = gl2_cone_coords(x);
      const double quad = c(1) * c(2) - cone.m * c(0) * c(0);
      const double scale = c.squaredNorm();
      if (interior) return c(1) > 0.0 && c(2) > 0.0 && quad > cone.margin * scale;
      return c(1) >= -eps * std::sqrt(scale) && c(2) >= -eps * std::sqrt(scale) &&
             quad >= -eps * scale;
    }
    case ConeKind::lorentz: {
      const double nx = twisted_norm(s, x);
      const double quad = killing(x, x);
      const double lin = killing(x, s.h());
      if (interior) return quad > cone.margin * nx * nx && lin > 0.0;
      return quad >= -eps * nx * nx && lin >= -eps * nx * twisted_norm(s, s.h());
    }
    case ConeKind::sampled: {
      const double nx = twisted_norm(s, x);
      for (const auto& smp : cone.orbit_samples) {
        const double v = killing(smp, x);
        const double scale = twisted_norm(s, smp) * nx;
        if (interior ? !(v > cone.margin * scale) : v < -eps * scale) return false;
      }
      return true;
    }
  }
  return false;
}

bool in_tube(const AlgebraElement& x, const ConeModel& cone) {
  return in_max_cone(cone.structure->q.project(x), cone, /*interior=*/true);
}

bool positivity_member(const GroupElement& g, const ConeModel& cone) {
  if (!has_full_rank(g.matrix())) throw DomainError("positivity_member: singular g");
  return in_tube(adjoint_action(g.inverse(), cone.structure->h()), cone);
}

bool omega_member(const AlgebraElement& x, const SymmetricStructure& s, const Tolerances& tol) {
  if (s.q_k.residual(x) >= tol.eq_tol()) return false;
  return spectral_radius(ad_matrix(x)) < std::numbers::pi / 2.0 - tol.boundary_band();
}

CausalEulerReport check_causal_euler(const SymmetricStructure& s, const ConeModel& cone) {
  return check_causal_euler(s.h(), s, cone);
}

CausalEulerReport check_causal_euler(const AlgebraElement& candidate, const SymmetricStructure& s,
                                     const ConeModel& cone) {
  CausalEulerReport r;
  const double scale = std::max(1.0, candidate.norm());
  r.theta_residual = (s.apply_theta(candidate) + candidate).norm() / scale;
  r.theta_h_is_minus_h = r.theta_residual < cone.tol.eq_tol();

  const Matrix a = ad_matrix(candidate);
  const Matrix id = Matrix::Identity(a.rows(), a.cols());
  const Matrix tau = (id - 2.0 * a * a) * s.theta;
  r.tau_residual = (tau - s.tau).norm() / std::max(1.0, s.tau.norm());
  r.tau_is_tau_h_theta = r.tau_residual < cone.tol.eq_tol();

  r.h_in_interior =
      s.q.residual(candidate) < cone.tol.eq_tol() && in_max_cone(candidate, cone, true);
  return r;
}

std::string CausalEulerReport::to_json() const {
  nlohmann::json j;
  j["h_in_interior"] = h_in_interior ? "pass" : "fail";
  j["theta_h_is_minus_h"] = theta_h_is_minus_h ? "pass" : "fail";
  j["tau_is_tau_h_theta"] = tau_is_tau_h_theta ? "pass" : "fail";
  j["residuals"] = {{"theta", theta_residual}, {"tau", tau_residual}};
  return j.dump();
}

}  // namespace ncc

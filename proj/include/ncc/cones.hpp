#ifndef NCC_CONES_HPP
#define NCC_CONES_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ncc/grading.hpp"

namespace ncc {

using StructurePtr = std::shared_ptr<const SymmetricStructure>;

inline StructurePtr make_structure(const AlgebraElement& h, const Tolerances& tol = {}) {
  return std::make_shared<const SymmetricStructure>(symmetric_structure(h, tol));
}

enum class ConeKind {
  sampled,  // dual of finitely many orbit points Ad(H_e) h
  lorentz,  // kappa restricted to q has signature (1, n-1): exact light cone around h
  gl2_cm,   // the gl_2 cone family C_m given by its defining inequalities
};

std::string to_string(ConeKind k);

/// The causal cone in q together with the data powering membership tests.
///
/// For `sampled` models membership in C_q^max is tested against the dual
/// constraints kappa(s, .) >= 0 of the orbit samples; this is a superset of
/// the true cone near its boundary. `lorentz` models are exact.
struct ConeModel {
  StructurePtr structure;
  ConeKind kind = ConeKind::sampled;
  std::vector<AlgebraElement> orbit_samples;
  std::vector<AlgebraElement> exact_generators;
  int sample_count = 0;
  std::uint64_t seed = 0;
  double margin = 1e-9;
  double box_radius = 3.0;
  double m = 0.0;  // gl2_cm only
  Tolerances tol;
};

/// Samples e^{ad y} h for y uniform in the box [-R, R]^{dim h} (orthonormal
/// coordinates of h). Switches to the exact Lorentz model when kappa on q has
/// Lorentzian signature.
ConeModel build_cone(const StructurePtr& structure, int sample_count = 512, std::uint64_t seed = 0,
                     const Tolerances& tol = {});

/// C_m = { x0 1 + x1 (h_s + z) + x_{-1} (h_s - z) : x1 x_{-1} - m x0^2 >= 0, x_{+-1} >= 0 }
/// in q for gl_2 with any Euler element h = diag(lambda, lambda - 1).
ConeModel build_gl2_cone(const StructurePtr& structure, double m, const Tolerances& tol = {});

/// Theta-twisted norm sqrt(-kappa(x, theta x)).
double twisted_norm(const SymmetricStructure& s, const AlgebraElement& x);

/// (x0, x1, x_{-1}) coordinates of an element of q for gl_2.
Eigen::Vector3d gl2_cone_coords(const AlgebraElement& x);

bool in_max_cone(const AlgebraElement& x, const ConeModel& cone, bool interior);
bool in_tube(const AlgebraElement& x, const ConeModel& cone);
bool positivity_member(const GroupElement& g, const ConeModel& cone);
bool omega_member(const AlgebraElement& x, const SymmetricStructure& s, const Tolerances& tol = {});

struct CausalEulerReport {
  bool h_in_interior = false;
  bool theta_h_is_minus_h = false;
  bool tau_is_tau_h_theta = false;
  double theta_residual = 0.0;
  double tau_residual = 0.0;
  bool all_pass() const { return h_in_interior && theta_h_is_minus_h && tau_is_tau_h_theta; }
  std::string to_json() const;
};

CausalEulerReport check_causal_euler(const SymmetricStructure& s, const ConeModel& cone);
/// Same checks for a candidate element in place of the structure's h.
CausalEulerReport check_causal_euler(const AlgebraElement& candidate, const SymmetricStructure& s,
                                     const ConeModel& cone);

}  // namespace ncc

#endif  // NCC_CONES_HPP

#ifndef NCC_FLOWS_HPP
#define NCC_FLOWS_HPP

#include <optional>
#include <string>

#include "ncc/cones.hpp"

namespace ncc {

/// The point gH of M = G/H.
struct CosetPoint {
  GroupElement representative;
  StructurePtr structure;
};

CosetPoint base_point(const StructurePtr& s);

/// exp(t h) g H.
CosetPoint modular_flow(double t, const CosetPoint& p);

/// Exp_{eH}(x) = exp(x) H for x in q.
CosetPoint exp_map(const AlgebraElement& x, const StructurePtr& s);

enum class OrbitKind { causal_geodesic, fixed_point, non_geodesic_orbit };
std::string to_string(OrbitKind k);

OrbitKind geodesic_orbit_test(const CosetPoint& p, const ConeModel& cone);

/// Ad(g)^{-1} x lies in q.
bool in_M_x(const CosetPoint& p, const AlgebraElement& x);

/// t -> exp(tx) H is a geodesic iff [x, tau x] = 0.
bool geodesic_check(const AlgebraElement& x, const SymmetricStructure& s);

/// Quotient chart for the explicit models: sl_2 (Ad(g) of the generator of h),
/// so(1,d) with the boost (g e_1), gl_2 (g I_{1,-1} g^T). Absent otherwise.
std::optional<Vector> coset_chart(const CosetPoint& p);

/// Equality of cosets decided in the quotient chart; absent without a chart.
std::optional<bool> same_point(const CosetPoint& a, const CosetPoint& b, double tol = 1e-9);

struct WedgeWitness {
  GroupElement g0;   // exp(a h), in G^h_e
  AlgebraElement x;  // in Omega_{q_k}
  int iterations = 0;
  double residual = 0.0;
};

/// Solves p = g0 Exp_{eH}(x) with g0 = exp(a h) and x in q_k by damped
/// Gauss-Newton in the quotient chart. Absent when the solver fails or the
/// solution leaves Omega_{q_k}. Throws PreconditionError when p is not in the
/// positivity domain.
std::optional<WedgeWitness> wedge_factor_witness(const CosetPoint& p, const ConeModel& cone);

/// Finds k = exp(y), y in g_0, with k.a = b in the quotient chart.
std::optional<GroupElement> centralizer_translation(const CosetPoint& a, const CosetPoint& b);

}  // namespace ncc

#endif  // NCC_FLOWS_HPP

#include "ncc/flows.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace ncc {

CosetPoint base_point(const StructurePtr& s) { return {GroupElement::identity(s->algebra()), s}; }

CosetPoint modular_flow(double t, const CosetPoint& p) {
  return {GroupElement::exp(p.structure->h() * t) * p.representative, p.structure};
}

CosetPoint exp_map(const AlgebraElement& x, const StructurePtr& s) {
  if (s->q.residual(x) > s->algebra()->tolerances().eq_tol()) {
    throw DomainError("exp_map: x is not in q");
  }
  return {GroupElement::exp(x), s};
}

std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::causal_geodesic: return "causal_geodesic";
    case OrbitKind::fixed_point: return "fixed_point";
    case OrbitKind::non_geodesic_orbit: return "non_geodesic_orbit";
  }
  return "?";
}

bool geodesic_check(const AlgebraElement& x, const SymmetricStructure& s) {
  const AlgebraElement c = bracket(x, s.apply_tau(x));
  return c.norm() < s.algebra()->tolerances().eq_tol() * std::max(1.0, x.norm() * x.norm());
}

OrbitKind geodesic_orbit_test(const CosetPoint& p, const ConeModel& cone) {
  const SymmetricStructure& s = *p.structure;
  const double eps = s.algebra()->tolerances().eq_tol();
  const AlgebraElement x = adjoint_action(p.representative.inverse(), s.h());
  if (s.q.residual(x) < eps && in_max_cone(s.q.project(x), cone, true)) {
    return OrbitKind::causal_geodesic;
  }
  if (s.h_alg.residual(x) < eps) return OrbitKind::fixed_point;
  return OrbitKind::non_geodesic_orbit;
}

bool in_M_x(const CosetPoint& p, const AlgebraElement& x) {
  const SymmetricStructure& s = *p.structure;
  const AlgebraElement y = adjoint_action(p.representative.inverse(), x);
  return s.q.residual(y) < s.algebra()->tolerances().eq_tol();
}

// ---------------------------------------------------------------------------

namespace {

enum class Chart { none, sl2, so1d, gl2 };

Chart chart_kind(const SymmetricStructure& s) {
  const auto& alg = *s.algebra();
  const int n = alg.defining_dim();
  if (alg.family() == Family::sl && n == 2) return Chart::sl2;
  if (alg.family() == Family::gl && n == 2) return Chart::gl2;
  if (alg.family() == Family::so_pq && alg.params()[0] == 1) {
    // boost generator in the (0, 1) plane
    Matrix b = Matrix::Zero(n, n);
    b(0, 1) = b(1, 0) = 1.0;
    if ((s.h().matrix() - b).norm() < 1e-12) return Chart::so1d;
  }
  return Chart::none;
}

Vector chart_of(Chart kind, const SymmetricStructure& s, const Matrix& g) {
  switch (kind) {
    case Chart::sl2: {
      const Matrix& w = s.h_alg.basis().front().matrix();
      const Matrix m = g * w * g.inverse();
      return Eigen::Map<const Vector>(m.data(), m.size());
    }
    case Chart::so1d: return g.col(1);
    case Chart::gl2: {
      Matrix i11 = Matrix::Zero(2, 2);
      i11(0, 0) = 1.0;
      i11(1, 1) = -1.0;
      const Matrix m = g * i11 * g.transpose();
      return Eigen::Map<const Vector>(m.data(), m.size());
    }
    case Chart::none: break;
  }
  return {};
}

struct GaussNewtonResult {
  Vector params;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Damped Gauss-Newton with central-difference Jacobian and step halving.
GaussNewtonResult gauss_newton(const std::function<Vector(const Vector&)>& residual, Vector x0,
                               const std::function<bool(const Vector&)>& admissible) {
  constexpr int kMaxIter = 100;
  constexpr double kStepTol = 1e-12;
  constexpr double kFd = 1e-7;
  GaussNewtonResult out;
  out.params = std::move(x0);
  Vector r = residual(out.params);
  for (int it = 0; it < kMaxIter; ++it) {
    out.iterations = it + 1;
    Matrix jac(r.size(), out.params.size());
    for (Eigen::Index j = 0; j < out.params.size(); ++j) {
      Vector xp = out.params, xm = out.params;
      xp(j) += kFd;
      xm(j) -= kFd;
      jac.col(j) = (residual(xp) - residual(xm)) / (2.0 * kFd);
    }
    const Vector step = -pseudo_inverse(jac) * r;
    double lambda = 1.0;
    bool accepted = false;
    for (int k = 0; k < 40; ++k, lambda *= 0.5) {
      const Vector trial = out.params + lambda * step;
      if (!admissible(trial)) continue;
      const Vector rt = residual(trial);
      if (rt.norm() < r.norm() || rt.norm() < 1e-14) {
        out.params = trial;
        r = rt;
        accepted = true;
        break;
      }
    }
    if (!accepted || (lambda * step).norm() < kStepTol || r.norm() < 1e-14) break;
  }
  out.residual = r.norm();
  out.converged = out.residual < 1e-9;
  return out;
}

}  // namespace

std::optional<Vector> coset_chart(const CosetPoint& p) {
  const Chart kind = chart_kind(*p.structure);
  if (kind == Chart::none) return std::nullopt;
  return chart_of(kind, *p.structure, p.representative.matrix());
}

std::optional<bool> same_point(const CosetPoint& a, const CosetPoint& b, double tol) {
  const auto ca = coset_chart(a);
  const auto cb = coset_chart(b);
  if (!ca || !cb) return std::nullopt;
  return (*ca - *cb).norm() < tol * std::max(1.0, ca->norm());
}

std::optional<WedgeWitness> wedge_factor_witness(const CosetPoint& p, const ConeModel& cone) {
  const SymmetricStructure& s = *p.structure;
  const Chart kind = chart_kind(s);
  if (kind == Chart::none) return std::nullopt;
  if (!positivity_member(p.representative, cone)) {
    throw PreconditionError("wedge_factor_witness: point is not in the positivity domain");
  }
  const Vector target = chart_of(kind, s, p.representative.matrix());
  const int nk = s.q_k.dim();
  const double scale = std::max(1.0, target.norm());

  auto split = [&](const Vector& v) {
    const AlgebraElement x = s.q_k.element(v.tail(nk));
    return std::pair{GroupElement::exp(s.h() * v(0)), x};
  };
  auto residual = [&](const Vector& v) -> Vector {
    auto [g0, x] = split(v);
    return (chart_of(kind, s, g0.matrix() * expm(x.matrix())) - target) / scale;
  };
  auto admissible = [&](const Vector& v) {
    return spectral_radius(ad_matrix(s.q_k.element(v.tail(nk)))) < std::numbers::pi / 2.0;
  };

  const auto sol = gauss_newton(residual, Vector::Zero(1 + nk), admissible);
  if (!sol.converged) return std::nullopt;
  auto [g0, x] = split(sol.params);
  if (!omega_member(x, s, cone.tol)) return std::nullopt;
  return WedgeWitness{g0, x, sol.iterations, sol.residual};
}

std::optional<GroupElement> centralizer_translation(const CosetPoint& a, const CosetPoint& b) {
  const SymmetricStructure& s = *a.structure;
  const Chart kind = chart_kind(s);
  if (kind == Chart::none) return std::nullopt;
  const Vector target = chart_of(kind, s, b.representative.matrix());
  const double scale = std::max(1.0, target.norm());
  auto residual = [&](const Vector& v) -> Vector {
    const Matrix k = expm(s.g_zero.element(v).matrix());
    return (chart_of(kind, s, k * a.representative.matrix()) - target) / scale;
  };
  const auto sol =
      gauss_newton(residual, Vector::Zero(s.g_zero.dim()), [](const Vector&) { return true; });
  if (!sol.converged) return std::nullopt;
  return GroupElement::exp(s.g_zero.element(sol.params));
}

}  // namespace ncc

#include "ncc/jts.hpp"

#include <cmath>

namespace ncc {

TripleSystem::TripleSystem(StructurePtr structure)
    : structure_(std::move(structure)), tol_(structure_->algebra()->tolerances()) {
  const Matrix& hm = structure_->h().matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(hm);
  const int n = static_cast<int>(hm.rows());
  frame_.resize(n, n);
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    frame_.col(i) = es.eigenvectors().col(n - 1 - i);
    ev[static_cast<std::size_t>(i)] = es.eigenvalues()(n - 1 - i);
  }
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || std::abs(ev[static_cast<std::size_t>(i)] - ev[static_cast<std::size_t>(start)]) >
                      tol_.spec_tol()) {
      blocks_.push_back(i - start);
      start = i;
    }
  }

  // The unit ball lies in the box of radius sqrt(dim / lambda_min(T)), where
  // T is the Gram matrix of x -> tr(x box x) in local coordinates.
  const int d = dim();
  if (d > 0) {
    Matrix t(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const auto& bi = plus().basis()[static_cast<std::size_t>(i)];
        const auto& bj = plus().basis()[static_cast<std::size_t>(j)];
        const Matrix lij = restrict_to(-0.5 * ad_matrix(bracket(bi, structure_->apply_theta(bj))),
                                       plus());
        t(i, j) = lij.trace();
      }
    }
    t = 0.5 * (t + t.transpose()).eval();
    const double lmin = Eigen::SelfAdjointEigenSolver<Matrix>(t).eigenvalues()(0);
    if (lmin <= 0.0) throw NumericError("TripleSystem: trace form is not positive");
    box_radius_ = std::max(1.0, std::sqrt(d / lmin));
  }
}

void TripleSystem::require_plus(const AlgebraElement& x, const char* what) const {
  if (plus().residual(x) > tol_.eq_tol()) throw DomainError(std::string(what) + ": argument not in g_1");
}

void TripleSystem::require_minus(const AlgebraElement& y, const char* what) const {
  if (minus().residual(y) > tol_.eq_tol()) {
    throw DomainError(std::string(what) + ": argument not in g_{-1}");
  }
}

Matrix TripleSystem::restrict_to(const Matrix& op, const Subspace& sub) const {
  const Matrix& b = sub.basis_coords();
  return pseudo_inverse(b) * op * b;
}

AlgebraElement TripleSystem::triple(const AlgebraElement& x, const AlgebraElement& y,
                                    const AlgebraElement& z) const {
  require_plus(x, "triple");
  require_plus(y, "triple");
  require_plus(z, "triple");
  const AlgebraElement out = bracket(bracket(x, structure_->apply_theta(y)), z) * -0.5;
  if (plus().residual(out) > tol_.eq_tol()) throw ConsistencyError("triple: result left g_1");
  return out;
}

Matrix TripleSystem::bergman_plus(const AlgebraElement& x, const AlgebraElement& y) const {
  require_plus(x, "bergman_plus");
  require_minus(y, "bergman_plus");
  const Matrix ax = ad_matrix(x);
  const Matrix ay = ad_matrix(y);
  const Matrix id = Matrix::Identity(ax.rows(), ax.cols());
  return restrict_to(id + ax * ay + 0.25 * ax * ax * ay * ay, plus());
}

Matrix TripleSystem::bergman_minus(const AlgebraElement& y, const AlgebraElement& x) const {
  require_plus(x, "bergman_minus");
  require_minus(y, "bergman_minus");
  const Matrix ax = ad_matrix(x);
  const Matrix ay = ad_matrix(y);
  const Matrix id = Matrix::Identity(ax.rows(), ax.cols());
  return restrict_to(id + ay * ax + 0.25 * ay * ay * ax * ax, minus());
}

double TripleSystem::spectral_norm(const AlgebraElement& x) const {
  require_plus(x, "spectral_norm");
  if (dim() == 0) return 0.0;
  const Matrix box = restrict_to(-0.5 * ad_matrix(bracket(x, structure_->apply_theta(x))), plus());
  double top = 0.0;
  double bottom = 0.0;
  for (const auto& ev : eigenvalues(box)) {
    top = std::max(top, ev.real());
    bottom = std::min(bottom, ev.real());
  }
  if (bottom < -tol_.eq_tol() * std::max(1.0, top)) {
    throw NumericError("spectral_norm: x box x has a negative eigenvalue");
  }
  return std::sqrt(top);
}

double TripleSystem::spectral_norm_minus(const AlgebraElement& y) const {
  require_minus(y, "spectral_norm_minus");
  return spectral_norm(structure_->apply_theta(y));
}

CellPoint TripleSystem::sample_domain(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> box(-box_radius_, box_radius_);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Vector c(dim());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = box(rng);
    if (spectral_norm(plus().element(c)) < 1.0) return {c};
  }
  throw NumericError("sample_domain: rejection sampling did not terminate");
}

// ---------------------------------------------------------------------------

namespace {

struct Udl {
  Matrix u, m, l;
};

bool pivot_ok(const Matrix& d, const Tolerances& tol) { return is_invertible(d, tol); }

std::optional<Udl> block_udl(const Matrix& g, const std::vector<int>& blocks, std::size_t nblocks,
                             const Tolerances& tol) {
  const auto n = g.rows();
  if (nblocks == 1) {
    return Udl{Matrix::Identity(n, n), g, Matrix::Identity(n, n)};
  }
  const int last = blocks[nblocks - 1];
  const auto a = n - last;
  const Matrix A = g.topLeftCorner(a, a);
  const Matrix B = g.topRightCorner(a, last);
  const Matrix C = g.bottomLeftCorner(last, a);
  const Matrix D = g.bottomRightCorner(last, last);
  if (!pivot_ok(D, tol)) return std::nullopt;
  const Matrix dinv = D.inverse();
  const Matrix x = B * dinv;
  const Matrix y = dinv * C;
  auto inner = block_udl(A - B * y, blocks, nblocks - 1, tol);
  if (!inner) return std::nullopt;
  Udl out{Matrix::Identity(n, n), Matrix::Zero(n, n), Matrix::Identity(n, n)};
  out.u.topLeftCorner(a, a) = inner->u;
  out.u.topRightCorner(a, last) = x;
  out.m.topLeftCorner(a, a) = inner->m;
  out.m.bottomRightCorner(last, last) = D;
  out.l.topLeftCorner(a, a) = inner->l;
  out.l.bottomLeftCorner(last, a) = y;
  return out;
}

// log of a unipotent matrix (finite series).
Matrix unipotent_log(const Matrix& u) {
  const auto n = u.rows();
  const Matrix nil = u - Matrix::Identity(n, n);
  Matrix term = nil;
  Matrix out = Matrix::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    out += ((k % 2) ? 1.0 : -1.0) / k * term;
    term = term * nil;
    if (term.norm() == 0.0) break;
  }
  return out;
}

}  // namespace

std::optional<BruhatFactors> bruhat_factor(const TripleSystem& ts, const GroupElement& g) {
  const auto& alg = ts.structure().algebra();
  if (g.algebra() != alg) throw DomainError("bruhat_factor: mixed algebras");
  const Matrix& s = ts.defining_frame();
  const Matrix gf = s.transpose() * g.matrix() * s;
  const auto& blocks = ts.block_sizes();
  auto udl = block_udl(gf, blocks, blocks.size(), ts.tol());
  if (!udl) return std::nullopt;
  const Matrix u_def = s * unipotent_log(udl->u) * s.transpose();
  const Matrix v_def = s * unipotent_log(udl->l) * s.transpose();
  const Matrix m_def = s * udl->m * s.transpose();
  AlgebraElement u = AlgebraElement::from_matrix(alg, u_def);
  AlgebraElement v = AlgebraElement::from_matrix(alg, v_def);
  if (ts.plus().residual(u) > ts.tol().spec_tol() || ts.minus().residual(v) > ts.tol().spec_tol()) {
    throw ConsistencyError("bruhat_factor: unipotent factors left g_{+-1}");
  }
  return BruhatFactors{ts.plus().project(u), GroupElement::from_factorization(alg, m_def),
                       ts.minus().project(v)};
}

std::optional<CellPoint> conformal_action(const TripleSystem& ts, const GroupElement& g,
                                          const CellPoint& p) {
  const auto f = bruhat_factor(ts, g * GroupElement::exp(ts.element(p)));
  if (!f) return std::nullopt;
  return ts.cell_point(f->u);
}

std::string to_string(BallStatus b) {
  switch (b) {
    case BallStatus::outside: return "outside";
    case BallStatus::contained: return "contained";
    case BallStatus::bounded: return "bounded";
  }
  return "?";
}

BallStatus ball_status(const TripleSystem& ts, const GroupElement& g) {
  const auto f = bruhat_factor(ts, g);
  if (!f) return BallStatus::outside;
  const double r = ts.spectral_norm_minus(f->v);
  const double band = ts.tol().boundary_band();
  if (r < 1.0 - band) return BallStatus::bounded;
  if (r <= 1.0 + band) return BallStatus::contained;
  return BallStatus::outside;
}

bool convexity_check(const TripleSystem& ts, const GroupElement& g, int n_pairs,
                     std::uint64_t seed) {
  if (ball_status(ts, g) == BallStatus::outside) {
    throw PreconditionError("convexity_check: g.D is not contained in the cell");
  }
  std::mt19937_64 rng(seed);
  const GroupElement ginv = g.inverse();
  const double limit = 1.0 + ts.tol().boundary_band();
  for (int i = 0; i < n_pairs; ++i) {
    const auto p = conformal_action(ts, g, ts.sample_domain(rng));
    const auto q = conformal_action(ts, g, ts.sample_domain(rng));
    if (!p || !q) return false;
    const CellPoint mid{0.5 * (p->coords + q->coords)};
    const auto back = conformal_action(ts, ginv, mid);
    if (!back || ts.spectral_norm(ts.element(*back)) >= limit) return false;
  }
  return true;
}

bool compression_member(const TripleSystem& ts, const GroupElement& g, int n_samples,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double limit = 1.0 + ts.tol().boundary_band();
  auto maps_inside = [&](const CellPoint& x) {
    const auto p = conformal_action(ts, g, x);
    return p && ts.spectral_norm(ts.element(*p)) < limit;
  };
  for (int i = 0; i < n_samples; ++i) {
    const CellPoint x = ts.sample_domain(rng);
    if (!maps_inside(x)) return false;
    // expansions show up first near the boundary sphere
    const double r = ts.spectral_norm(ts.element(x));
    if (r > 0.0 && !maps_inside(CellPoint{x.coords * ((1.0 - ts.tol().boundary_band()) / r)})) return false;
  }
  return true;
}

}  // namespace ncc

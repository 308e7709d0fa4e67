#include "ncc/grading.hpp"

#include <cmath>
#include <string>

namespace ncc {

bool check_euler(const AlgebraElement& x, const Tolerances& tol) {
  const Matrix a = ad_matrix(x);
  try {
    const auto snapped = classify_spectrum(a, {-1.0, 0.0, 1.0}, tol);
    bool nonzero = false;
    for (double v : snapped) nonzero = nonzero || v != 0.0;
    if (!nonzero) return false;
  } catch (const NumericError&) {
    return false;
  }
  // Minimal polynomial t(t-1)(t+1) must annihilate ad x.
  const Matrix m = a * a * a - a;
  return m.norm() < tol.eq_tol() * std::max(1.0, a.norm());
}

GradingData grading_projectors(const AlgebraElement& h, const Tolerances& tol) {
  if (!check_euler(h, tol)) throw DomainError("grading_projectors: not an Euler element");
  const Matrix a = ad_matrix(h);
  const Matrix id = Matrix::Identity(a.rows(), a.cols());
  GradingData g;
  g.h = h;
  g.p_plus = 0.5 * a * (a + id);
  g.p_minus = 0.5 * a * (a - id);
  g.p_zero = id - a * a;
  g.dims = {numerical_rank(g.p_minus, tol.spec_tol()), numerical_rank(g.p_zero, tol.spec_tol()),
            numerical_rank(g.p_plus, tol.spec_tol())};
  return g;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(AlgebraPtr alg, Matrix projector, const Tolerances& tol)
    : alg_(std::move(alg)), projector_(std::move(projector)) {
  const int d = alg_->dim();
  // Gram-Schmidt (two passes) on the images of the basis under the projector.
  std::vector<Matrix> ortho;
  for (int i = 0; i < d; ++i) {
    Matrix v = alg_->matrix_of(projector_.col(i));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : ortho) v -= (u.cwiseProduct(v)).sum() * u;
    const double n = v.norm();
    if (n > 1e3 * tol.eq_tol()) ortho.push_back(v / n);
  }
  const int rank = numerical_rank(projector_, tol.spec_tol());
  if (static_cast<int>(ortho.size()) != rank) {
    throw ConsistencyError("subspace: Gram-Schmidt rank " + std::to_string(ortho.size()) +
                           " disagrees with projector rank " + std::to_string(rank));
  }
  basis_coords_.resize(d, rank);
  for (int i = 0; i < rank; ++i) {
    basis_.push_back(AlgebraElement::from_matrix(alg_, ortho[static_cast<std::size_t>(i)]));
    basis_coords_.col(i) = basis_.back().coords();
  }
  basis_pinv_ = rank > 0 ? pseudo_inverse(basis_coords_) : Matrix(0, d);
}

AlgebraElement Subspace::project(const AlgebraElement& x) const {
  return AlgebraElement::from_coords(alg_, projector_ * x.coords());
}

double Subspace::residual(const AlgebraElement& x) const {
  const AlgebraElement r = x - project(x);
  return r.norm() / std::max(1.0, x.norm());
}

AlgebraElement Subspace::element(const Vector& local) const {
  if (local.size() != dim()) throw DimensionError("subspace: local coordinate length");
  return AlgebraElement::from_coords(alg_, basis_coords_ * local);
}

Vector Subspace::local_coords(const AlgebraElement& x) const { return basis_pinv_ * x.coords(); }

// ---------------------------------------------------------------------------

AlgebraElement SymmetricStructure::apply_theta(const AlgebraElement& x) const {
  return AlgebraElement::from_coords(x.algebra(), theta * x.coords());
}
AlgebraElement SymmetricStructure::apply_tau_h(const AlgebraElement& x) const {
  return AlgebraElement::from_coords(x.algebra(), tau_h * x.coords());
}
AlgebraElement SymmetricStructure::apply_tau(const AlgebraElement& x) const {
  return AlgebraElement::from_coords(x.algebra(), tau * x.coords());
}

SymmetricStructure symmetric_structure(const AlgebraElement& h, const Tolerances& tol) {
  const AlgebraPtr& alg = h.algebra();
  SymmetricStructure s;
  s.grading = grading_projectors(h, tol);
  const int d = alg->dim();
  const Matrix id = Matrix::Identity(d, d);

  s.theta.resize(d, d);
  for (int i = 0; i < d; ++i) {
    s.theta.col(i) = alg->coordinates(-alg->basis()[static_cast<std::size_t>(i)].transpose());
  }
  if ((s.theta * h.coords() + h.coords()).norm() > tol.eq_tol() * std::max(1.0, h.coords().norm())) {
    throw PreconditionError("symmetric_structure: theta(h) != -h; move h into p first");
  }
  const Matrix a = ad_matrix(h);
  s.tau_h = id - 2.0 * a * a;
  s.tau = s.tau_h * s.theta;

  // tau_h must act as (-1)^j on g_j
  const Matrix check = s.tau_h - (s.grading.p_zero - s.grading.p_plus - s.grading.p_minus);
  if (check.norm() > tol.eq_tol() * std::max(1.0, a.norm())) {
    throw ConsistencyError("symmetric_structure: tau_h is not (-1)^j on g_j");
  }

  const Matrix ph = 0.5 * (id + s.tau);
  const Matrix pq = 0.5 * (id - s.tau);
  const Matrix pk = 0.5 * (id + s.theta);
  const Matrix pp = 0.5 * (id - s.theta);
  s.g_minus = Subspace(alg, s.grading.p_minus, tol);
  s.g_zero = Subspace(alg, s.grading.p_zero, tol);
  s.g_plus = Subspace(alg, s.grading.p_plus, tol);
  s.h_alg = Subspace(alg, ph, tol);
  s.q = Subspace(alg, pq, tol);
  s.k = Subspace(alg, pk, tol);
  s.p = Subspace(alg, pp, tol);
  s.h_k = Subspace(alg, ph * pk, tol);
  s.h_p = Subspace(alg, ph * pp, tol);
  s.q_k = Subspace(alg, pq * pk, tol);
  s.q_p = Subspace(alg, pq * pp, tol);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

int parse_index(std::string_view label) {
  if (label.size() < 2 || label[0] != 'h') return -1;
  int j = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') return -1;
    j = 10 * j + (c - '0');
  }
  return j;
}

Matrix boost(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  m(j, i) = 1.0;
  return m;
}

}  // namespace

AlgebraElement gl_euler(const AlgebraPtr& alg, int j, double lambda) {
  if (alg->family() != Family::gl) throw DomainError("gl_euler: algebra is not gl_n");
  const int n = alg->defining_dim();
  if (j < 1 || j >= n) throw DomainError("gl_euler: need 1 <= j < n");
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = i < j ? lambda : lambda - 1.0;
  return AlgebraElement::from_matrix(alg, m);
}

AlgebraElement euler_element(const AlgebraPtr& alg, std::string_view label) {
  const int n = alg->defining_dim();
  const std::string err = "no Euler element labelled '" + std::string(label) + "' in " + alg->name();
  switch (alg->family()) {
    case Family::sl:
    case Family::gl: {
      const int j = label == "h" ? 1 : parse_index(label);
      if (j < 1 || j >= n) throw DomainError(err);
      Matrix m = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) m(i, i) = i < j ? double(n - j) / n : -double(j) / n;
      return AlgebraElement::from_matrix(alg, m);
    }
    case Family::so_pq: {
      const int p = alg->params()[0];
      const int q = alg->params()[1];
      if (label == "h" || label == "boost" || label == "h1") {
        return AlgebraElement::from_matrix(alg, boost(n, 0, p));
      }
      if (label == "hn" && p == q) {
        Matrix m = Matrix::Zero(n, n);
        for (int i = 0; i < p; ++i) m += 0.5 * boost(n, i, p + i);
        return AlgebraElement::from_matrix(alg, m);
      }
      throw DomainError(err);
    }
    case Family::sp: {
      if (label != "h" && label != "hn") throw DomainError(err);
      const int half = n / 2;
      Matrix m = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) m(i, i) = i < half ? 0.5 : -0.5;
      return AlgebraElement::from_matrix(alg, m);
    }
  }
  throw DomainError(err);
}

}  // namespace ncc

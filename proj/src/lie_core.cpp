#include "ncc/lie_core.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace ncc {

std::string to_string(Family f) {
  switch (f) {
    case Family::sl: return "sl";
    case Family::gl: return "gl";
    case Family::so_pq: return "so";
    case Family::sp: return "sp";
  }
  return "?";
}

namespace {

Matrix unit(int n, int i, int j) {
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

}  // namespace

Algebra::Algebra(Family family, std::vector<int> params, const Tolerances& tol)
    : family_(family), params_(std::move(params)), tol_(tol) {}

AlgebraPtr Algebra::build(Family family, std::vector<int> params, const Tolerances& tol) {
  std::shared_ptr<Algebra> alg(new Algebra(family, std::move(params), tol));
  alg->make_basis();
  alg->finalize();
  return alg;
}

AlgebraPtr Algebra::parse(std::string_view spec, const Tolerances& tol) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("algebra spec must look like 'sl:2' or 'so:1,2', got '" +
                      std::string(spec) + "'");
  }
  const auto fam = spec.substr(0, colon);
  Family family;
  if (fam == "sl") family = Family::sl;
  else if (fam == "gl") family = Family::gl;
  else if (fam == "so") family = Family::so_pq;
  else if (fam == "sp") family = Family::sp;
  else throw DomainError("unknown algebra family '" + std::string(fam) + "'");

  std::vector<int> params;
  auto rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw DomainError("bad integer '" + std::string(tok) + "' in algebra spec");
    }
    params.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return build(family, std::move(params), tol);
}

void Algebra::make_basis() {
  std::ostringstream nm;
  switch (family_) {
    case Family::sl:
    case Family::gl: {
      if (params_.size() != 1 || params_[0] < 2) {
        throw DomainError(to_string(family_) + " needs a single parameter n >= 2");
      }
      const int n = params_[0];
      defining_dim_ = n;
      if (family_ == Family::sl) {
        for (int i = 0; i + 1 < n; ++i) basis_.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j) basis_.push_back(unit(n, i, j));
      } else {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) basis_.push_back(unit(n, i, j));
      }
      nm << to_string(family_) << "_" << n;
      break;
    }
    case Family::so_pq: {
      if (params_.size() != 2 || params_[0] < 1 || params_[1] < 1 ||
          params_[0] + params_[1] < 3) {
        throw DomainError("so needs parameters p, q >= 1 with p + q >= 3");
      }
      const int p = params_[0];
      const int n = p + params_[1];
      defining_dim_ = n;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const bool mixed = (i < p) != (j < p);
          basis_.push_back(mixed ? Matrix(unit(n, i, j) + unit(n, j, i))
                                 : Matrix(unit(n, i, j) - unit(n, j, i)));
        }
      }
      nm << "so_" << params_[0] << "," << params_[1];
      break;
    }
    case Family::sp: {
      if (params_.size() != 1 || params_[0] < 2 || params_[0] % 2 != 0) {
        throw DomainError("sp needs a single even parameter 2n >= 2");
      }
      const int n = params_[0] / 2;
      defining_dim_ = 2 * n;
      const int d = 2 * n;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Matrix m = Matrix::Zero(d, d);
          m(i, j) = 1.0;
          m(n + j, n + i) = -1.0;
          basis_.push_back(m);
        }
      }
      for (int upper = 1; upper >= 0; --upper) {
        for (int i = 0; i < n; ++i) {
          for (int j = i; j < n; ++j) {
            Matrix m = Matrix::Zero(d, d);
            const int r0 = upper ? 0 : n;
            const int c0 = upper ? n : 0;
            m(r0 + i, c0 + j) = 1.0;
            m(r0 + j, c0 + i) = 1.0;
            basis_.push_back(m);
          }
        }
      }
      nm << "sp_" << params_[0];
      break;
    }
  }
  name_ = nm.str();
}

void Algebra::finalize() {
  const int d = dim();
  const int n2 = defining_dim_ * defining_dim_;
  flat_.resize(n2, d);
  for (int i = 0; i < d; ++i) flat_.col(i) = vec(basis_[static_cast<std::size_t>(i)]);
  if (numerical_rank(flat_, tol_.eq_tol()) != d) {
    throw ConsistencyError(name_ + ": basis is not linearly independent");
  }
  flat_pinv_ = pseudo_inverse(flat_);

  ad_basis_.assign(static_cast<std::size_t>(d), Matrix::Zero(d, d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Matrix& a = basis_[static_cast<std::size_t>(i)];
      const Matrix& b = basis_[static_cast<std::size_t>(j)];
      // coordinates() throws if the commutator leaves the span
      ad_basis_[static_cast<std::size_t>(i)].col(j) = coordinates(a * b - b * a);
    }
  }
  killing_gram_.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      killing_gram_(i, j) =
          (ad_basis_[static_cast<std::size_t>(i)] * ad_basis_[static_cast<std::size_t>(j)]).trace();
}

double Algebra::span_residual(const Matrix& m) const {
  if (m.rows() != defining_dim_ || m.cols() != defining_dim_) {
    throw DimensionError(name_ + ": matrix has wrong size");
  }
  const Vector v = vec(m);
  const Vector c = flat_pinv_ * v;
  return (flat_ * c - v).norm() / std::max(1.0, v.norm());
}

Vector Algebra::coordinates(const Matrix& m) const {
  if (m.rows() != defining_dim_ || m.cols() != defining_dim_) {
    throw DimensionError(name_ + ": matrix has wrong size");
  }
  require_finite(m, "coordinates");
  const Vector v = vec(m);
  Vector c = flat_pinv_ * v;
  const double res = (flat_ * c - v).norm() / std::max(1.0, v.norm());
  if (res > tol_.eq_tol()) {
    throw ConsistencyError(name_ + ": matrix lies outside the algebra (residual " +
                           std::to_string(res) + ")");
  }
  return c;
}

Matrix Algebra::matrix_of(const Vector& coords) const {
  if (coords.size() != dim()) throw DimensionError(name_ + ": coordinate vector has wrong length");
  Matrix m = Matrix::Zero(defining_dim_, defining_dim_);
  for (int i = 0; i < dim(); ++i) m += coords(i) * basis_[static_cast<std::size_t>(i)];
  return m;
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::from_coords(AlgebraPtr alg, Vector coords) {
  if (!coords.allFinite()) throw DomainError("algebra element: non-finite coordinates");
  Matrix m = alg->matrix_of(coords);
  return AlgebraElement(std::move(alg), std::move(coords), std::move(m));
}

AlgebraElement AlgebraElement::from_matrix(AlgebraPtr alg, const Matrix& m) {
  Vector c = alg->coordinates(m);
  Matrix mm = alg->matrix_of(c);
  return AlgebraElement(std::move(alg), std::move(c), std::move(mm));
}

AlgebraElement AlgebraElement::zero(AlgebraPtr alg) {
  const int d = alg->dim();
  return from_coords(std::move(alg), Vector::Zero(d));
}

AlgebraElement AlgebraElement::basis(AlgebraPtr alg, int i) {
  Vector c = Vector::Zero(alg->dim());
  c(i) = 1.0;
  return from_coords(std::move(alg), std::move(c));
}

void require_same_algebra(const AlgebraElement& x, const AlgebraElement& y) {
  if (!x.algebra() || x.algebra() != y.algebra()) {
    throw DomainError("elements belong to different algebras");
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  require_same_algebra(*this, o);
  return AlgebraElement(alg_, coords_ + o.coords_, matrix_ + o.matrix_);
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  require_same_algebra(*this, o);
  return AlgebraElement(alg_, coords_ - o.coords_, matrix_ - o.matrix_);
}

AlgebraElement AlgebraElement::operator-() const { return AlgebraElement(alg_, -coords_, -matrix_); }

AlgebraElement AlgebraElement::operator*(double s) const {
  return AlgebraElement(alg_, s * coords_, s * matrix_);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_algebra(x, y);
  return AlgebraElement::from_matrix(x.algebra(),
                                     x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

Matrix ad_matrix(const AlgebraElement& x) {
  const auto& alg = *x.algebra();
  Matrix out = Matrix::Zero(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    if (x.coords()(i) != 0.0) out += x.coords()(i) * alg.ad_basis(i);
  }
  return out;
}

double killing(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_algebra(x, y);
  return x.coords().dot(x.algebra()->killing_gram() * y.coords());
}

// ---------------------------------------------------------------------------

GroupElement GroupElement::identity(AlgebraPtr alg) {
  const int n = alg->defining_dim();
  return GroupElement(std::move(alg), Matrix::Identity(n, n), {}, true);
}

GroupElement GroupElement::exp(const AlgebraElement& x) {
  return GroupElement(x.algebra(), expm(x.matrix()), {x}, true);
}

GroupElement GroupElement::word(AlgebraPtr alg, const std::vector<AlgebraElement>& xs) {
  GroupElement g = identity(alg);
  for (const auto& x : xs) {
    if (x.algebra() != alg) throw DomainError("group word mixes algebras");
    g = g * exp(x);
  }
  return g;
}

GroupElement GroupElement::from_factorization(AlgebraPtr alg, Matrix m) {
  const int n = alg->defining_dim();
  if (m.rows() != n || m.cols() != n) throw DimensionError("group element has wrong size");
  require_finite(m, "group element");
  if (!has_full_rank(m)) throw DomainError("group element is singular");
  return GroupElement(std::move(alg), std::move(m), {}, false);
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (alg_ != o.alg_) throw DomainError("group elements belong to different groups");
  std::vector<AlgebraElement> f = factors_;
  f.insert(f.end(), o.factors_.begin(), o.factors_.end());
  return GroupElement(alg_, matrix_ * o.matrix_, std::move(f), has_factors_ && o.has_factors_);
}

GroupElement GroupElement::inverse() const {
  std::vector<AlgebraElement> f;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) f.push_back(-*it);
  return GroupElement(alg_, matrix_.inverse(), std::move(f), has_factors_);
}

AlgebraElement adjoint_action(const GroupElement& g, const AlgebraElement& x) {
  if (g.algebra() != x.algebra()) throw DomainError("adjoint_action: mixed algebras");
  if (!has_full_rank(g.matrix())) {
    throw DomainError("adjoint_action: singular group element");
  }
  const Matrix& m = g.matrix();
  return AlgebraElement::from_matrix(x.algebra(), m * x.matrix() * m.inverse());
}

Matrix adjoint_matrix(const GroupElement& g) {
  const auto& alg = g.algebra();
  Matrix out(alg->dim(), alg->dim());
  const Matrix inv = g.matrix().inverse();
  for (int i = 0; i < alg->dim(); ++i) {
    out.col(i) = alg->coordinates(g.matrix() * alg->basis()[static_cast<std::size_t>(i)] * inv);
  }
  return out;
}

}  // namespace ncc

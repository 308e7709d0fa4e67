#ifndef NCC_JTS_HPP
#define NCC_JTS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncc/cones.hpp"

namespace ncc {

/// Affine coordinates of the open Bruhat cell exp(g_1) P^-, taken in the
/// trace-orthonormal basis of g_1.
struct CellPoint {
  Vector coords;
};

/// The Jordan triple system {x, y, z} = -1/2 [[x, theta y], z] on g_1(h).
class TripleSystem {
 public:
  explicit TripleSystem(StructurePtr structure);

  const SymmetricStructure& structure() const { return *structure_; }
  const StructurePtr& structure_ptr() const { return structure_; }
  const Subspace& plus() const { return structure_->g_plus; }
  const Subspace& minus() const { return structure_->g_minus; }
  int dim() const { return plus().dim(); }
  const Tolerances& tol() const { return tol_; }

  AlgebraElement triple(const AlgebraElement& x, const AlgebraElement& y,
                        const AlgebraElement& z) const;

  /// 1 + ad x ad y + 1/4 (ad x)^2 (ad y)^2 on g_1, in local coordinates.
  Matrix bergman_plus(const AlgebraElement& x, const AlgebraElement& y) const;
  /// 1 + ad y ad x + 1/4 (ad y)^2 (ad x)^2 on g_{-1}, in local coordinates.
  Matrix bergman_minus(const AlgebraElement& y, const AlgebraElement& x) const;

  /// sqrt of the top eigenvalue of z -> {x, x, z}; throws NumericError when
  /// the operator has a negative eigenvalue (triple system not positive).
  double spectral_norm(const AlgebraElement& x) const;
  /// Norm of y in g_{-1}, defined through theta(y) in g_1.
  double spectral_norm_minus(const AlgebraElement& y) const;

  AlgebraElement element(const CellPoint& p) const { return plus().element(p.coords); }
  CellPoint cell_point(const AlgebraElement& x) const { return {plus().local_coords(x)}; }

  /// Uniform sample of D = { x in g_1 : ||x|| < 1 } by rejection from a box.
  CellPoint sample_domain(std::mt19937_64& rng) const;
  double sampling_box() const { return box_radius_; }

  /// Orthogonal eigenbasis of h in the defining representation (columns
  /// sorted by decreasing eigenvalue) and the sizes of its eigenvalue blocks.
  const Matrix& defining_frame() const { return frame_; }
  const std::vector<int>& block_sizes() const { return blocks_; }

 private:
  void require_plus(const AlgebraElement& x, const char* what) const;
  void require_minus(const AlgebraElement& y, const char* what) const;
  Matrix restrict_to(const Matrix& op, const Subspace& sub) const;

  StructurePtr structure_;
  Tolerances tol_;
  Matrix frame_;
  std::vector<int> blocks_;
  double box_radius_ = 1.0;
};

struct BruhatFactors {
  AlgebraElement u;  // in g_1
  GroupElement m;    // in G^h
  AlgebraElement v;  // in g_{-1}
};

/// g = exp(u) m exp(v) by block UDL factorization in the eigenframe of h.
/// Absent when a pivot block is singular, i.e. g.eP^- lies outside the cell.
std::optional<BruhatFactors> bruhat_factor(const TripleSystem& ts, const GroupElement& g);

std::optional<CellPoint> conformal_action(const TripleSystem& ts, const GroupElement& g,
                                          const CellPoint& p);

enum class BallStatus { outside, contained, bounded };
std::string to_string(BallStatus b);

/// Classifies g.D via g = p exp(y), p in P^+: contained iff ||y|| <= 1,
/// bounded iff ||y|| < 1 (with boundary_band).
BallStatus ball_status(const TripleSystem& ts, const GroupElement& g);

/// Midpoints of random pairs of g.D pulled back by g^{-1} stay in D.
bool convexity_check(const TripleSystem& ts, const GroupElement& g, int n_pairs,
                     std::uint64_t seed);

/// Pushed-forward samples of D, and their radial projections onto the sphere
/// of radius 1 - band, stay in D.
bool compression_member(const TripleSystem& ts, const GroupElement& g, int n_samples,
                        std::uint64_t seed);

}  // namespace ncc

#endif  // NCC_JTS_HPP

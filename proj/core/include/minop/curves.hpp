#pragma once

#include <array>
#include <vector>

#include "minop/common.hpp"
#include "minop/subspace.hpp"

namespace minop {

// Unit-speed-in-angle curve t -> cos(t) v^j + sin(t) w between two
// independent principal vectors of S, t in [0, pi/2].  w is the normalized
// component of v^k orthogonal to v^j, rotated by the phase of v^j's k-th
// coordinate (phase 1 when that coordinate is zero).  That rotation makes
// the curve pass through a unit multiple of v^k at t = arccos |<v^j, v^k>|;
// at pi/2 the j-th coordinate vanishes and the k-th squared modulus is
// (v^k_k)^2 - |v^j_k|^2.
class PrincipalCurve {
 public:
  PrincipalCurve(Subspace s, int j, int k,
                 const Tolerances& tol = default_tolerances());

  const Subspace& subspace() const { return s_; }
  int j() const { return j_; }
  int k() const { return k_; }
  const Vector& v_j() const { return vj_; }
  const Vector& v_k() const { return vk_; }
  const Vector& w() const { return w_; }
  double overlap_j() const { return vjj_; }  // v^j_j
  double overlap_k() const { return vkk_; }  // v^k_k
  Complex coord_jk() const { return vjk_; }  // v^j_k

 private:
  Subspace s_;
  int j_, k_;
  Vector vj_, vk_, w_;
  double vjj_, vkk_;
  Complex vjk_;
};

PrincipalCurve build_curve(const Subspace& s, int j, int k,
                           const Tolerances& tol = default_tolerances());

// Point on the curve and its squared-modulus coordinates (a moment point).
// Parameters outside [0, pi/2] are clamped (with a note on stderr); t holds
// the clamped value.
struct CurveSample {
  double t = 0.0;
  Vector point;
  MomentPoint moment;
};

CurveSample eval_curve(const PrincipalCurve& c, double t);

// SEGMENT iff the principal vectors are orthogonal within 1e-10; otherwise
// the moment-set trace is a proper ellipse arc of extreme points.
enum class CurveKind { kEllipseArc, kSegment };

CurveKind classify_curve(const PrincipalCurve& c);

// The unique parameter with |x_j| = |curve(t)_j| for a unit x in S,
// t = arccos |<x, v^j>|.
double find_t_x(const PrincipalCurve& c, const Vector& x);

// Distance from p to the nearest midpoint of two sampled cloud points at
// least min_separation apart (infinity when no such pair exists).  Extreme
// points keep this margin bounded away from zero.
double midpoint_margin(const std::array<double, 2>& p,
                       const std::vector<std::array<double, 2>>& cloud,
                       double min_separation);

// Sampled extremality check along the curve: at each grid parameter, the
// projected moment point must not be a midpoint of two distinct sampled
// moment points of S (margin above 1e-7).  SEGMENT curves are rejected.
struct ExtremalityReport {
  std::vector<double> t;
  std::vector<double> margins;
  double min_margin = 0.0;
  bool all_extremal(double floor = 1e-7) const;
};

ExtremalityReport verify_extremality(const PrincipalCurve& c,
                                     const std::vector<double>& t_grid,
                                     int hull_samples, std::uint64_t seed);

// Smallest pairwise l1 gap between the moment traces of two curves of the
// same subspace over a parameter grid.  Both curves must be ellipse arcs;
// curves related by the (j,k) swap are rejected.  intersects flags a gap
// below 1e-8 (possible when the index pairs share an endpoint).
struct GapReport {
  double min_gap = 0.0;
  double t_at = 0.0;
  double u_at = 0.0;
  bool intersects = false;
};

GapReport check_non_intersection(const PrincipalCurve& a,
                                 const PrincipalCurve& b, int grid);

}  // namespace minop

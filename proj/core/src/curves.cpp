#include "minop/curves.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "minop/rng.hpp"

namespace minop {

PrincipalCurve::PrincipalCurve(Subspace s, int j, int k, const Tolerances& tol)
    : s_(std::move(s)), j_(j), k_(k) {
  if (j == k)
    throw ValidationError("PrincipalCurve: coordinate indices must differ");
  PrincipalVector pj = principal_vector(s_, j, tol);
  PrincipalVector pk = principal_vector(s_, k, tol);
  vj_ = pj.vector;
  vk_ = pk.vector;
  vjj_ = pj.overlap;
  vkk_ = pk.overlap;
  vjk_ = vj_(k);
  // Dependence test: the principal vectors are parallel exactly when
  // v^j_j = |v^k_j|.
  double dep = std::abs(vjj_ - std::abs(vk_(j)));
  if (dep <= 1e-10)
    throw ValidationError(
        "CURVE_DEGENERATE: principal vectors " + std::to_string(j) + " and " +
        std::to_string(k) + " are linearly dependent (residual " +
        std::to_string(dep) + ")");
  // <v^k, v^j> conjugates the second argument.
  Complex inner = vj_.dot(vk_);
  Vector u = vk_ - inner * vj_;
  double norm = u.norm();
  Complex phase = std::abs(vjk_) == 0.0 ? Complex(1.0, 0.0)
                                        : vjk_ / std::abs(vjk_);
  w_ = phase * (u / norm);
}

PrincipalCurve build_curve(const Subspace& s, int j, int k,
                           const Tolerances& tol) {
  return PrincipalCurve(s, j, k, tol);
}

CurveSample eval_curve(const PrincipalCurve& c, double t) {
  constexpr double kHalfPi = 1.5707963267948966;
  if (t < 0.0 || t > kHalfPi) {
    double clamped = std::clamp(t, 0.0, kHalfPi);
    if (std::abs(t - clamped) > 1e-12)
      std::cerr << "eval_curve: parameter " << t
                << " clamped to [0, pi/2]\n";
    t = clamped;
  }
  Vector point = std::cos(t) * c.v_j() + std::sin(t) * c.w();
  return CurveSample{t, point, MomentPoint(point.cwiseAbs2().cwiseMax(0.0))};
}

CurveKind classify_curve(const PrincipalCurve& c) {
  return std::abs(c.v_j().dot(c.v_k())) <= 1e-10 ? CurveKind::kSegment
                                                 : CurveKind::kEllipseArc;
}

double find_t_x(const PrincipalCurve& c, const Vector& x) {
  if (x.size() != c.subspace().ambient())
    throw ValidationError("find_t_x: vector dimension mismatch");
  if (std::abs(x.norm() - 1.0) > 1e-10)
    throw ValidationError("find_t_x: vector not unit");
  const Matrix& f = c.subspace().frame();
  double off = (x - f * (f.adjoint() * x)).norm();
  if (off > 1e-10)
    throw ValidationError("find_t_x: vector not in the subspace (residual " +
                          std::to_string(off) + ")");
  // a = <x, v^j>; the j-th coordinate of x is v^j_j a, so
  // t = arccos |a| matches |x_j| = cos(t) v^j_j.
  Complex a = c.v_j().dot(x);
  double mod = std::min(std::abs(a), 1.0);
  return std::acos(mod);
}

double midpoint_margin(const std::array<double, 2>& p,
                       const std::vector<std::array<double, 2>>& cloud,
                       double min_separation) {
  double margin = std::numeric_limits<double>::infinity();
  const double sep2 = min_separation * min_separation;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = i + 1; j < cloud.size(); ++j) {
      double dx = cloud[i][0] - cloud[j][0];
      double dy = cloud[i][1] - cloud[j][1];
      if (dx * dx + dy * dy < sep2) continue;
      double mx = (cloud[i][0] + cloud[j][0]) / 2.0 - p[0];
      double my = (cloud[i][1] + cloud[j][1]) / 2.0 - p[1];
      margin = std::min(margin, std::sqrt(mx * mx + my * my));
    }
  }
  return margin;
}

bool ExtremalityReport::all_extremal(double floor) const {
  for (double m : margins)
    if (!(m > floor)) return false;
  return true;
}

ExtremalityReport verify_extremality(const PrincipalCurve& c,
                                     const std::vector<double>& t_grid,
                                     int hull_samples, std::uint64_t seed) {
  if (classify_curve(c) == CurveKind::kSegment)
    throw ValidationError("verify_extremality: SEGMENT curve rejected");
  if (hull_samples < 2)
    throw ValidationError("verify_extremality: need at least two samples");

  // Moment-set cloud projected to the (j, k) coordinate pair: pure states
  // plus pairwise mixtures so the midpoint test sees interior points too.
  const Subspace& s = c.subspace();
  Rng rng(seed);
  std::vector<std::array<double, 2>> cloud;
  cloud.reserve(2 * hull_samples);
  std::vector<std::array<double, 2>> pure;
  for (int i = 0; i < hull_samples; ++i) {
    Rng stream = rng.fork(i);
    Vector coeff = gaussian_vector(stream, s.dim());
    while (coeff.norm() < 1e-8) coeff = gaussian_vector(stream, s.dim());
    Vector v = s.frame() * (coeff / coeff.norm());
    pure.push_back({std::norm(v(c.j())), std::norm(v(c.k()))});
    cloud.push_back(pure.back());
  }
  Rng mix_rng = rng.fork(hull_samples + 7);
  for (int i = 0; i + 1 < hull_samples; ++i) {
    double wgt = mix_rng.uniform();
    cloud.push_back({wgt * pure[i][0] + (1.0 - wgt) * pure[i + 1][0],
                     wgt * pure[i][1] + (1.0 - wgt) * pure[i + 1][1]});
  }

  ExtremalityReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    CurveSample sample = eval_curve(c, t);
    std::array<double, 2> p{sample.moment.coords()(c.j()),
                            sample.moment.coords()(c.k())};
    double margin = midpoint_margin(p, cloud, 1e-6);
    report.t.push_back(t);
    report.margins.push_back(margin);
    report.min_margin = std::min(report.min_margin, margin);
  }
  return report;
}

GapReport check_non_intersection(const PrincipalCurve& a,
                                 const PrincipalCurve& b, int grid) {
  if (grid < 2) throw ValidationError("check_non_intersection: grid too small");
  if (a.subspace().ambient() != b.subspace().ambient() ||
      (a.subspace().frame() - b.subspace().frame()).norm() > 1e-12)
    throw ValidationError(
        "check_non_intersection: curves must share one subspace frame");
  bool same = a.j() == b.j() && a.k() == b.k();
  bool swapped = a.j() == b.k() && a.k() == b.j();
  if (same || swapped)
    throw ValidationError("check_non_intersection: index pairs identify the "
                          "same curve");
  if (classify_curve(a) == CurveKind::kSegment ||
      classify_curve(b) == CurveKind::kSegment)
    throw ValidationError("check_non_intersection: both curves must be "
                          "ellipse arcs");

  constexpr double kHalfPi = 1.5707963267948966;
  std::vector<RealVector> ga(grid), gb(grid);
  std::vector<double> ts(grid);
  for (int i = 0; i < grid; ++i) {
    double t = kHalfPi * i / (grid - 1);
    ts[i] = t;
    ga[i] = eval_curve(a, t).moment.coords();
    gb[i] = eval_curve(b, t).moment.coords();
  }
  GapReport report;
  report.min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double gap = (ga[i] - gb[j]).cwiseAbs().sum();
      if (gap < report.min_gap) {
        report.min_gap = gap;
        report.t_at = ts[i];
        report.u_at = ts[j];
      }
    }
  report.intersects = report.min_gap < 1e-8;
  return report;
}

}  // namespace minop

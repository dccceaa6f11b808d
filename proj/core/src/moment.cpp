#include "minop/moment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "minop/rng.hpp"

namespace minop {
namespace {

// PSD part of a hermitian matrix (eigenvalue clipping).
Matrix psd_part(const Matrix& z) {
  Matrix h = (z + z.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  RealVector clipped = es.eigenvalues().cwiseMax(0.0);
  Matrix out = es.eigenvectors() * clipped.cast<Complex>().asDiagonal() *
               es.eigenvectors().adjoint();
  return (out + out.adjoint()) / 2.0;
}

// max_{y in m_S} <d, y> and its maximizer coordinates |v|^2.
double moment_support(const Subspace& s, const RealVector& d, RealVector* argmax) {
  Matrix raw = s.frame().adjoint() * (d.cast<Complex>().asDiagonal() * s.frame());
  Matrix m = (raw + raw.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const int top = static_cast<int>(es.eigenvalues().size()) - 1;
  if (argmax) {
    Vector v = s.frame() * es.eigenvectors().col(top);
    *argmax = v.cwiseAbs2();
  }
  return es.eigenvalues()(top);
}

}  // namespace

MomentVerdict moment_membership(const Subspace& s, const MomentPoint& x,
                                double tol, SolverConfig config) {
  if (x.dim() != s.ambient())
    throw ValidationError("moment_membership: point dimension mismatch");

  MomentVerdict out;
  const RealVector& target = x.coords();
  const int na = s.ambient();
  const int r = s.dim();

  // Compressed form: Diag(F sigma F*)_q = <h_q, sigma h_q> with h_q the
  // conjugated q-th frame row, so membership asks for a PSD sigma meeting n
  // real linear constraints (trace one is implied, sum_q h_q h_q* = I).
  std::vector<Vector> h(na);
  std::vector<Matrix> dyads(na);
  for (int q = 0; q < na; ++q) {
    h[q] = s.frame().row(q).adjoint();
    dyads[q] = h[q] * h[q].adjoint();
  }
  RealMatrix gram(na, na);
  for (int p = 0; p < na; ++p)
    for (int q = 0; q <= p; ++q) {
      double g = std::norm(h[p].dot(h[q]));
      gram(p, q) = g;
      gram(q, p) = g;
    }
  Eigen::CompleteOrthogonalDecomposition<RealMatrix> gram_solver(gram);
  auto constraint_values = [&](const Matrix& sigma) {
    RealVector v(na);
    for (int q = 0; q < na; ++q) v(q) = (h[q].adjoint() * sigma * h[q])(0, 0).real();
    return v;
  };

  // Douglas-Rachford between the PSD cone and the affine constraint slice;
  // the reflected affine step uses the pseudo-inverse of the dyad Gram matrix.
  Matrix z = Matrix::Identity(r, r) / static_cast<double>(r);
  double best_residual = std::numeric_limits<double>::infinity();
  int since_improvement = 0;
  int iter = 0;
  Matrix witness = z;
  for (; iter < config.max_iterations; ++iter) {
    Matrix pc = psd_part(z);
    double trace = pc.trace().real();
    double residual = std::numeric_limits<double>::infinity();
    Matrix sigma;
    if (trace > 1e-14) {
      sigma = pc / trace;
      residual = (constraint_values(sigma) - target).cwiseAbs().sum();
    }
    if (best_residual - residual >
        config.stall_improvement * std::max(1.0, residual)) {
      best_residual = residual;
      witness = sigma;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (residual <= tol) {
      Matrix lifted = s.frame() * sigma * s.frame().adjoint();
      out.status = Feasibility::kFeasible;
      out.witness = DensityMatrix(HermitianMatrix((lifted + lifted.adjoint()) / 2.0));
      out.residual = residual;
      out.iterations = iter + 1;
      return out;
    }
    if (since_improvement >= config.stall_window) {
      ++iter;
      break;
    }
    Matrix refl = 2.0 * pc - z;
    RealVector c = gram_solver.solve(target - constraint_values(refl));
    Matrix pa = refl;
    for (int q = 0; q < na; ++q) pa += Complex(c(q), 0.0) * dyads[q];
    z += pa - pc;
  }
  out.iterations = iter;
  out.residual = best_residual;

  // Separating direction search: maximize <d, x> - max_{y in m_S} <d, y>
  // over the sup-norm ball by projected subgradient ascent.
  const int n = s.ambient();
  Rng rng(config.seed);
  RealVector best_d;
  double best_margin = -std::numeric_limits<double>::infinity();
  RealVector gap_seed = target - constraint_values(witness);
  for (int restart = 0; restart < config.certificate_restarts; ++restart) {
    Rng stream = rng.fork(restart);
    RealVector d(n);
    if (restart == 0 && gap_seed.cwiseAbs().maxCoeff() > 0) {
      d = gap_seed / gap_seed.cwiseAbs().maxCoeff();
    } else if (restart == 1) {
      for (int i = 0; i < n; ++i) d(i) = gap_seed(i) >= 0 ? 1.0 : -1.0;
    } else {
      for (int i = 0; i < n; ++i) d(i) = 2.0 * stream.uniform() - 1.0;
    }
    for (int it = 0; it < config.certificate_iterations; ++it) {
      RealVector arg;
      double sup = moment_support(s, d, &arg);
      double margin = target.dot(d) - sup;
      double norm = d.cwiseAbs().maxCoeff();
      if (norm > 1e-14 && margin / norm > best_margin) {
        best_margin = margin / norm;
        best_d = d / norm;
      }
      RealVector g = target - arg;
      double step = 0.5 / std::sqrt(static_cast<double>(it + 1));
      d += step * g;
      d = d.cwiseMax(-1.0).cwiseMin(1.0);
    }
  }
  if (best_margin > tol) {
    out.status = Feasibility::kInfeasible;
    out.direction = best_d;
    out.margin = best_margin;
    return out;
  }
  out.status = Feasibility::kUndecided;
  out.margin = best_margin;
  return out;
}

std::vector<MomentPoint> sample_moment_extremes(const Subspace& s, int count,
                                                std::uint64_t seed) {
  if (count < 0) throw ValidationError("sample_moment_extremes: negative count");
  Rng rng(seed);
  std::vector<MomentPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng stream = rng.fork(i);
    Vector c = gaussian_vector(stream, s.dim());
    while (c.norm() < 1e-8) c = gaussian_vector(stream, s.dim());
    Vector v = s.frame() * (c / c.norm());
    out.emplace_back(v.cwiseAbs2().cwiseMax(0.0));
  }
  return out;
}

double hausdorff_upper_estimate(const Subspace& s, const Subspace& v,
                                int samples, std::uint64_t seed) {
  if (s.ambient() != v.ambient())
    throw ValidationError("hausdorff_upper_estimate: ambient dimensions differ");
  if (samples < 1) throw ValidationError("hausdorff_upper_estimate: samples < 1");
  std::vector<MomentPoint> xs = sample_moment_extremes(s, samples, seed);
  std::vector<MomentPoint> ys = sample_moment_extremes(v, samples, seed);
  auto one_sided = [](const std::vector<MomentPoint>& a,
                      const std::vector<MomentPoint>& b) {
    double worst = 0.0;
    for (const auto& p : a) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& q : b)
        nearest = std::min(nearest,
                           (p.coords() - q.coords()).cwiseAbs().maxCoeff());
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(one_sided(xs, ys), one_sided(ys, xs));
}

std::vector<RealVector> truncated_moment_projection(const Subspace& s, int m,
                                                    int samples,
                                                    std::uint64_t seed) {
  if (m < 1 || m > s.ambient())
    throw ValidationError("truncated_moment_projection: m outside [1, ambient]");
  std::vector<RealVector> out;
  out.reserve(samples);
  for (const auto& p : sample_moment_extremes(s, samples, seed))
    out.push_back(p.coords().head(m));
  return out;
}

}  // namespace minop

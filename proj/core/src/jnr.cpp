#include "minop/jnr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "minop/hermitian.hpp"
#include "minop/rng.hpp"

namespace minop {
namespace {

Matrix combine(const HermitianFamily& f, const RealVector& d) {
  Matrix m = Matrix::Zero(f.dim(), f.dim());
  for (int i = 0; i < f.size(); ++i) m += Complex(d(i), 0.0) * f.member(i).mat();
  return (m + m.adjoint()) / 2.0;
}

// PSD part of a hermitian matrix (eigenvalue clipping).
Matrix psd_part(const Matrix& z) {
  Matrix h = (z + z.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  RealVector clipped = es.eigenvalues().cwiseMax(0.0);
  Matrix out = es.eigenvectors() * clipped.cast<Complex>().asDiagonal() *
               es.eigenvectors().adjoint();
  return (out + out.adjoint()) / 2.0;
}

RealVector evaluate_raw(const HermitianFamily& f, const Matrix& rho) {
  RealVector v(f.size());
  for (int i = 0; i < f.size(); ++i)
    v(i) = (rho * f.member(i).mat()).trace().real();
  return v;
}

}  // namespace

HermitianFamily::HermitianFamily(std::vector<HermitianMatrix> members)
    : members_(std::move(members)) {
  if (members_.empty())
    throw ValidationError("HermitianFamily: need at least one member");
  for (const auto& m : members_) {
    if (m.dim() != members_[0].dim())
      throw ValidationError("HermitianFamily: inconsistent member dimensions");
    norm_bound_ = std::max(norm_bound_, operator_norm(m));
  }
}

HermitianFamily ase_family(const Subspace& s, int m) {
  if (m < 1 || m > s.ambient())
    throw ValidationError("ase_family: member count outside [1, ambient]");
  Matrix p = s.projector().mat();
  std::vector<HermitianMatrix> members;
  members.reserve(m);
  for (int j = 0; j < m; ++j) {
    Matrix a = p.col(j) * p.col(j).adjoint();
    members.emplace_back((a + a.adjoint()) / 2.0);
  }
  return HermitianFamily(std::move(members));
}

JnrPoint evaluate(const HermitianFamily& f, const DensityMatrix& rho) {
  if (rho.dim() != f.dim())
    throw ValidationError("evaluate: density dimension mismatch");
  JnrPoint out(f.size());
  double allowed = 1e-12 * std::max(1.0, f.norm_bound());
  for (int i = 0; i < f.size(); ++i) {
    Complex tr = (rho.mat() * f.member(i).mat()).trace();
    if (std::abs(tr.imag()) > allowed)
      throw ValidationError("evaluate: trace imaginary residual " +
                            std::to_string(tr.imag()) + " at member " +
                            std::to_string(i));
    out(i) = tr.real();
  }
  return out;
}

SupportFunctionValue support_function(const HermitianFamily& f,
                                      const RealVector& d) {
  if (d.size() != f.size())
    throw ValidationError("support_function: direction length mismatch");
  EigenDecomposition ed = eigen_hermitian(HermitianMatrix(combine(f, d)));
  Vector u = ed.eigenvectors.col(0);
  Matrix dyad = u * u.adjoint();
  return {ed.eigenvalues(0),
          DensityMatrix(HermitianMatrix((dyad + dyad.adjoint()) / 2.0))};
}

JnrVerdict jnr_membership(const HermitianFamily& f, const JnrPoint& z,
                          double tol, SolverConfig config) {
  if (z.size() != f.size())
    throw ValidationError("jnr_membership: point length mismatch");
  const int n = f.dim();
  const int m = f.size();

  // Affine slice {rho : tr(rho A_i) = z_i, tr(rho) = 1} with the identity
  // appended as one more constraint operator; its Gram matrix under the
  // trace inner product drives the exact affine projection.
  std::vector<Matrix> ops;
  ops.reserve(m + 1);
  for (int i = 0; i < m; ++i) ops.push_back(f.member(i).mat());
  ops.push_back(Matrix::Identity(n, n));
  RealVector target(m + 1);
  target.head(m) = z;
  target(m) = 1.0;
  RealMatrix gram(m + 1, m + 1);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= i; ++j) {
      double g = (ops[i] * ops[j]).trace().real();
      gram(i, j) = g;
      gram(j, i) = g;
    }
  Eigen::CompleteOrthogonalDecomposition<RealMatrix> gram_solver(gram);
  auto constraint_values = [&](const Matrix& rho) {
    RealVector v(m + 1);
    v.head(m) = evaluate_raw(f, rho);
    v(m) = rho.trace().real();
    return v;
  };

  // Douglas-Rachford between the PSD cone and the affine slice.
  JnrVerdict out;
  Matrix y = Matrix::Identity(n, n) / static_cast<double>(n);
  double best_residual = std::numeric_limits<double>::infinity();
  Matrix witness = y;
  int since_improvement = 0;
  int iter = 0;
  for (; iter < config.max_iterations; ++iter) {
    Matrix pc = psd_part(y);
    double trace = pc.trace().real();
    double residual = std::numeric_limits<double>::infinity();
    Matrix rho;
    if (trace > 1e-14) {
      rho = pc / trace;
      residual = (evaluate_raw(f, rho) - z).cwiseAbs().sum();
    }
    if (best_residual - residual >
        config.stall_improvement * std::max(1.0, residual)) {
      best_residual = residual;
      witness = rho;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (residual <= tol || since_improvement >= config.stall_window) {
      ++iter;
      break;
    }
    Matrix refl = 2.0 * pc - y;
    RealVector c = gram_solver.solve(target - constraint_values(refl));
    Matrix pa = refl;
    for (int i = 0; i <= m; ++i) pa += Complex(c(i), 0.0) * ops[i];
    y += pa - pc;
  }
  out.iterations = iter;
  out.residual = best_residual;

  // Separation margin sup_{|d|_2 <= 1} <d, z> - h(d) by projected
  // subgradient ascent; h's subgradient at d is the evaluation of the
  // maximizing dyad.
  Rng rng(config.seed);
  double best_margin = -std::numeric_limits<double>::infinity();
  RealVector best_d;
  RealVector seed_dir = z - evaluate_raw(f, witness);
  for (int restart = 0; restart < config.certificate_restarts; ++restart) {
    Rng stream = rng.fork(restart);
    RealVector d(m);
    if (restart == 0 && seed_dir.norm() > 1e-14) {
      d = seed_dir / seed_dir.norm();
    } else {
      for (int i = 0; i < m; ++i) d(i) = stream.normal();
      if (d.norm() < 1e-14) d.setOnes();
      d /= d.norm();
    }
    for (int it = 0; it < config.certificate_iterations; ++it) {
      EigenDecomposition ed = eigen_hermitian(HermitianMatrix(combine(f, d)));
      Vector u = ed.eigenvectors.col(0);
      Matrix dyad = u * u.adjoint();
      double margin = z.dot(d) - ed.eigenvalues(0);
      double norm = d.norm();
      if (norm > 1e-14 && margin / norm > best_margin) {
        best_margin = margin / norm;
        best_d = d / norm;
      }
      RealVector g = z - evaluate_raw(f, dyad);
      d += (0.5 / std::sqrt(static_cast<double>(it + 1))) * g;
      if (d.norm() > 1.0) d /= d.norm();
    }
  }
  out.margin = best_margin;

  if (best_margin > tol) {
    out.status = JnrMembership::kOutside;
    out.direction = best_d;
    return out;
  }
  if (best_margin >= -tol) {
    out.status = JnrMembership::kOnBoundary;
    out.direction = best_d;
    if (best_residual <= tol)
      out.witness = DensityMatrix(HermitianMatrix(witness));
    return out;
  }
  if (best_residual <= tol) {
    out.status = JnrMembership::kInside;
    out.witness = DensityMatrix(HermitianMatrix(witness));
    return out;
  }
  out.status = JnrMembership::kUndecided;
  return out;
}

double radius_p(const Subspace& s, int m, double p, int samples,
                std::uint64_t seed) {
  if (p < 1.0) throw ValidationError("radius_p: p must be >= 1");
  if (m < 1 || m > s.ambient())
    throw ValidationError("radius_p: m outside [1, ambient]");
  if (samples < 1) throw ValidationError("radius_p: samples < 1");
  const Matrix& fr = s.frame();
  const int r = s.dim();

  // p = 1 collapses to a top eigenvalue: sum of the first m squared
  // coordinates of a unit v in S is a quadratic form.
  if (p == 1.0) {
    Matrix head = fr.topRows(m);
    Matrix q = head.adjoint() * head;
    Eigen::SelfAdjointEigenSolver<Matrix> es((q + q.adjoint()) / 2.0,
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  }

  auto value = [&](const Vector& c) {
    Vector v = fr * c;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += std::pow(std::norm(v(i)), p);
    return std::pow(acc, 1.0 / p);
  };

  Rng rng(seed);
  double best = 0.0;
  Vector best_c = Vector::Zero(r);
  for (int i = 0; i < samples; ++i) {
    Rng stream = rng.fork(i);
    Vector c = gaussian_vector(stream, r);
    while (c.norm() < 1e-8) c = gaussian_vector(stream, r);
    c /= c.norm();
    double val = value(c);
    if (val > best) {
      best = val;
      best_c = c;
    }
  }

  // Polish the best sample by projected gradient ascent on the unit sphere
  // of frame coefficients.
  Vector c = best_c;
  double current = best;
  double step = 0.5;
  for (int it = 0; it < 400 && step > 1e-14; ++it) {
    Vector v = fr * c;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += std::pow(std::norm(v(i)), p);
    if (acc <= 0.0) break;
    Vector weighted = Vector::Zero(s.ambient());
    double outer = std::pow(acc, 1.0 / p - 1.0);
    for (int i = 0; i < m; ++i)
      weighted(i) = outer * std::pow(std::norm(v(i)), p - 1.0) * v(i);
    Vector grad = fr.adjoint() * weighted;
    Vector trial = c + step * grad;
    if (trial.norm() < 1e-14) {
      step /= 2.0;
      continue;
    }
    trial /= trial.norm();
    double tv = value(trial);
    if (tv > current) {
      c = trial;
      current = tv;
      step *= 1.2;
    } else {
      step /= 2.0;
    }
  }
  return std::max(best, current);
}

std::vector<JnrPoint> classic_jnr_sample(const HermitianFamily& f, int samples,
                                         std::uint64_t seed) {
  if (samples < 0) throw ValidationError("classic_jnr_sample: negative count");
  Rng rng(seed);
  std::vector<JnrPoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    Rng stream = rng.fork(i);
    Vector x = gaussian_vector(stream, f.dim());
    while (x.norm() < 1e-8) x = gaussian_vector(stream, f.dim());
    x /= x.norm();
    JnrPoint pt(f.size());
    for (int j = 0; j < f.size(); ++j)
      pt(j) = (x.adjoint() * f.member(j).mat() * x)(0, 0).real();
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<std::array<double, 2>> trace_boundary_2d(const HermitianFamily& f,
                                                     int j, int k,
                                                     int directions) {
  if (j < 0 || j >= f.size() || k < 0 || k >= f.size())
    throw ValidationError("trace_boundary_2d: member index out of range");
  if (j == k)
    throw ValidationError("trace_boundary_2d: coordinate slots must differ");
  if (directions < 1)
    throw ValidationError("trace_boundary_2d: need at least one direction");
  std::vector<std::array<double, 2>> out;
  out.reserve(directions);
  for (int i = 0; i < directions; ++i) {
    double theta = 2.0 * 3.14159265358979323846 * i / directions;
    RealVector d = RealVector::Zero(f.size());
    d(j) = std::cos(theta);
    d(k) = std::sin(theta);
    SupportFunctionValue sv = support_function(f, d);
    JnrPoint pt = evaluate(f, sv.maximizer);
    out.push_back({pt(j), pt(k)});
  }
  return out;
}

}  // namespace minop

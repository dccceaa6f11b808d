#include "minop/minimal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "minop/rng.hpp"

namespace minop {
namespace {

double norm_with_diag(const Matrix& a, const RealVector& d) {
  Matrix m = a;
  m.diagonal() += d.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return std::max(std::abs(es.eigenvalues().minCoeff()),
                  std::abs(es.eigenvalues().maxCoeff()));
}

// Subgradient of d -> |A + diag(d)|: the squared moduli of the eigenvector
// of the dominant extreme eigenvalue, signed by which end dominates.
RealVector norm_subgradient(const Matrix& a, const RealVector& d,
                            double* value) {
  Matrix m = a;
  m.diagonal() += d.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const int last = static_cast<int>(es.eigenvalues().size()) - 1;
  double top = es.eigenvalues()(last);
  double bottom = es.eigenvalues()(0);
  if (top >= -bottom) {
    *value = top;
    return es.eigenvectors().col(last).cwiseAbs2();
  }
  *value = -bottom;
  return -es.eigenvectors().col(0).cwiseAbs2();
}

// Golden-section minimization of the coordinate slice t -> |A + diag(d + t e_i)|.
double golden_coordinate(const Matrix& a, RealVector& d, int i, double width) {
  const double gr = 0.6180339887498949;
  double lo = d(i) - width, hi = d(i) + width;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  RealVector probe = d;
  probe(i) = x1;
  double f1 = norm_with_diag(a, probe);
  probe(i) = x2;
  double f2 = norm_with_diag(a, probe);
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      probe(i) = x1;
      f1 = norm_with_diag(a, probe);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      probe(i) = x2;
      f2 = norm_with_diag(a, probe);
    }
  }
  d(i) = (lo + hi) / 2.0;
  return norm_with_diag(a, d);
}

}  // namespace

MinimalCandidate make_candidate(Subspace s, Subspace v, double lambda,
                                std::optional<HermitianMatrix> r_part,
                                const Tolerances& tol) {
  (void)tol;
  if (s.ambient() != v.ambient())
    throw ValidationError("make_candidate: ambient dimensions differ");
  if (!(lambda > 0.0))
    throw ValidationError("make_candidate: lambda must be positive");
  double overlap = subspace_overlap(s, v);
  if (overlap > 1e-10)
    throw ValidationError("make_candidate: subspaces not orthogonal, overlap " +
                          std::to_string(overlap));
  const int n = s.ambient();
  HermitianMatrix r = r_part.has_value()
                          ? std::move(*r_part)
                          : HermitianMatrix(Matrix::Zero(n, n));
  if (r.dim() != n)
    throw ValidationError("make_candidate: remainder dimension mismatch");
  Matrix ps = s.projector().mat();
  Matrix pv = v.projector().mat();
  double off_s = std::max((ps * r.mat()).norm(), (r.mat() * ps).norm());
  double off_v = std::max((pv * r.mat()).norm(), (r.mat() * pv).norm());
  if (off_s > 1e-10 || off_v > 1e-10)
    throw ValidationError("make_candidate: remainder range not orthogonal to "
                          "the subspaces (residual " +
                          std::to_string(std::max(off_s, off_v)) + ")");
  double rnorm = operator_norm(r);
  if (rnorm > lambda + 1e-12)
    throw ValidationError("make_candidate: |R| = " + std::to_string(rnorm) +
                          " exceeds lambda = " + std::to_string(lambda));
  return MinimalCandidate{std::move(s), std::move(v), lambda, std::move(r)};
}

HermitianMatrix assemble(const MinimalCandidate& c) {
  Matrix a = c.lambda * (c.s.projector().mat() - c.v.projector().mat()) +
             c.r_part.mat();
  HermitianMatrix out((a + a.adjoint()) / 2.0);
  double norm = operator_norm(out);
  if (std::abs(norm - c.lambda) > 1e-8 * std::max(1.0, c.lambda))
    throw std::runtime_error("assemble: operator norm " + std::to_string(norm) +
                             " drifted from lambda " + std::to_string(c.lambda));
  return out;
}

OracleResult oracle_distance_to_diagonals(const HermitianMatrix& a,
                                          const OracleConfig& config) {
  const int n = a.dim();
  if (n > config.dimension_cap)
    throw ValidationError("oracle_distance_to_diagonals: dimension " +
                          std::to_string(n) + " above cap " +
                          std::to_string(config.dimension_cap));

  RealVector best_d = RealVector::Zero(n);
  double best = norm_with_diag(a.mat(), best_d);

  std::vector<RealVector> starts;
  starts.push_back(RealVector::Zero(n));
  starts.push_back(-a.mat().diagonal().real());
  for (const RealVector& start : starts) {
    RealVector d = start;
    double f0 = norm_with_diag(a.mat(), d);
    if (f0 < best) {
      best = f0;
      best_d = d;
    }
    double scale = std::max(f0, 1e-12);
    int stale = 0;
    for (int it = 0; it < config.iterations && stale < config.patience; ++it) {
      double value;
      RealVector g = norm_subgradient(a.mat(), d, &value);
      if (value < best - 1e-12 * scale) {
        best = value;
        best_d = d;
        stale = 0;
      } else {
        ++stale;
      }
      double step = 0.2 * scale / std::sqrt(static_cast<double>(it + 1));
      d -= step * g;
    }
  }

  // Coordinatewise golden-section polish for tiny dimensions.
  if (n <= 4) {
    RealVector d = best_d;
    double width = std::max(1.0, 2.0 * best);
    for (int sweep = 0; sweep < 300; ++sweep) {
      double before = best;
      for (int i = 0; i < n; ++i) {
        double val = golden_coordinate(a.mat(), d, i, width);
        if (val < best) {
          best = val;
          best_d = d;
        } else {
          d = best_d;
        }
      }
      width = std::max(width / 2.0, 1e-6);
      if (before - best < 1e-10) break;
    }
  }
  return OracleResult{best, best_d};
}

namespace {

// Turn a NO_SUPPORT separating direction into an explicit improving
// diagonal: shift the direction to straddle the two compressions, then line
// search the push size.  Falls back to the full oracle when the line search
// cannot clear the decision tolerance.
std::optional<RealVector> improving_diagonal_from_certificate(
    const HermitianMatrix& a, const MinimalCandidate& c,
    const SupportCertificate& cert, double needed_gap) {
  double lam = c.lambda;
  RealVector d = cert.direction;
  Matrix ms = c.s.frame().adjoint() * (d.cast<Complex>().asDiagonal() * c.s.frame());
  Matrix mv = c.v.frame().adjoint() * (d.cast<Complex>().asDiagonal() * c.v.frame());
  Eigen::SelfAdjointEigenSolver<Matrix> es((ms + ms.adjoint()) / 2.0,
                                           Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Matrix> ev((mv + mv.adjoint()) / 2.0,
                                           Eigen::EigenvaluesOnly);
  double hi_s = es.eigenvalues().maxCoeff();
  double lo_v = ev.eigenvalues().minCoeff();
  // The compression of d to S tops out at hi_s while its compression to V
  // stays above lo_v > hi_s, so after centering at the midpoint a positive
  // multiple pulls the +lambda eigenspace down and the -lambda one up.
  RealVector centered =
      d - RealVector::Constant(d.size(), (hi_s + lo_v) / 2.0);
  double base = operator_norm(a);
  double best = base;
  RealVector best_d;
  for (double eps = 1e-4 * lam; eps <= 4.0 * lam; eps *= 1.6) {
    RealVector trial = eps * centered;
    double val = norm_with_diag(a.mat(), trial);
    if (val < best) {
      best = val;
      best_d = trial;
    }
  }
  if (best < base - needed_gap) return best_d;
  return std::nullopt;
}

MinimalityCertificate decide_with_oracle(const HermitianMatrix& a,
                                         double lambda,
                                         const OracleConfig& oracle) {
  MinimalityCertificate out;
  out.route = CertificateRoute::kOracle;
  out.lambda = lambda;
  OracleResult res = oracle_distance_to_diagonals(a, oracle);
  out.distance = res.distance;
  if (res.distance >= lambda - oracle.tol) {
    out.status = MinimalStatus::kMinimal;
    out.best_diagonal = RealVector::Zero(a.dim());
  } else {
    out.status = MinimalStatus::kNotMinimal;
    out.best_diagonal = res.best_diagonal;
  }
  return out;
}

}  // namespace

MinimalityCertificate certify_by_support(const MinimalCandidate& c,
                                         const SolverConfig& config,
                                         const OracleConfig& oracle) {
  MinimalityCertificate out;
  out.route = CertificateRoute::kSupportTheorem;
  out.lambda = c.lambda;
  HermitianMatrix a = assemble(c);
  SupportVerdict verdict = decide_support(c.s, c.v, config);
  out.support = verdict;
  switch (verdict.status) {
    case SupportStatus::kSupport:
      out.status = MinimalStatus::kMinimal;
      out.distance = c.lambda;  // minimality pins the distance at |A|
      out.best_diagonal = RealVector::Zero(a.dim());
      return out;
    case SupportStatus::kNoSupport: {
      std::optional<RealVector> d = improving_diagonal_from_certificate(
          a, c, *verdict.certificate, oracle.tol);
      if (!d && a.dim() <= oracle.dimension_cap) {
        OracleResult res = oracle_distance_to_diagonals(a, oracle);
        if (res.distance < c.lambda - oracle.tol) d = res.best_diagonal;
      }
      if (d) {
        out.status = MinimalStatus::kNotMinimal;
        out.best_diagonal = std::move(*d);
        out.distance = norm_with_diag(a.mat(), *out.best_diagonal);
      } else {
        // The separation is real but too thin to exhibit a diagonal that
        // clears the decision tolerance; stay undecided rather than emit a
        // certificate that cannot be re-verified.
        out.status = MinimalStatus::kUndecided;
        out.note = "no-support margin too thin for a re-verifiable diagonal";
      }
      return out;
    }
    case SupportStatus::kUndecided:
      out.status = MinimalStatus::kUndecided;
      return out;
  }
  return out;
}

MinimalityCertificate certify_matrix(const HermitianMatrix& a,
                                     CertificateRoute route,
                                     const SolverConfig& config,
                                     const OracleConfig& oracle) {
  double lambda = operator_norm(a);
  if (lambda <= 1e-14) {
    // The zero matrix is trivially minimal.
    MinimalityCertificate out;
    out.status = MinimalStatus::kMinimal;
    out.route = CertificateRoute::kOracle;
    out.lambda = lambda;
    out.distance = 0.0;
    out.best_diagonal = RealVector::Zero(a.dim());
    return out;
  }

  if (route == CertificateRoute::kOracle)
    return decide_with_oracle(a, lambda, oracle);

  // Extract the extreme eigenspaces.
  EigenDecomposition ed = eigen_hermitian(a);
  double gap = 1e-9 * std::max(1.0, lambda);
  std::vector<Vector> plus, minus;
  std::vector<int> middle;
  for (int i = 0; i < a.dim(); ++i) {
    if (ed.eigenvalues(i) >= lambda - gap)
      plus.push_back(ed.eigenvectors.col(i));
    else if (ed.eigenvalues(i) <= -lambda + gap)
      minus.push_back(ed.eigenvectors.col(i));
    else
      middle.push_back(i);
  }

  if (plus.empty() || minus.empty()) {
    // One-sided spectrum: the support route does not apply; only the
    // oracle decides.
    if (a.dim() <= oracle.dimension_cap) {
      MinimalityCertificate out = decide_with_oracle(a, lambda, oracle);
      out.note = "one-sided spectrum, decided by oracle";
      return out;
    }
    MinimalityCertificate out;
    out.status = MinimalStatus::kUndecided;
    out.route = CertificateRoute::kOracle;
    out.lambda = lambda;
    out.note = "one-sided spectrum and dimension above oracle cap";
    return out;
  }

  Matrix fs(a.dim(), static_cast<int>(plus.size()));
  for (std::size_t i = 0; i < plus.size(); ++i) fs.col(i) = plus[i];
  Matrix fv(a.dim(), static_cast<int>(minus.size()));
  for (std::size_t i = 0; i < minus.size(); ++i) fv.col(i) = minus[i];
  Matrix rm = Matrix::Zero(a.dim(), a.dim());
  for (int i : middle)
    rm += Complex(ed.eigenvalues(i), 0.0) * ed.eigenvectors.col(i) *
          ed.eigenvectors.col(i).adjoint();
  MinimalCandidate cand =
      make_candidate(Subspace(fs), Subspace(fv), lambda,
                     HermitianMatrix((rm + rm.adjoint()) / 2.0));

  MinimalityCertificate sup = certify_by_support(cand, config, oracle);
  if (route == CertificateRoute::kSupportTheorem) return sup;

  MinimalityCertificate orc = decide_with_oracle(a, lambda, oracle);
  MinimalityCertificate out = sup;
  out.route = CertificateRoute::kBoth;
  out.distance = orc.distance;
  if (sup.status == MinimalStatus::kUndecided) {
    out.status = orc.status;
    out.best_diagonal = orc.best_diagonal;
    return out;
  }
  if (orc.status != sup.status) {
    out.status = MinimalStatus::kUndecided;
    out.note = "support and oracle routes disagree";
    return out;
  }
  if (sup.status == MinimalStatus::kNotMinimal &&
      orc.distance < norm_with_diag(a.mat(), *sup.best_diagonal))
    out.best_diagonal = orc.best_diagonal;
  return out;
}

RSweepReport sweep_r_part(const Subspace& s, const Subspace& v, double lambda,
                          int trials, std::uint64_t seed,
                          const SolverConfig& config,
                          const OracleConfig& oracle) {
  if (trials < 1) throw ValidationError("sweep_r_part: trials < 1");
  if (!(lambda > 0.0)) throw ValidationError("sweep_r_part: lambda must be positive");
  const int n = s.ambient();
  if (n > oracle.dimension_cap)
    throw ValidationError("sweep_r_part: dimension above oracle cap");
  SupportVerdict verdict = decide_support(s, v, config);
  if (verdict.status != SupportStatus::kSupport)
    throw ValidationError("sweep_r_part: pair did not certify SUPPORT");
  const int w = n - s.dim() - v.dim();
  if (w < 1)
    throw ValidationError("sweep_r_part: no orthogonal complement for R");
  Subspace comp = orthogonal_complement(direct_sum(s, v));

  RSweepReport report;
  Rng rng(seed);
  const double alphas[] = {0.0, 0.5, 0.99};
  int stream_idx = 0;
  for (double alpha : alphas) {
    int runs = alpha == 0.0 ? 1 : trials;
    for (int trial = 0; trial < runs; ++trial) {
      Matrix r = Matrix::Zero(n, n);
      if (alpha > 0.0) {
        Rng stream = rng.fork(stream_idx++);
        Matrix g = gaussian_matrix(stream, w, w);
        HermitianMatrix hm((g + g.adjoint()) / 2.0);
        double nrm = operator_norm(hm);
        while (nrm < 1e-12) {
          g = gaussian_matrix(stream, w, w);
          hm = HermitianMatrix((g + g.adjoint()) / 2.0);
          nrm = operator_norm(hm);
        }
        r = comp.frame() * (alpha * lambda / nrm * hm.mat()) *
            comp.frame().adjoint();
      }
      MinimalCandidate cand = make_candidate(
          s, v, lambda, HermitianMatrix((r + r.adjoint()) / 2.0));
      HermitianMatrix a = assemble(cand);
      OracleResult res = oracle_distance_to_diagonals(a, oracle);
      double deviation = std::abs(res.distance - lambda);
      report.rows.push_back({alpha, trial, res.distance, deviation});
      report.max_deviation = std::max(report.max_deviation, deviation);
      if (res.distance < lambda - oracle.tol) report.all_minimal = false;
    }
  }
  return report;
}

}  // namespace minop

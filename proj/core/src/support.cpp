#include "minop/support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "minop/hermitian.hpp"
#include "minop/rng.hpp"

namespace minop {
namespace {

// Compressed coordinate dyad: F* E_q F = g g* with g the conjugated q-th
// frame row.
Vector frame_row_conj(const Subspace& s, int q) {
  return s.frame().row(q).adjoint();
}

struct CompressedEig {
  double lambda_max;
  double lambda_min;
  Vector top;
  Vector bottom;
};

// Spectral data of F* diag(d) F.
CompressedEig compressed_eig(const Subspace& s, const RealVector& d) {
  Matrix raw = s.frame().adjoint() * (d.cast<Complex>().asDiagonal() * s.frame());
  Matrix m = (raw + raw.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const int last = static_cast<int>(es.eigenvalues().size()) - 1;
  return {es.eigenvalues()(last), es.eigenvalues()(0),
          es.eigenvectors().col(last), es.eigenvectors().col(0)};
}

// Raw spectral-simplex density projection of an r x r hermitian block.
Matrix project_density_block(const Matrix& z) {
  Matrix h = (z + z.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  RealVector p = project_to_simplex(es.eigenvalues());
  Matrix out = es.eigenvectors() * p.asDiagonal() * es.eigenvectors().adjoint();
  return (out + out.adjoint()) / 2.0;
}

// Separating-direction search shared by both support routes.  Maximizes
//   margin(d) = lambda_min(F_v* diag(d) F_v) - lambda_max(F_s* diag(d) F_s)
// over the sup-norm ball, optionally restricted to a coordinate subset.
struct DirectionSearchResult {
  double margin = -std::numeric_limits<double>::infinity();
  RealVector direction;
};

DirectionSearchResult search_direction(const Subspace& s, const Subspace& v,
                                       const RealVector& seed_dir,
                                       const std::vector<int>* support_set,
                                       const SolverConfig& config) {
  const int n = s.ambient();
  std::vector<int> all;
  if (!support_set) {
    all.resize(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    support_set = &all;
  }
  Rng rng(config.seed);
  DirectionSearchResult best;
  for (int restart = 0; restart < config.certificate_restarts; ++restart) {
    Rng stream = rng.fork(restart);
    RealVector d = RealVector::Zero(n);
    if (restart == 0 && seed_dir.cwiseAbs().maxCoeff() > 1e-14) {
      for (int q : *support_set) d(q) = seed_dir(q);
      double norm = d.cwiseAbs().maxCoeff();
      if (norm > 1e-14) d /= norm;
    } else if (restart == 1) {
      for (int q : *support_set) d(q) = seed_dir(q) >= 0 ? 1.0 : -1.0;
    } else {
      for (int q : *support_set) d(q) = 2.0 * stream.uniform() - 1.0;
    }
    for (int it = 0; it < config.certificate_iterations; ++it) {
      CompressedEig es = compressed_eig(s, d);
      CompressedEig ev = compressed_eig(v, d);
      double margin = ev.lambda_min - es.lambda_max;
      double norm = d.cwiseAbs().maxCoeff();
      if (norm > 1e-14 && margin / norm > best.margin) {
        best.margin = margin / norm;
        best.direction = d / norm;
      }
      Vector sv = s.frame() * es.top;
      Vector vv = v.frame() * ev.bottom;
      double step = 0.5 / std::sqrt(static_cast<double>(it + 1));
      for (int q : *support_set)
        d(q) += step * (std::norm(vv(q)) - std::norm(sv(q)));
      d = d.cwiseMax(-1.0).cwiseMin(1.0);
    }
  }
  return best;
}

MomentPoint common_point(const Matrix& x, const Matrix& y) {
  return MomentPoint((x.diagonal().real() + y.diagonal().real()) / 2.0);
}

}  // namespace

DeltaMap::DeltaMap(Subspace s, Subspace v, const Tolerances& tol)
    : s_(std::move(s)),
      v_(std::move(v)),
      basis_s_(build_gellmann(s_.dim())),
      basis_v_(build_gellmann(v_.dim())) {
  if (s_.ambient() != v_.ambient())
    throw ValidationError("DeltaMap: ambient dimensions differ");
  double overlap = subspace_overlap(s_, v_);
  if (overlap > tol.rank)
    throw ValidationError("DeltaMap: subspaces are not orthogonal (overlap " +
                          std::to_string(overlap) + ")");
  const int n = s_.ambient();
  const int rs = s_.dim() * s_.dim();
  const int rv = v_.dim() * v_.dim();
  matrix_.resize(n, rs + rv);
  for (int q = 0; q < n; ++q) {
    Vector g = frame_row_conj(s_, q);
    Vector h = frame_row_conj(v_, q);
    // <g g*, W_i> = g* W_i g; all real since the basis is hermitian.
    for (int i = 0; i < rs; ++i)
      matrix_(q, i) = (g.adjoint() * basis_s_.elements[i] * g)(0, 0).real();
    for (int i = 0; i < rv; ++i)
      matrix_(q, rs + i) =
          -(h.adjoint() * basis_v_.elements[i] * h)(0, 0).real();
  }

  Eigen::JacobiSVD<RealMatrix> svd(matrix_);
  double sigma_max = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double cutoff = tol.rank * sigma_max;
  int svd_rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++svd_rank;

  // Lexicographically first maximal independent row set by greedy
  // Gram-Schmidt in row order.
  RealMatrix kept(std::min<int>(n, rs + rv), rs + rv);
  int nkept = 0;
  for (int q = 0; q < n; ++q) {
    RealVector row = matrix_.row(q);
    for (int pass = 0; pass < 2; ++pass)
      for (int c = 0; c < nkept; ++c) row -= kept.row(c).dot(row) * kept.row(c);
    if (row.norm() > cutoff) {
      kept.row(nkept++) = row / row.norm();
      row_basis_.push_back(q);
    }
  }
  if (nkept != svd_rank)
    throw std::runtime_error(
        "DeltaMap: greedy row rank " + std::to_string(nkept) +
        " disagrees with singular value rank " + std::to_string(svd_rank) +
        "; matrix is numerically borderline at the configured cutoff");
}

DeltaMap build_delta(const Subspace& s, const Subspace& v,
                     const Tolerances& tol) {
  return DeltaMap(s, v, tol);
}

double certificate_margin(const Subspace& s, const Subspace& v,
                          const RealVector& d) {
  if (d.size() != s.ambient())
    throw ValidationError("certificate_margin: direction length mismatch");
  CompressedEig es = compressed_eig(s, d);
  CompressedEig ev = compressed_eig(v, d);
  return ev.lambda_min - es.lambda_max;
}

SupportVerdict decide_support(const Subspace& s, const Subspace& v,
                              const SolverConfig& config) {
  if (s.ambient() != v.ambient())
    throw ValidationError("decide_support: ambient dimensions differ");
  const int n = s.ambient();

  // Dykstra-corrected alternating projections between the density product
  // D_S x D_V and the affine set of equal diagonals.  The affine projection
  // needs no correction term.
  Matrix x = s.projector().mat() / static_cast<double>(s.dim());
  Matrix y = v.projector().mat() / static_cast<double>(v.dim());
  Matrix inc_x = Matrix::Zero(n, n), inc_y = Matrix::Zero(n, n);

  double best_residual = std::numeric_limits<double>::infinity();
  Matrix best_x = x, best_y = y;
  int since_improvement = 0;
  int iter = 0;
  SupportVerdict out;
  for (; iter < config.max_iterations; ++iter) {
    Matrix xs = s.frame() *
                    project_density_block(s.frame().adjoint() * (x + inc_x) *
                                          s.frame()) *
                    s.frame().adjoint();
    Matrix ys = v.frame() *
                    project_density_block(v.frame().adjoint() * (y + inc_y) *
                                          v.frame()) *
                    v.frame().adjoint();
    inc_x = x + inc_x - xs;
    inc_y = y + inc_y - ys;

    RealVector dx = xs.diagonal().real();
    RealVector dy = ys.diagonal().real();
    double residual = (dx - dy).cwiseAbs().sum();
    if (best_residual - residual >
        config.stall_improvement * std::max(1.0, residual)) {
      best_residual = residual;
      best_x = xs;
      best_y = ys;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (residual <= config.tol) {
      out.status = SupportStatus::kSupport;
      out.witness = SupportWitness{DensityMatrix(HermitianMatrix(xs)),
                                   DensityMatrix(HermitianMatrix(ys)),
                                   common_point(xs, ys)};
      out.residual = residual;
      out.iterations = iter + 1;
      return out;
    }
    if (since_improvement >= config.stall_window) {
      ++iter;
      break;
    }

    RealVector common = (dx + dy) / 2.0;
    x = xs;
    x.diagonal() = common.cast<Complex>();
    y = ys;
    y.diagonal() = common.cast<Complex>();
  }
  out.iterations = iter;
  out.residual = best_residual;

  RealVector seed_dir =
      best_y.diagonal().real() - best_x.diagonal().real();
  DirectionSearchResult found =
      search_direction(s, v, seed_dir, nullptr, config);
  if (found.margin > config.tol) {
    out.status = SupportStatus::kNoSupport;
    out.certificate = SupportCertificate{found.direction, found.margin};
    return out;
  }
  out.status = SupportStatus::kUndecided;
  return out;
}

SupportVerdict support_via_truncated_jnr(const Subspace& s, const Subspace& v,
                                         const SolverConfig& config) {
  DeltaMap delta = build_delta(s, v);
  const std::vector<int>& q_set = delta.row_basis();
  const int m = static_cast<int>(q_set.size());
  const int r = s.dim(), t = v.dim();
  const int n = s.ambient();

  // Compressed coordinate dyads restricted to the selected rows.
  std::vector<Matrix> gs(m), gv(m);
  for (int i = 0; i < m; ++i) {
    Vector g = frame_row_conj(s, q_set[i]);
    Vector h = frame_row_conj(v, q_set[i]);
    gs[i] = g * g.adjoint();
    gv[i] = h * h.adjoint();
  }

  // Gram matrix of the stacked pairs (G_q, -H_q) for the affine projection
  // onto {tr(sigma G_q) = tr(omega H_q)}.
  RealMatrix gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) {
      double gij = (gs[i] * gs[j]).trace().real() +
                   (gv[i] * gv[j]).trace().real();
      gram(i, j) = gij;
      gram(j, i) = gij;
    }
  Eigen::LDLT<RealMatrix> gram_solver(gram);

  // Full lifted diagonals, for the stopping test: X_qq = g_q* sigma g_q.
  Matrix gs_all(r, n), gv_all(t, n);
  for (int q = 0; q < n; ++q) {
    gs_all.col(q) = frame_row_conj(s, q);
    gv_all.col(q) = frame_row_conj(v, q);
  }
  auto lifted_diag = [&](const Matrix& block, const Matrix& rows) {
    const int nn = static_cast<int>(rows.cols());
    RealVector d(nn);
    for (int q = 0; q < nn; ++q)
      d(q) = (rows.col(q).adjoint() * block * rows.col(q))(0, 0).real();
    return d;
  };

  Matrix sigma = Matrix::Identity(r, r) / static_cast<double>(r);
  Matrix omega = Matrix::Identity(t, t) / static_cast<double>(t);
  Matrix inc_s = Matrix::Zero(r, r), inc_o = Matrix::Zero(t, t);

  SupportVerdict out;
  double best_residual = std::numeric_limits<double>::infinity();
  Matrix best_sigma = sigma, best_omega = omega;
  int since_improvement = 0;
  int iter = 0;
  for (; iter < config.max_iterations; ++iter) {
    Matrix ps = project_density_block(sigma + inc_s);
    Matrix po = project_density_block(omega + inc_o);
    inc_s = sigma + inc_s - ps;
    inc_o = omega + inc_o - po;

    RealVector dx = lifted_diag(ps, gs_all);
    RealVector dy = lifted_diag(po, gv_all);
    double residual = (dx - dy).cwiseAbs().sum();
    if (best_residual - residual >
        config.stall_improvement * std::max(1.0, residual)) {
      best_residual = residual;
      best_sigma = ps;
      best_omega = po;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (residual <= config.tol) {
      Matrix x = s.frame() * ps * s.frame().adjoint();
      Matrix y = v.frame() * po * v.frame().adjoint();
      out.status = SupportStatus::kSupport;
      out.witness = SupportWitness{DensityMatrix(HermitianMatrix(x)),
                                   DensityMatrix(HermitianMatrix(y)),
                                   common_point(x, y)};
      out.residual = residual;
      out.iterations = iter + 1;
      return out;
    }
    if (since_improvement >= config.stall_window) {
      ++iter;
      break;
    }

    // Affine correction on the selected coordinates only.
    sigma = ps;
    omega = po;
    RealVector mismatch(m);
    for (int i = 0; i < m; ++i)
      mismatch(i) = (ps * gs[i]).trace().real() - (po * gv[i]).trace().real();
    RealVector c = gram_solver.solve(-mismatch);
    for (int i = 0; i < m; ++i) {
      sigma += Complex(c(i), 0.0) * gs[i];
      omega -= Complex(c(i), 0.0) * gv[i];
    }
  }
  out.iterations = iter;
  out.residual = best_residual;

  RealVector seed_dir =
      lifted_diag(best_omega, gv_all) - lifted_diag(best_sigma, gs_all);
  DirectionSearchResult found =
      search_direction(s, v, seed_dir, &q_set, config);
  if (found.margin > config.tol) {
    out.status = SupportStatus::kNoSupport;
    out.certificate = SupportCertificate{found.direction, found.margin};
    return out;
  }
  out.status = SupportStatus::kUndecided;
  return out;
}

std::vector<std::pair<HermitianMatrix, HermitianMatrix>> kernel_pairs(
    const DeltaMap& delta, int count) {
  if (count < 0) throw ValidationError("kernel_pairs: negative count");
  const int rs = delta.s().dim() * delta.s().dim();
  const int rv = delta.v().dim() * delta.v().dim();
  Eigen::JacobiSVD<RealMatrix> svd(delta.matrix(), Eigen::ComputeFullV);
  double sigma_max = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  double cutoff = default_tolerances().rank * sigma_max;
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;

  CompressedBasis bs = build_compressed(delta.s());
  CompressedBasis bv = build_compressed(delta.v());
  std::vector<std::pair<HermitianMatrix, HermitianMatrix>> out;
  const int n = delta.s().ambient();
  for (int col = rank; col < rs + rv && static_cast<int>(out.size()) < count;
       ++col) {
    RealVector k = svd.matrixV().col(col);
    Matrix a = Matrix::Zero(n, n), c = Matrix::Zero(n, n);
    for (int i = 0; i < rs; ++i) a += Complex(k(i), 0.0) * bs.elements[i];
    for (int i = 0; i < rv; ++i) c += Complex(k(rs + i), 0.0) * bv.elements[i];
    out.emplace_back(HermitianMatrix((a + a.adjoint()) / 2.0),
                     HermitianMatrix((c + c.adjoint()) / 2.0));
  }
  return out;
}

}  // namespace minop

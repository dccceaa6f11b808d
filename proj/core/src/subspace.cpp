#include "minop/subspace.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace minop {

Subspace::Subspace(Matrix frame, const Tolerances& tol) {
  if (frame.cols() < 1)
    throw ValidationError("Subspace: need at least one frame column");
  if (frame.cols() > frame.rows())
    throw ValidationError("Subspace: frame has more columns than rows");
  check_dim(static_cast<int>(frame.rows()), "Subspace");
  Matrix gram = frame.adjoint() * frame;
  double dev = (gram - Matrix::Identity(frame.cols(), frame.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw ValidationError("Subspace: frame not orthonormal, deviation " +
                          std::to_string(dev));
  (void)tol;
  frame_ = std::move(frame);
}

HermitianMatrix Subspace::projector() const {
  Matrix p = frame_ * frame_.adjoint();
  return HermitianMatrix((p + p.adjoint()) / 2.0);
}

MomentPoint::MomentPoint(RealVector coords) {
  if (coords.size() < 1) throw ValidationError("MomentPoint: empty coordinates");
  for (int i = 0; i < coords.size(); ++i)
    if (coords(i) < -1e-12)
      throw ValidationError("MomentPoint: coordinate " + std::to_string(i) +
                            " negative (" + std::to_string(coords(i)) + ")");
  double sum = coords.sum();
  if (std::abs(sum - 1.0) > 1e-10)
    throw ValidationError("MomentPoint: coordinate sum " + std::to_string(sum) +
                          " not 1 within 1e-10");
  coords_ = std::move(coords);
}

Subspace orthonormalize(const std::vector<Vector>& vectors, const Tolerances& tol) {
  if (vectors.empty()) throw ValidationError("orthonormalize: no vectors");
  const int n = static_cast<int>(vectors[0].size());
  check_dim(n, "orthonormalize");
  Matrix frame(n, static_cast<int>(vectors.size()));
  int cols = 0;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (static_cast<int>(vectors[k].size()) != n)
      throw ValidationError("orthonormalize: vector " + std::to_string(k) +
                            " has inconsistent length");
    Vector v = vectors[k];
    double orig = v.norm();
    // Two passes of Gram-Schmidt keep orthogonality at machine precision.
    for (int pass = 0; pass < 2; ++pass)
      for (int c = 0; c < cols; ++c)
        v -= frame.col(c) * (frame.col(c).dot(v));
    if (v.norm() <= tol.rank * std::max(orig, 1.0))
      throw ValidationError("orthonormalize: vector " + std::to_string(k) +
                            " is linearly dependent on its predecessors");
    frame.col(cols++) = v / v.norm();
  }
  return Subspace(frame.leftCols(cols));
}

GenericityReport is_generic(const Subspace& s, const Tolerances& tol) {
  GenericityReport report;
  report.generic = true;
  for (int j = 0; j < s.ambient(); ++j) {
    double overlap_sq = s.frame().row(j).squaredNorm();  // |P_S e_j|^2
    if (!(overlap_sq > tol.gen)) {
      report.generic = false;
      report.offending.push_back(j);
    }
  }
  return report;
}

PrincipalVector principal_vector(const Subspace& s, int j, const Tolerances& tol) {
  if (j < 0 || j >= s.ambient())
    throw ValidationError("principal_vector: index " + std::to_string(j) +
                          " outside [0, " + std::to_string(s.ambient()) + ")");
  Vector coeff = s.frame().row(j).adjoint();  // F* e_j
  double overlap = coeff.norm();              // = |P_S e_j|
  if (!(overlap > tol.gen))
    throw ValidationError("principal_vector: coordinate " + std::to_string(j) +
                          " has vanishing overlap " + std::to_string(overlap));
  PrincipalVector pv;
  pv.index = j;
  pv.overlap = overlap;
  pv.vector = s.frame() * (coeff / overlap);
  // (P_S e_j)_j = |P_S e_j|^2 is real positive, so after normalization the
  // j-th coordinate equals the overlap with no phase fixing needed.
  return pv;
}

MomentPoint centroid(const Subspace& s) {
  RealVector d(s.ambient());
  for (int j = 0; j < s.ambient(); ++j) d(j) = s.frame().row(j).squaredNorm();
  return MomentPoint(d / static_cast<double>(s.dim()));
}

MomentPoint centroid_orthogonal_sum(const Subspace& s, const Subspace& v,
                                    const Tolerances& tol) {
  (void)tol;
  if (s.ambient() != v.ambient())
    throw ValidationError("centroid_orthogonal_sum: ambient dimensions differ");
  double overlap = subspace_overlap(s, v);
  if (overlap > 1e-10)
    throw ValidationError("centroid_orthogonal_sum: subspaces not orthogonal, "
                          "overlap " + std::to_string(overlap));
  double r = s.dim(), t = v.dim();
  RealVector c = (r * centroid(s).coords() + t * centroid(v).coords()) / (r + t);
  return MomentPoint(std::move(c));
}

DensityMatrix project_density_on_subspace(const HermitianMatrix& z,
                                          const Subspace& s) {
  if (z.dim() != s.ambient())
    throw ValidationError("project_density_on_subspace: dimension mismatch");
  // Compress to the frame, project the spectrum onto the simplex, lift back.
  // Splitting z into its S-block and the rest shows this is the Frobenius
  // projection onto {Y supported on S, Y >= 0, tr Y = 1}.
  Matrix m = s.frame().adjoint() * z.mat() * s.frame();
  EigenDecomposition ed = eigen_hermitian(HermitianMatrix((m + m.adjoint()) / 2.0));
  RealVector p = project_to_simplex(ed.eigenvalues);
  Matrix core = ed.eigenvectors * p.asDiagonal() * ed.eigenvectors.adjoint();
  Matrix lifted = s.frame() * core * s.frame().adjoint();
  return DensityMatrix(HermitianMatrix((lifted + lifted.adjoint()) / 2.0));
}

double subspace_overlap(const Subspace& s, const Subspace& v) {
  if (s.ambient() != v.ambient())
    throw ValidationError("subspace_overlap: ambient dimensions differ");
  Matrix cross = s.frame().adjoint() * v.frame();
  Eigen::JacobiSVD<Matrix> svd(cross);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

Subspace orthogonal_complement(const Subspace& s) {
  const int n = s.ambient(), r = s.dim();
  if (r >= n)
    throw ValidationError("orthogonal_complement: subspace is the whole space");
  // Columns of I - P_S span the complement; orthonormalize the independent ones.
  Matrix resid = Matrix::Identity(n, n) - s.frame() * s.frame().adjoint();
  Matrix frame(n, n - r);
  int cols = 0;
  for (int j = 0; j < n && cols < n - r; ++j) {
    Vector v = resid.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int c = 0; c < cols; ++c) v -= frame.col(c) * (frame.col(c).dot(v));
      v -= s.frame() * (s.frame().adjoint() * v);
    }
    if (v.norm() > 1e-8) frame.col(cols++) = v / v.norm();
  }
  if (cols != n - r)
    throw std::runtime_error("orthogonal_complement: failed to complete basis");
  return Subspace(frame);
}

Subspace direct_sum(const Subspace& s, const Subspace& v, const Tolerances& tol) {
  (void)tol;
  if (s.ambient() != v.ambient())
    throw ValidationError("direct_sum: ambient dimensions differ");
  double overlap = subspace_overlap(s, v);
  if (overlap > 1e-10)
    throw ValidationError("direct_sum: subspaces not orthogonal, overlap " +
                          std::to_string(overlap));
  Matrix frame(s.ambient(), s.dim() + v.dim());
  frame << s.frame(), v.frame();
  return Subspace(frame);
}

}  // namespace minop

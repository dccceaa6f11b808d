#pragma once

#include <vector>

#include "minop/common.hpp"
#include "minop/hermitian.hpp"

namespace minop {

// Linear subspace of C^n held as an orthonormal frame (columns).  The frame
// is part of the identity of the object: operations that depend on a basis
// of S use exactly these columns.
class Subspace {
 public:
  explicit Subspace(Matrix frame, const Tolerances& tol = default_tolerances());

  int ambient() const { return static_cast<int>(frame_.rows()); }
  int dim() const { return static_cast<int>(frame_.cols()); }
  const Matrix& frame() const { return frame_; }

  // P_S = F F*.
  HermitianMatrix projector() const;

 private:
  Matrix frame_;
};

// Entrywise nonnegative vector with unit coordinate sum: a point of the
// standard simplex, how moment sets are coordinatized.
class MomentPoint {
 public:
  explicit MomentPoint(RealVector coords);
  int dim() const { return static_cast<int>(coords_.size()); }
  const RealVector& coords() const { return coords_; }

 private:
  RealVector coords_;
};

// Gram-Schmidt with reorthogonalization.  Rank-deficient input is rejected,
// naming the first dependent vector.
Subspace orthonormalize(const std::vector<Vector>& vectors,
                        const Tolerances& tol = default_tolerances());

// True iff every squared coordinate overlap |P_S e_j|^2 exceeds
// Tolerances::gen.  When false, `offending` lists the failing indices.
struct GenericityReport {
  bool generic = false;
  std::vector<int> offending;
};
GenericityReport is_generic(const Subspace& s,
                            const Tolerances& tol = default_tolerances());

// Normalized projection of the j-th coordinate vector (zero-based j).  Its
// j-th coordinate equals the overlap |P_S e_j| and is real positive.
struct PrincipalVector {
  int index = 0;
  Vector vector;
  double overlap = 0.0;
};
PrincipalVector principal_vector(const Subspace& s, int j,
                                 const Tolerances& tol = default_tolerances());

// Barycenter of the moment set: Diag(P_S) / dim S.
MomentPoint centroid(const Subspace& s);

// Barycenter of the moment set of S + V for orthogonal S, V:
// (r c(S) + t c(V)) / (r + t).  Rejects non-orthogonal pairs.
MomentPoint centroid_orthogonal_sum(const Subspace& s, const Subspace& v,
                                    const Tolerances& tol = default_tolerances());

// Frobenius-nearest matrix among {Y : P_S Y P_S = Y >= 0, tr Y = 1}.
DensityMatrix project_density_on_subspace(const HermitianMatrix& z,
                                          const Subspace& s);

// Largest singular value of F_s* F_v, i.e. the operator norm of P_S P_V.
double subspace_overlap(const Subspace& s, const Subspace& v);

// Orthonormal frame for the orthogonal complement of S (empty frame is
// rejected: S must be proper).
Subspace orthogonal_complement(const Subspace& s);

// S + V for orthogonal S, V, framed as [F_s F_v].
Subspace direct_sum(const Subspace& s, const Subspace& v,
                    const Tolerances& tol = default_tolerances());

}  // namespace minop

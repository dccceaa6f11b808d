#pragma once

#include "minop/common.hpp"

namespace minop {

// Square complex matrix that is hermitian within Tolerances::herm per entry.
// The stored matrix is exactly symmetrized, so downstream code can rely on
// a == a.adjoint() to machine precision.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix a,
                           const Tolerances& tol = default_tolerances());

  int dim() const { return static_cast<int>(a_.rows()); }
  const Matrix& mat() const { return a_; }

  double trace() const { return a_.trace().real(); }
  double frobenius_norm() const { return a_.norm(); }

 private:
  Matrix a_;
};

// Result of eigen_hermitian.  Eigenvalues sorted descending; eigenvector
// columns orthonormal and phase-fixed (first component above 1e-12 in
// modulus is made real positive), which pins the output for repeated runs
// on identical input.
struct EigenDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

EigenDecomposition eigen_hermitian(const HermitianMatrix& a);

// Unit-trace positive semidefinite hermitian matrix.  Eigenvalues are
// allowed to dip to -Tolerances::psd; the trace must be 1 within 1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix a,
                         const Tolerances& tol = default_tolerances());

  int dim() const { return a_.dim(); }
  const Matrix& mat() const { return a_.mat(); }
  const HermitianMatrix& hermitian() const { return a_; }

 private:
  HermitianMatrix a_;
};

// max |eigenvalue|.
double operator_norm(const HermitianMatrix& a);

// Frobenius-nearest positive semidefinite matrix (negative eigenvalues
// clipped to zero).
HermitianMatrix project_psd(const HermitianMatrix& a);

// Euclidean projection of y onto the probability simplex {x >= 0, sum x = 1}
// by the sort-and-threshold rule.
RealVector project_to_simplex(const RealVector& y);

// Frobenius-nearest density matrix (spectrum projected onto the simplex,
// eigenvectors kept).
DensityMatrix project_density(const HermitianMatrix& a);

}  // namespace minop

#include "minop/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

namespace minop {

HermitianMatrix::HermitianMatrix(Matrix a, const Tolerances& tol) {
  if (a.rows() != a.cols())
    throw ValidationError("HermitianMatrix: matrix must be square");
  check_dim(static_cast<int>(a.rows()), "HermitianMatrix");
  const int n = static_cast<int>(a.rows());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      double dev = std::abs(a(i, j) - std::conj(a(j, i)));
      if (dev > tol.herm)
        throw ValidationError("HermitianMatrix: entry (" + std::to_string(i) +
                              "," + std::to_string(j) + ") asymmetric by " +
                              std::to_string(dev));
    }
  }
  a_ = (a + a.adjoint()) / 2.0;
}

EigenDecomposition eigen_hermitian(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen_hermitian: eigensolver did not converge");

  const int n = a.dim();
  // Eigen returns ascending order; flip to descending.  Ties keep the
  // solver's (deterministic) internal order, reversed.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::reverse(idx.begin(), idx.end());

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int c = 0; c < n; ++c) {
    out.eigenvalues(c) = solver.eigenvalues()(idx[c]);
    Vector col = solver.eigenvectors().col(idx[c]);
    // Phase convention: first component with modulus above 1e-12 made real
    // positive.  Unit vectors always have such a component.
    for (int i = 0; i < n; ++i) {
      double m = std::abs(col(i));
      if (m > 1e-12) {
        col *= std::conj(col(i)) / m;
        break;
      }
    }
    out.eigenvectors.col(c) = col;
  }
  return out;
}

DensityMatrix::DensityMatrix(HermitianMatrix a, const Tolerances& tol)
    : a_(std::move(a)) {
  double tr = a_.trace();
  if (std::abs(tr - 1.0) > 1e-10)
    throw ValidationError("DensityMatrix: trace " + std::to_string(tr) +
                          " not 1 within 1e-10");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a_.mat(), Eigen::EigenvaluesOnly);
  double lo = solver.eigenvalues().minCoeff();
  if (lo < -tol.psd)
    throw ValidationError("DensityMatrix: eigenvalue " + std::to_string(lo) +
                          " below -" + std::to_string(tol.psd));
}

double operator_norm(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat(), Eigen::EigenvaluesOnly);
  return std::max(std::abs(solver.eigenvalues().minCoeff()),
                  std::abs(solver.eigenvalues().maxCoeff()));
}

HermitianMatrix project_psd(const HermitianMatrix& a) {
  EigenDecomposition ed = eigen_hermitian(a);
  RealVector clipped = ed.eigenvalues.cwiseMax(0.0);
  Matrix m = ed.eigenvectors * clipped.asDiagonal() * ed.eigenvectors.adjoint();
  return HermitianMatrix((m + m.adjoint()) / 2.0);
}

RealVector project_to_simplex(const RealVector& y) {
  const int n = static_cast<int>(y.size());
  if (n < 1) throw ValidationError("project_to_simplex: empty input");
  std::vector<double> u(y.data(), y.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  int rho = 0;
  for (int k = 0; k < n; ++k) {
    cum += u[k];
    double t = (cum - 1.0) / (k + 1);
    if (u[k] - t > 0.0) {
      rho = k + 1;
      theta = t;
    }
  }
  (void)rho;
  RealVector x(n);
  for (int i = 0; i < n; ++i) x(i) = std::max(y(i) - theta, 0.0);
  return x;
}

DensityMatrix project_density(const HermitianMatrix& a) {
  EigenDecomposition ed = eigen_hermitian(a);
  RealVector p = project_to_simplex(ed.eigenvalues);
  Matrix m = ed.eigenvectors * p.asDiagonal() * ed.eigenvectors.adjoint();
  return DensityMatrix(HermitianMatrix((m + m.adjoint()) / 2.0));
}

}  // namespace minop

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace minop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Largest ambient dimension any constructor accepts.  Everything here is
// dense; past this size the algorithms stop being the right tool.
inline constexpr int kMaxDim = 256;

// Central tolerance knobs.  Defaults are used everywhere unless a caller
// passes its own copy; individual operations never hardcode these values.
struct Tolerances {
  double herm = 1e-12;  // per-entry asymmetry allowed in hermitian input
  double psd = 1e-10;   // eigenvalue floor for positive semidefiniteness
  double rank = 1e-10;  // relative singular value / residual cutoff
  double gen = 1e-12;   // genericity floor for squared coordinate overlaps
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

// Raised when a value fails a documented precondition or type invariant.
// The message names the offending index/magnitude where that is useful.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Iteration controls for the feasibility solvers (moment membership, joint
// numerical range membership, support decisions).
struct SolverConfig {
  double tol = 1e-8;               // feasibility tolerance on l1 residuals
  int max_iterations = 100000;     // projection iteration cap
  int stall_window = 5000;         // iterations with no improvement => stall
  double stall_improvement = 1e-12;  // relative residual improvement floor
  int certificate_restarts = 50;   // random restarts for direction search
  int certificate_iterations = 400;  // ascent steps per restart
  std::uint64_t seed = 0;          // restart sampling seed
};

inline void check_dim(int n, const char* who) {
  if (n < 1) throw ValidationError(std::string(who) + ": dimension must be >= 1");
  if (n > kMaxDim)
    throw ValidationError(std::string(who) + ": dimension " + std::to_string(n) +
                          " exceeds supported maximum " + std::to_string(kMaxDim));
}

}  // namespace minop

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minop/common.hpp"
#include "minop/hermitian.hpp"
#include "minop/subspace.hpp"
#include "minop/support.hpp"

namespace minop {

// Ingredients of lambda (P_S - P_V) + R: orthogonal S, V, a weight
// lambda > 0, and a hermitian remainder with range orthogonal to both
// subspaces and norm at most lambda.  Use make_candidate, which validates.
struct MinimalCandidate {
  Subspace s;
  Subspace v;
  double lambda = 0.0;
  HermitianMatrix r_part;
};

MinimalCandidate make_candidate(Subspace s, Subspace v, double lambda,
                                std::optional<HermitianMatrix> r_part,
                                const Tolerances& tol = default_tolerances());

// lambda (P_S - P_V) + R.  The result has operator norm lambda.
HermitianMatrix assemble(const MinimalCandidate& c);

enum class MinimalStatus { kMinimal, kNotMinimal, kUndecided };
enum class CertificateRoute { kSupportTheorem, kOracle, kBoth };

// Decision about minimality with respect to the diagonal subalgebra.
// NOT_MINIMAL always carries best_diagonal, a diagonal D with
// |A + D| < |A| - oracle tol, directly re-verifiable by one
// eigendecomposition.  distance is an upper estimate of
// min_D |A + D| when an oracle ran (exact at |A| for minimal inputs).
struct MinimalityCertificate {
  MinimalStatus status = MinimalStatus::kUndecided;
  CertificateRoute route = CertificateRoute::kSupportTheorem;
  double lambda = 0.0;
  std::optional<double> distance;
  std::optional<RealVector> best_diagonal;
  std::optional<SupportVerdict> support;
  std::string note;
};

// Controls for the direct distance search.
struct OracleConfig {
  int dimension_cap = 12;   // inputs above this are rejected
  int iterations = 20000;   // subgradient steps per start
  int patience = 5000;      // stop a start after this many stale steps
  double tol = 1e-6;        // decision tolerance on |A| - distance
  std::uint64_t seed = 0;
};

struct OracleResult {
  double distance = 0.0;     // best found value of |A + diag(d)|
  RealVector best_diagonal;  // the minimizing d
};

// Upper estimate of min over real diagonals D of |A + D| by multistart
// subgradient descent (starts: 0 and -Diag(A)), plus coordinatewise
// golden-section refinement for dimension <= 4.  The start at 0 makes the
// estimate exact when A is minimal.
OracleResult oracle_distance_to_diagonals(const HermitianMatrix& a,
                                          const OracleConfig& config = {});

// Minimality via the support decision on (S, V).
MinimalityCertificate certify_by_support(const MinimalCandidate& c,
                                         const SolverConfig& config = {},
                                         const OracleConfig& oracle = {});

// Minimality of an arbitrary hermitian matrix.  Extracts the +|A| and -|A|
// eigenspaces and runs the support route when both exist; one-sided spectra
// (and force_oracle) go to the distance oracle.  kBoth runs both routes and
// reports UNDECIDED if they disagree.
MinimalityCertificate certify_matrix(const HermitianMatrix& a,
                                     CertificateRoute route,
                                     const SolverConfig& config = {},
                                     const OracleConfig& oracle = {});

// For a SUPPORT pair: random remainders R on (S + V)-perp with
// |R| = alpha lambda for alpha in {0, 0.5, 0.99}; every assembled operator
// must re-certify minimal through the oracle with distance lambda.
struct RSweepReport {
  struct Row {
    double alpha = 0.0;
    int trial = 0;
    double distance = 0.0;
    double deviation = 0.0;
  };
  std::vector<Row> rows;
  double max_deviation = 0.0;
  bool all_minimal = true;
};

RSweepReport sweep_r_part(const Subspace& s, const Subspace& v, double lambda,
                          int trials, std::uint64_t seed,
                          const SolverConfig& config = {},
                          const OracleConfig& oracle = {});

}  // namespace minop

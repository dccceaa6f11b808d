#pragma once

#include <optional>
#include <vector>

#include "minop/common.hpp"
#include "minop/subspace.hpp"

namespace minop {

enum class Feasibility { kFeasible, kInfeasible, kUndecided };

// Outcome of a moment-set membership query.  FEASIBLE carries a witness
// Y in D_S whose diagonal matches the query within tol (l1); INFEASIBLE
// carries a direction d, scaled to unit sup norm, with
//   <d, x>  >  max_{y in m_S} <d, y> + tol,
// where the max equals the top eigenvalue of F* diag(d) F.  UNDECIDED means
// the iteration budget ran out without either outcome.
struct MomentVerdict {
  Feasibility status = Feasibility::kUndecided;
  std::optional<DensityMatrix> witness;
  std::optional<RealVector> direction;
  double margin = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

inline SolverConfig moment_solver_defaults() {
  SolverConfig c;
  c.max_iterations = 50000;
  return c;
}

MomentVerdict moment_membership(const Subspace& s, const MomentPoint& x,
                                double tol = 1e-8,
                                SolverConfig config = moment_solver_defaults());

// Squared-modulus coordinate vectors of seeded unit samples of S: extreme
// points of the moment set.
std::vector<MomentPoint> sample_moment_extremes(const Subspace& s, int count,
                                                std::uint64_t seed);

// Sampled two-sided Hausdorff distance between m_S and m_V in the sup
// metric.  Both clouds are drawn from the same stream, so identical frames
// give exactly 0.  Pairwise diagonal distances never exceed 2, or 1 when
// S and V are orthogonal, so the estimate obeys the same bounds.
double hausdorff_upper_estimate(const Subspace& s, const Subspace& v,
                                int samples, std::uint64_t seed);

// First-m-coordinate projections p_m of sampled moment points.
std::vector<RealVector> truncated_moment_projection(const Subspace& s, int m,
                                                    int samples,
                                                    std::uint64_t seed);

}  // namespace minop

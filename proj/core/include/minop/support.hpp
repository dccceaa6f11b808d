#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minop/common.hpp"
#include "minop/gellmann.hpp"
#include "minop/moment.hpp"
#include "minop/subspace.hpp"

namespace minop {

// Linear map taking the basis coordinates of a hermitian pair (A, C),
// A supported on S and C on V, to Diag(A) - Diag(C).  Row q is
// ([T_q]_S, -[L_q]_V), where T_q, L_q are the compressions of the q-th
// coordinate dyad, expressed against the compressed orthonormal bases; so
// matrix * (coords A, coords C) = Diag(A) - Diag(C) entrywise within 1e-10.
// row_basis is the lexicographically first maximal independent row set
// (greedy Gram-Schmidt over rows in index order with cutoff
// Tolerances::rank * sigma_max); rank is its size, cross-checked against
// the singular value count at the same cutoff.
class DeltaMap {
 public:
  DeltaMap(Subspace s, Subspace v, const Tolerances& tol);

  const Subspace& s() const { return s_; }
  const Subspace& v() const { return v_; }
  const RealMatrix& matrix() const { return matrix_; }
  int rank() const { return static_cast<int>(row_basis_.size()); }
  const std::vector<int>& row_basis() const { return row_basis_; }
  const GellMannBasis& basis_s() const { return basis_s_; }
  const GellMannBasis& basis_v() const { return basis_v_; }

 private:
  Subspace s_;
  Subspace v_;
  GellMannBasis basis_s_;
  GellMannBasis basis_v_;
  RealMatrix matrix_;
  std::vector<int> row_basis_;
};

DeltaMap build_delta(const Subspace& s, const Subspace& v,
                     const Tolerances& tol = default_tolerances());

enum class SupportStatus { kSupport, kNoSupport, kUndecided };

// SUPPORT evidence: densities on S and V whose diagonals agree within the
// solver tolerance; `common` is their averaged diagonal, a shared moment
// point.
struct SupportWitness {
  DensityMatrix x;
  DensityMatrix y;
  MomentPoint common;
};

// NO_SUPPORT evidence: a sup-norm-one direction separating the moment sets,
//   min over unit v in V of sum d |v|^2  >  max over unit s in S of sum d |s|^2
// by `margin`.  Both sides are eigenvalues of compressed diag(d), so the
// certificate is re-verifiable with two small eigendecompositions.
struct SupportCertificate {
  RealVector direction;
  double margin = 0.0;
};

struct SupportVerdict {
  SupportStatus status = SupportStatus::kUndecided;
  std::optional<SupportWitness> witness;
  std::optional<SupportCertificate> certificate;
  double residual = 0.0;
  int iterations = 0;
};

// Whether m_S and m_V intersect, by Dykstra-corrected alternating
// projections on density pairs with diagonal averaging; on stall, a
// separating-direction search over the sup-norm ball.
SupportVerdict decide_support(const Subspace& s, const Subspace& v,
                              const SolverConfig& config = {});

// Same decision through the compressed coordinate families selected by the
// row basis of the Delta map: densities of size dim S and dim V matched on
// the selected coordinates only.  Agrees with decide_support whenever both
// decide.
SupportVerdict support_via_truncated_jnr(const Subspace& s, const Subspace& v,
                                         const SolverConfig& config = {});

// Exact margin of a candidate separating direction (the quantity the
// NO_SUPPORT certificate asserts to be positive).
double certificate_margin(const Subspace& s, const Subspace& v,
                          const RealVector& d);

// Orthonormal kernel basis vectors of the Delta matrix decoded into
// hermitian pairs (A, C) with Diag(A) = Diag(C); at most `count` pairs.
// Empty iff the map has full column rank.
std::vector<std::pair<HermitianMatrix, HermitianMatrix>> kernel_pairs(
    const DeltaMap& delta, int count);

}  // namespace minop

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "minop/common.hpp"
#include "minop/subspace.hpp"

namespace minop {

// Finite tuple of hermitian matrices of one dimension.  norm_bound is the
// largest member operator norm; every joint numerical range coordinate is
// bounded by it.
class HermitianFamily {
 public:
  explicit HermitianFamily(std::vector<HermitianMatrix> members);

  int size() const { return static_cast<int>(members_.size()); }
  int dim() const { return members_[0].dim(); }
  const HermitianMatrix& member(int i) const { return members_.at(i); }
  double norm_bound() const { return norm_bound_; }

 private:
  std::vector<HermitianMatrix> members_;
  double norm_bound_ = 0.0;
};

// Point of a joint numerical range; component i is tr(rho A_i).
using JnrPoint = RealVector;

// The coordinate family of S truncated to its first m members:
// A_j = P_S E_j P_S, each the rank-one projector dyad of the j-th column
// of P_S.
HermitianFamily ase_family(const Subspace& s, int m);

// (tr(rho A_1), ..., tr(rho A_m)).  Traces of hermitian products are real;
// the imaginary part must vanish within 1e-12 (scaled by the family norm
// bound) and is then discarded.
JnrPoint evaluate(const HermitianFamily& f, const DensityMatrix& rho);

// h(d) = lambda_max(sum d_i A_i) together with a maximizing rank-one
// density (top eigenvector dyad).
struct SupportFunctionValue {
  double value = 0.0;
  DensityMatrix maximizer;
};
SupportFunctionValue support_function(const HermitianFamily& f,
                                      const RealVector& d);

// Membership in W(f).  INSIDE carries a witness density reproducing z
// within tol (l1); OUTSIDE carries a unit direction d with
// <d, z> > h(d) + tol; ON_BOUNDARY is the band where the best separation
// margin sits within +-tol of zero (downstream feasibility treats it as
// inside).
enum class JnrMembership { kInside, kOutside, kOnBoundary, kUndecided };

struct JnrVerdict {
  JnrMembership status = JnrMembership::kUndecided;
  std::optional<DensityMatrix> witness;
  std::optional<RealVector> direction;
  double margin = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

JnrVerdict jnr_membership(const HermitianFamily& f, const JnrPoint& z,
                          double tol = 1e-8, SolverConfig config = {});

// p-joint numerical radius of the coordinate family of S truncated to m
// members: sup over unit v in S of the l^p norm of the first m squared
// coordinate moduli.  Sampled lower bound polished by projected gradient
// ascent; exact (top eigenvalue) for p = 1.
double radius_p(const Subspace& s, int m, double p, int samples,
                std::uint64_t seed);

// Rank-one (classic) joint numerical range samples x* A_i x over seeded
// unit vectors.
std::vector<JnrPoint> classic_jnr_sample(const HermitianFamily& f, int samples,
                                         std::uint64_t seed);

// Planar boundary trace of the (j, k) coordinate pair: support points for
// directions (cos theta, sin theta) on a uniform angle grid, in grid order.
std::vector<std::array<double, 2>> trace_boundary_2d(const HermitianFamily& f,
                                                     int j, int k,
                                                     int directions);

}  // namespace minop

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minop/common.hpp"
#include "minop/subspace.hpp"

namespace minop {

// Orthonormal hermitian basis of M_r(C) under the trace inner product.
// elements has r^2 entries: first the (k, j) family in row-major order with
// (r-1, r-1) skipped (indices records the zero-based pairs), then I_r/sqrt(r)
// as the final completion element.
struct GellMannBasis {
  int r = 0;
  std::vector<Matrix> elements;
  std::vector<std::pair<int, int>> indices;
};

GellMannBasis build_gellmann(int r);

// Same construction with coordinate vectors replaced by the frame columns
// of S: an orthonormal hermitian basis of B_S = P_S M_n(C) P_S, completed by
// P_S/sqrt(r).  Element order mirrors GellMannBasis exactly.
struct CompressedBasis {
  Subspace subspace;
  std::vector<Matrix> elements;
  std::vector<std::pair<int, int>> indices;
};

CompressedBasis build_compressed(const Subspace& s);

// The *-isomorphism M_r(C) -> B_S determined by matching the two bases
// element by element.  apply uses frame conjugation F m F*; the basis
// expansion route is kept as an independently checkable path.  The frame is
// part of the object: rebuilding with a different frame for the same
// subspace gives a different (conjugated) isomorphism.
class IsoU {
 public:
  explicit IsoU(Subspace s);

  int source_dim() const { return basis_.r; }
  const Subspace& subspace() const { return compressed_.subspace; }
  const GellMannBasis& source_basis() const { return basis_; }
  const CompressedBasis& target_basis() const { return compressed_; }

  Matrix apply(const Matrix& m) const;
  Matrix apply_via_basis(const Matrix& m) const;

  // F* b F.  Rejects input whose compression residual |b - P b P| exceeds
  // 1e-9 (the residual is quoted in the error).
  Matrix apply_inverse(const Matrix& b) const;

 private:
  GellMannBasis basis_;
  CompressedBasis compressed_;
};

// Residual report for the nine isomorphism properties, maxed over a seeded
// trial ensemble.
struct UPropertyReport {
  struct Entry {
    std::string property;
    double max_residual = 0.0;
  };
  std::vector<Entry> entries;

  double worst() const;
  bool all_within(double bound) const;
};

UPropertyReport verify_u_properties(const IsoU& iso, int trials,
                                    std::uint64_t seed);

}  // namespace minop

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "minop/gellmann.hpp"
#include "minop/hermitian.hpp"
#include "minop/jnr.hpp"
#include "minop/rng.hpp"
#include "minop/subspace.hpp"

using namespace minop;

namespace {

const Complex kI(0.0, 1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Subspace random_subspace(Rng& rng, int n, int r) {
  std::vector<Vector> vs;
  for (int i = 0; i < r; ++i) vs.push_back(gaussian_vector(rng, n));
  return orthonormalize(vs);
}

Matrix random_density_matrix(Rng& rng, int n) {
  Matrix g = gaussian_matrix(rng, n, n);
  Matrix p = g * g.adjoint();
  return p / p.trace().real();
}

}  // namespace

TEST_CASE("the 2x2 basis is the scaled Pauli triple") {
  GellMannBasis b = build_gellmann(2);
  REQUIRE(b.elements.size() == 4);
  REQUIRE(b.indices.size() == 3);
  CHECK(b.indices[0] == std::pair<int, int>(0, 0));
  CHECK(b.indices[1] == std::pair<int, int>(0, 1));
  CHECK(b.indices[2] == std::pair<int, int>(1, 0));

  Matrix z(2, 2), x(2, 2), y(2, 2);
  z << 1, 0, 0, -1;
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  CHECK((b.elements[0] - kInvSqrt2 * z).norm() < 1e-14);
  CHECK((b.elements[1] - kInvSqrt2 * x).norm() < 1e-14);
  CHECK((b.elements[2] - kInvSqrt2 * y).norm() < 1e-14);
  CHECK((b.elements[3] - kInvSqrt2 * Matrix::Identity(2, 2)).norm() < 1e-14);
}

TEST_CASE("basis elements are trace-orthonormal hermitian") {
  for (int r : {1, 2, 3, 4, 6}) {
    GellMannBasis b = build_gellmann(r);
    const int total = r * r;
    REQUIRE(static_cast<int>(b.elements.size()) == total);
    for (int i = 0; i < total; ++i) {
      const Matrix& w = b.elements[i];
      CHECK((w - w.adjoint()).norm() <= 1e-14);
      if (i + 1 < total) CHECK(std::abs(w.trace()) <= 1e-14);
      for (int j = 0; j <= i; ++j) {
        double want = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs((b.elements[j].adjoint() * w).trace().real() - want) <=
              1e-12);
      }
    }
  }
  CHECK_THROWS_AS(build_gellmann(0), ValidationError);
}

TEST_CASE("canonical embedding pads the basis with zeros") {
  Matrix f = Matrix::Zero(3, 2);
  f(0, 0) = 1.0;
  f(1, 1) = 1.0;
  CompressedBasis cb = build_compressed(Subspace(f));
  GellMannBasis b = build_gellmann(2);
  for (size_t i = 0; i < b.elements.size(); ++i) {
    Matrix padded = Matrix::Zero(3, 3);
    padded.topLeftCorner(2, 2) = b.elements[i];
    CHECK((cb.elements[i] - padded).norm() <= 1e-14);
  }
}

TEST_CASE("compressed basis is trace-orthonormal and supported on S") {
  Rng rng(31);
  Subspace s = random_subspace(rng, 6, 3);
  CompressedBasis cb = build_compressed(s);
  Matrix p = s.projector().mat();
  const int total = 9;
  REQUIRE(static_cast<int>(cb.elements.size()) == total);
  for (int i = 0; i < total; ++i) {
    const Matrix& v = cb.elements[i];
    CHECK((v - v.adjoint()).norm() <= 1e-12);
    CHECK((v - p * v * p).norm() <= 1e-10);
    if (i + 1 < total) CHECK(std::abs(v.trace()) <= 1e-12);
    for (int j = 0; j <= i; ++j) {
      double want = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs((cb.elements[j].adjoint() * v).trace().real() - want) <=
            1e-10);
    }
  }
}

TEST_CASE("the isomorphism maps the identity to the projector") {
  Rng rng(32);
  Subspace s = random_subspace(rng, 5, 2);
  IsoU iso(s);
  CHECK((iso.apply(Matrix::Identity(2, 2)) - s.projector().mat()).norm() <=
        1e-12);
  CHECK(iso.apply(Matrix::Zero(2, 2)).norm() <= 1e-14);
  CHECK((iso.apply_inverse(s.projector().mat()) - Matrix::Identity(2, 2))
            .norm() <= 1e-12);
}

TEST_CASE("the isomorphism matches the basis on basis elements") {
  Rng rng(33);
  Subspace s = random_subspace(rng, 6, 3);
  IsoU iso(s);
  for (size_t i = 0; i < iso.source_basis().elements.size(); ++i) {
    CHECK((iso.apply(iso.source_basis().elements[i]) -
           iso.target_basis().elements[i])
              .norm() <= 1e-12);
    CHECK((iso.apply_inverse(iso.target_basis().elements[i]) -
           iso.source_basis().elements[i])
              .norm() <= 1e-12);
  }
}

TEST_CASE("frame conjugation and basis expansion agree") {
  Rng rng(34);
  Subspace s = random_subspace(rng, 6, 3);
  IsoU iso(s);
  for (int trial = 0; trial < 10; ++trial) {
    Rng stream = rng.fork(trial);
    Matrix m = gaussian_matrix(stream, 3, 3);
    Matrix a = iso.apply(m);
    CHECK((a - iso.apply_via_basis(m)).norm() <= 1e-10);
    // The image lives on S and the trace survives.
    Matrix p = s.projector().mat();
    CHECK((a - p * a * p).norm() <= 1e-10);
    CHECK(std::abs(a.trace() - m.trace()) <= 1e-10);
    // Round trip.
    CHECK((iso.apply_inverse(a) - m).norm() <= 1e-10);
  }
}

TEST_CASE("inverse rejects input leaking off the subspace") {
  Rng rng(35);
  Subspace s = random_subspace(rng, 5, 2);
  IsoU iso(s);
  Matrix leak = Matrix::Identity(5, 5);
  CHECK_THROWS_AS(iso.apply_inverse(leak), ValidationError);
  CHECK_THROWS_AS(iso.apply(Matrix::Zero(3, 3)), ValidationError);
}

TEST_CASE("multiplicativity is exact on commuting diagonal input") {
  Rng rng(36);
  Subspace s = random_subspace(rng, 6, 3);
  IsoU iso(s);
  for (int trial = 0; trial < 5; ++trial) {
    Rng stream = rng.fork(trial);
    Vector da = gaussian_vector(stream, 3);
    Vector db = gaussian_vector(stream, 3);
    Matrix a = da.asDiagonal();
    Matrix b = db.asDiagonal();
    Matrix lhs = iso.apply(a * b);
    Matrix rhs = iso.apply(a) * iso.apply(b);
    CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, lhs.norm()));
  }
}

TEST_CASE("trace inner products are preserved") {
  Rng rng(37);
  Subspace s = random_subspace(rng, 6, 3);
  IsoU iso(s);
  for (int trial = 0; trial < 10; ++trial) {
    Rng stream = rng.fork(trial);
    Matrix a = gaussian_matrix(stream, 3, 3);
    Matrix b = gaussian_matrix(stream, 3, 3);
    Complex want = (b.adjoint() * a).trace();
    Complex got = (iso.apply(b).adjoint() * iso.apply(a)).trace();
    CHECK(std::abs(want - got) <= 1e-10 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("all nine properties hold on a trial ensemble") {
  Rng rng(38);
  Subspace s = random_subspace(rng, 7, 3);
  UPropertyReport report = verify_u_properties(IsoU(s), 50, 404);
  REQUIRE(report.entries.size() == 9);
  for (const auto& entry : report.entries) {
    INFO(entry.property);
    CHECK(entry.max_residual <= 1e-9);
  }
  CHECK(report.all_within(1e-9));
}

TEST_CASE("the compressed and ambient coordinate families share their range") {
  Rng rng(39);
  Subspace s = random_subspace(rng, 5, 2);
  IsoU iso(s);
  const int n = 5;

  std::vector<HermitianMatrix> full, compressed;
  for (int j = 0; j < n; ++j) {
    Matrix ej = Matrix::Zero(n, n);
    ej(j, j) = 1.0;
    Matrix aj = s.projector().mat() * ej * s.projector().mat();
    full.emplace_back((aj + aj.adjoint()) / 2.0);
    Matrix bj = iso.apply_inverse(full.back().mat());
    compressed.emplace_back((bj + bj.adjoint()) / 2.0);
  }
  HermitianFamily full_family(full);
  HermitianFamily compressed_family(compressed);

  for (int trial = 0; trial < 6; ++trial) {
    Rng stream = rng.fork(trial);
    Matrix sigma = random_density_matrix(stream, 2);

    // The isomorphism matches evaluations pointwise.
    DensityMatrix lifted{HermitianMatrix(iso.apply(sigma))};
    DensityMatrix small{HermitianMatrix(sigma)};
    JnrPoint through_full = evaluate(full_family, lifted);
    JnrPoint through_compressed = evaluate(compressed_family, small);
    CHECK((through_full - through_compressed).cwiseAbs().maxCoeff() <= 1e-10);

    // Two-sided membership: each side's samples land inside the other's
    // range.
    JnrVerdict in_compressed =
        jnr_membership(compressed_family, through_full, 1e-7);
    CHECK(in_compressed.status != JnrMembership::kOutside);
    JnrVerdict in_full = jnr_membership(full_family, through_compressed, 1e-7);
    CHECK(in_full.status != JnrMembership::kOutside);
  }
}

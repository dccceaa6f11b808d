#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "minop/gellmann.hpp"
#include "minop/hermitian.hpp"
#include "minop/rng.hpp"
#include "minop/subspace.hpp"
#include "minop/support.hpp"

using namespace minop;

namespace {

Subspace span_unit(int n, int j) { return orthonormalize({Vector::Unit(n, j)}); }

// The canonical crossing pair: both moment sets are the singleton
// {(1/2, 1/2)}.
std::pair<Subspace, Subspace> crossing_pair() {
  Vector p(2), m(2);
  p << 1, 1;
  m << 1, -1;
  return {orthonormalize({p / std::sqrt(2.0)}),
          orthonormalize({m / std::sqrt(2.0)})};
}

// Two-dimensional crossing pair in C^4 built from plus/minus combinations
// on disjoint coordinate pairs; the common diagonal set is the segment
// (a/2, a/2, b/2, b/2), a + b = 1.
std::pair<Subspace, Subspace> crossing_pair_4() {
  Vector s1 = Vector::Zero(4), s2 = Vector::Zero(4);
  Vector v1 = Vector::Zero(4), v2 = Vector::Zero(4);
  const double h = 1.0 / std::sqrt(2.0);
  s1(0) = h;
  s1(1) = h;
  s2(2) = h;
  s2(3) = h;
  v1(0) = h;
  v1(1) = -h;
  v2(2) = h;
  v2(3) = -h;
  return {orthonormalize({s1, s2}), orthonormalize({v1, v2})};
}

Subspace random_subspace(Rng& rng, int n, int r) {
  std::vector<Vector> vs;
  for (int i = 0; i < r; ++i) vs.push_back(gaussian_vector(rng, n));
  return orthonormalize(vs);
}

// Random orthogonal pair carved out of one orthonormal frame.
std::pair<Subspace, Subspace> random_orthogonal_pair(Rng& rng, int n, int r,
                                                     int t) {
  Subspace big = random_subspace(rng, n, r + t);
  return {Subspace(Matrix(big.frame().leftCols(r))),
          Subspace(Matrix(big.frame().rightCols(t)))};
}

// Test-side coordinates of a hermitian matrix supported on S against the
// compressed orthonormal basis.
RealVector compressed_coordinates(const Subspace& s, const Matrix& a) {
  CompressedBasis cb = build_compressed(s);
  RealVector c(cb.elements.size());
  for (size_t i = 0; i < cb.elements.size(); ++i)
    c(static_cast<int>(i)) = (cb.elements[i].adjoint() * a).trace().real();
  return c;
}

// Hermitian matrix supported on S with unit-scale entries.
Matrix random_on_subspace(Rng& rng, const Subspace& s) {
  int r = s.dim();
  Matrix g = gaussian_matrix(rng, r, r);
  Matrix h = (g + g.adjoint()) / 2.0;
  return s.frame() * h * s.frame().adjoint();
}

}  // namespace

TEST_CASE("delta map of the coordinate singletons") {
  Subspace s = span_unit(2, 0);
  Subspace v = span_unit(2, 1);
  DeltaMap d = build_delta(s, v);
  REQUIRE(d.matrix().rows() == 2);
  REQUIRE(d.matrix().cols() == 2);
  CHECK(d.matrix()(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.matrix()(0, 1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d.matrix()(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d.matrix()(1, 1) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(d.rank() == 2);
  CHECK(kernel_pairs(d, 4).empty());
}

TEST_CASE("delta rows reproduce diagonal differences") {
  Rng rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    Rng stream = rng.fork(trial);
    auto [s, v] = random_orthogonal_pair(stream, 5, 2, 2);
    DeltaMap delta = build_delta(s, v);
    Matrix a = random_on_subspace(stream, s);
    Matrix c = random_on_subspace(stream, v);
    RealVector coords(8);
    coords.head(4) = compressed_coordinates(s, a);
    coords.tail(4) = compressed_coordinates(v, c);
    RealVector got = delta.matrix() * coords;
    RealVector want = a.diagonal().real() - c.diagonal().real();
    CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("delta rank bound and orthogonality check") {
  Rng rng(62);
  auto [s, v] = random_orthogonal_pair(rng, 6, 2, 1);
  DeltaMap delta = build_delta(s, v);
  CHECK(delta.rank() <= std::min(6, 2 * 2 + 1 * 1));
  CHECK(static_cast<int>(delta.row_basis().size()) == delta.rank());

  Subspace overlap = random_subspace(rng, 6, 2);
  CHECK_THROWS_AS(build_delta(overlap, overlap), ValidationError);
}

TEST_CASE("kernel pairs decode to equal diagonals") {
  auto [s, v] = crossing_pair();
  DeltaMap delta = build_delta(s, v);
  std::vector<std::pair<HermitianMatrix, HermitianMatrix>> pairs =
      kernel_pairs(delta, 4);
  REQUIRE(pairs.size() == 1);
  const auto& [a, c] = pairs[0];
  CHECK((a.mat().diagonal() - c.mat().diagonal()).norm() <= 1e-9);
  // Up to scale the pair is the two projectors.
  double scale = a.mat()(0, 0).real() / s.projector().mat()(0, 0).real();
  CHECK((a.mat() - scale * s.projector().mat()).norm() <= 1e-9);
  CHECK((c.mat() - scale * v.projector().mat()).norm() <= 1e-9);

  Rng rng(63);
  auto [s2, v2] = random_orthogonal_pair(rng, 6, 2, 2);
  for (const auto& [x, y] : kernel_pairs(build_delta(s2, v2), 8))
    CHECK((x.mat().diagonal() - y.mat().diagonal()).norm() <= 1e-9);
}

TEST_CASE("support decision on the crossing pair") {
  auto [s, v] = crossing_pair();
  SupportVerdict verdict = decide_support(s, v);
  REQUIRE(verdict.status == SupportStatus::kSupport);
  REQUIRE(verdict.witness.has_value());
  const SupportWitness& w = *verdict.witness;
  CHECK(w.common.coords()(0) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(w.common.coords()(1) == doctest::Approx(0.5).epsilon(1e-8));

  // Witness re-verification from scratch.
  Matrix ps = s.projector().mat(), pv = v.projector().mat();
  CHECK((w.x.mat() - ps * w.x.mat() * ps).norm() <= 1e-8);
  CHECK((w.y.mat() - pv * w.y.mat() * pv).norm() <= 1e-8);
  CHECK(std::abs(w.x.mat().trace().real() - 1.0) <= 1e-10);
  CHECK(eigen_hermitian(w.x.hermitian()).eigenvalues.minCoeff() >= -1e-10);
  CHECK((w.x.mat().diagonal().real() - w.y.mat().diagonal().real())
            .cwiseAbs()
            .sum() <= 1e-8);
}

TEST_CASE("support decision on disjoint coordinate lines") {
  Subspace s = span_unit(2, 0);
  Subspace v = span_unit(2, 1);
  SupportVerdict verdict = decide_support(s, v);
  REQUIRE(verdict.status == SupportStatus::kNoSupport);
  REQUIRE(verdict.certificate.has_value());
  const SupportCertificate& cert = *verdict.certificate;
  CHECK(cert.margin == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(cert.direction.cwiseAbs().maxCoeff() ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Re-verify with two eigenvalue computations, independently of the
  // solver's margin.
  Matrix ds = s.frame().adjoint() *
              cert.direction.cast<Complex>().asDiagonal() * s.frame();
  Matrix dv = v.frame().adjoint() *
              cert.direction.cast<Complex>().asDiagonal() * v.frame();
  double hi_s = eigen_hermitian(HermitianMatrix(ds)).eigenvalues.maxCoeff();
  double lo_v = eigen_hermitian(HermitianMatrix(dv)).eigenvalues.minCoeff();
  CHECK(lo_v - hi_s > 1e-8);
  CHECK(lo_v - hi_s == doctest::Approx(cert.margin).epsilon(1e-9));
  CHECK(certificate_margin(s, v, cert.direction) ==
        doctest::Approx(cert.margin).epsilon(1e-12));
}

TEST_CASE("support decision on the paired four-dimensional crossing") {
  auto [s, v] = crossing_pair_4();
  SupportVerdict verdict = decide_support(s, v);
  REQUIRE(verdict.status == SupportStatus::kSupport);
  const SupportWitness& w = *verdict.witness;
  CHECK((w.x.mat().diagonal().real() - w.y.mat().diagonal().real())
            .cwiseAbs()
            .sum() <= 1e-8);
}

TEST_CASE("separated planes yield a verified certificate") {
  // m_S fills the first two coordinates, m_V is the third unit vector.
  Subspace s = orthonormalize({Vector::Unit(3, 0), Vector::Unit(3, 1)});
  Subspace v = span_unit(3, 2);
  SupportVerdict verdict = decide_support(s, v);
  REQUIRE(verdict.status == SupportStatus::kNoSupport);
  CHECK(certificate_margin(s, v, verdict.certificate->direction) > 1e-8);
}

TEST_CASE("truncated route matches the primal route") {
  auto [s, v] = crossing_pair();
  SupportVerdict direct = support_via_truncated_jnr(s, v);
  CHECK(direct.status == SupportStatus::kSupport);

  Subspace e1 = span_unit(2, 0);
  Subspace e2 = span_unit(2, 1);
  SupportVerdict apart = support_via_truncated_jnr(e1, e2);
  REQUIRE(apart.status == SupportStatus::kNoSupport);
  CHECK(certificate_margin(e1, e2, apart.certificate->direction) > 1e-8);

  Rng rng(64);
  int decided = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Rng stream = rng.fork(trial);
    int n = 5 + (trial % 2);
    auto [a, b] = random_orthogonal_pair(stream, n, 2, 2);
    SupportVerdict primal = decide_support(a, b);
    SupportVerdict jnr = support_via_truncated_jnr(a, b);
    if (primal.status == SupportStatus::kUndecided ||
        jnr.status == SupportStatus::kUndecided)
      continue;
    CHECK(primal.status == jnr.status);
    ++decided;
  }
  CHECK(decided >= 18);
}

TEST_CASE("truncated route witnesses share a projected moment point") {
  auto [s, v] = crossing_pair_4();
  SupportVerdict verdict = support_via_truncated_jnr(s, v);
  REQUIRE(verdict.status == SupportStatus::kSupport);
  const SupportWitness& w = *verdict.witness;
  CHECK((w.x.mat().diagonal().real() - w.y.mat().diagonal().real())
            .cwiseAbs()
            .sum() <= 1e-8);
  CHECK(std::abs(w.common.coords().sum() - 1.0) <= 1e-10);
}

TEST_CASE("verdicts are permutation equivariant") {
  Rng rng(65);
  auto [s, v] = random_orthogonal_pair(rng, 5, 2, 1);

  Eigen::PermutationMatrix<Eigen::Dynamic> perm(5);
  perm.setIdentity();
  std::swap(perm.indices()(0), perm.indices()(3));
  std::swap(perm.indices()(1), perm.indices()(4));
  Matrix p = perm.toDenseMatrix().cast<Complex>();

  Subspace ps(Matrix(p * s.frame()));
  Subspace pv(Matrix(p * v.frame()));

  SupportVerdict base = decide_support(s, v);
  SupportVerdict moved = decide_support(ps, pv);
  REQUIRE(base.status == moved.status);
  if (base.status == SupportStatus::kSupport) {
    RealVector lifted = p.real() * base.witness->common.coords();
    CHECK((lifted - moved.witness->common.coords()).cwiseAbs().maxCoeff() <=
          1e-6);
  } else if (base.status == SupportStatus::kNoSupport) {
    CHECK(certificate_margin(ps, pv,
                             RealVector(p.real() *
                                        base.certificate->direction)) >
          1e-8);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "minop/hermitian.hpp"
#include "minop/jnr.hpp"
#include "minop/moment.hpp"
#include "minop/rng.hpp"
#include "minop/subspace.hpp"
#include "oracles.hpp"

using namespace minop;

namespace {

Subspace random_subspace(Rng& rng, int n, int r) {
  std::vector<Vector> vs;
  for (int i = 0; i < r; ++i) vs.push_back(gaussian_vector(rng, n));
  return orthonormalize(vs);
}

DensityMatrix random_density(Rng& rng, int n) {
  Matrix g = gaussian_matrix(rng, n, n);
  Matrix p = g * g.adjoint();
  return DensityMatrix(HermitianMatrix(p / p.trace().real()));
}

HermitianMatrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return HermitianMatrix(m);
}

// Pauli pair; its joint numerical range is the closed unit disk, since
// cos(t) X + sin(t) Z has norm 1 for every angle.
HermitianFamily pauli_xz() {
  Matrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  return HermitianFamily({HermitianMatrix(x), HermitianMatrix(z)});
}

}  // namespace

TEST_CASE("evaluate on fixed pairs") {
  HermitianFamily f({diag2(1, -1)});
  DensityMatrix half(HermitianMatrix(Matrix::Identity(2, 2) / 2.0));
  CHECK(evaluate(f, half)(0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("coordinate family vanishes orthogonally to S and sums on D_S") {
  Rng rng(41);
  Subspace s = random_subspace(rng, 5, 2);
  HermitianFamily f = ase_family(s, 5);

  Subspace comp = orthogonal_complement(s);
  Vector x = comp.frame().col(0);
  DensityMatrix away(HermitianMatrix(x * x.adjoint()));
  CHECK(evaluate(f, away).cwiseAbs().maxCoeff() <= 1e-12);

  // Densities supported on S evaluate to points of unit coordinate sum.
  Matrix inside = s.projector().mat() / 2.0;
  CHECK(evaluate(f, DensityMatrix(HermitianMatrix(inside))).sum() ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evaluate validates dimensions") {
  HermitianFamily f({diag2(1, -1)});
  DensityMatrix rho(HermitianMatrix(Matrix::Identity(3, 3) / 3.0));
  CHECK_THROWS_AS(evaluate(f, rho), ValidationError);
}

TEST_CASE("support function on fixed input") {
  HermitianFamily f({diag2(3, 1)});
  RealVector d(1);
  d << 1.0;
  CHECK(support_function(f, d).value == doctest::Approx(3.0).epsilon(1e-14));
  d << -1.0;
  CHECK(support_function(f, d).value == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("support maximizer attains the support value") {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    Rng stream = rng.fork(trial);
    std::vector<HermitianMatrix> members;
    for (int j = 0; j < 3; ++j) {
      Matrix g = gaussian_matrix(stream, 4, 4);
      members.emplace_back((g + g.adjoint()) / 2.0);
    }
    HermitianFamily f(members);
    RealVector d(3);
    for (int j = 0; j < 3; ++j) d(j) = stream.normal();
    SupportFunctionValue sv = support_function(f, d);
    CHECK(std::abs(evaluate(f, sv.maximizer).dot(d) - sv.value) <= 1e-10);
  }
}

TEST_CASE("membership against the exact disk") {
  HermitianFamily f = pauli_xz();
  RealVector z(2);

  z << 0.0, 0.0;
  CHECK(jnr_membership(f, z).status == JnrMembership::kInside);

  for (double angle : {0.3, 1.7, 4.0}) {
    z << 0.9 * std::cos(angle), 0.9 * std::sin(angle);
    JnrVerdict in = jnr_membership(f, z);
    CHECK(in.status == JnrMembership::kInside);
    REQUIRE(in.witness.has_value());
    CHECK((evaluate(f, *in.witness) - z).cwiseAbs().sum() <= 1e-7);

    z << 1.2 * std::cos(angle), 1.2 * std::sin(angle);
    JnrVerdict out = jnr_membership(f, z);
    REQUIRE(out.status == JnrMembership::kOutside);
    REQUIRE(out.direction.has_value());
    // Certificate recheck: the direction separates z from the range by more
    // than the tolerance.
    CHECK(out.direction->dot(z) -
              support_function(f, *out.direction).value > 1e-8);
  }
}

TEST_CASE("membership of constructed points and gross outliers") {
  Rng rng(43);
  std::vector<HermitianMatrix> members;
  for (int j = 0; j < 2; ++j) {
    Matrix g = gaussian_matrix(rng, 3, 3);
    members.emplace_back((g + g.adjoint()) / 2.0);
  }
  HermitianFamily f(members);
  for (int trial = 0; trial < 5; ++trial) {
    Rng stream = rng.fork(trial);
    JnrPoint z = evaluate(f, random_density(stream, 3));
    CHECK(jnr_membership(f, z).status != JnrMembership::kOutside);
  }

  HermitianFamily g({diag2(1, 0)});
  RealVector far(1);
  far << 2.0;
  JnrVerdict out = jnr_membership(g, far);
  REQUIRE(out.status == JnrMembership::kOutside);
  CHECK(std::abs((*out.direction)(0) - 1.0) <= 1e-9);
}

TEST_CASE("membership verdicts agree with a sampled hull") {
  Rng rng(44);
  HermitianFamily f = pauli_xz();
  std::vector<oracles::Point2> cloud;
  for (int i = 0; i < 400; ++i) {
    Rng stream = rng.fork(i);
    JnrPoint p = evaluate(f, random_density(stream, 2));
    cloud.push_back({p(0), p(1)});
  }
  std::vector<oracles::Point2> hull = oracles::hull_2d(cloud);

  for (int trial = 0; trial < 12; ++trial) {
    Rng stream = rng.fork(1000 + trial);
    RealVector z(2);
    z << 1.4 * (stream.uniform() - 0.5), 1.4 * (stream.uniform() - 0.5);
    double margin = oracles::hull_margin(hull, {z(0), z(1)});
    JnrMembership got = jnr_membership(f, z).status;
    // The sampled hull under-covers the true disk, so only clear-cut oracle
    // sides are binding.
    if (margin > 1e-2) CHECK(got != JnrMembership::kOutside);
    if (margin < -1e-2)
      CHECK((got == JnrMembership::kOutside ||
             got == JnrMembership::kUndecided));
  }
}

TEST_CASE("midpoints of range points stay in the range") {
  Rng rng(45);
  Subspace s = random_subspace(rng, 4, 2);
  HermitianFamily f = ase_family(s, 4);
  for (int trial = 0; trial < 5; ++trial) {
    Rng stream = rng.fork(trial);
    JnrPoint a = evaluate(f, random_density(stream, 4));
    JnrPoint b = evaluate(f, random_density(stream, 4));
    JnrPoint mid = (a + b) / 2.0;
    CHECK(jnr_membership(f, mid, 1e-8).status != JnrMembership::kOutside);
  }
}

TEST_CASE("radius identities on the diagonal line") {
  Vector v(2);
  v << 1, 1;
  Subspace s = orthonormalize({v});
  CHECK(radius_p(s, 2, 1.0, 200, 9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(radius_p(s, 2, 2.0, 200, 9) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-10));
  CHECK_THROWS_AS(radius_p(s, 2, 0.5, 10, 9), ValidationError);
}

TEST_CASE("radius bounds on random subspaces") {
  Rng rng(46);
  for (int trial = 0; trial < 5; ++trial) {
    Rng stream = rng.fork(trial);
    Subspace s = random_subspace(stream, 5, 2);
    CHECK(std::abs(radius_p(s, 5, 1.0, 100, trial) - 1.0) <= 1e-9);
    for (double p : {2.0, 4.0})
      CHECK(radius_p(s, 5, p, 100, trial) <= 1.0 + 1e-9);
  }
}

TEST_CASE("radius is deterministic per seed") {
  Rng rng(47);
  Subspace s = random_subspace(rng, 5, 3);
  CHECK(radius_p(s, 5, 2.0, 64, 123) == radius_p(s, 5, 2.0, 64, 123));
}

TEST_CASE("classic samples live in the convex range") {
  Rng rng(48);
  Subspace s = random_subspace(rng, 4, 2);
  HermitianFamily f = ase_family(s, 4);
  std::vector<JnrPoint> pts = classic_jnr_sample(f, 15, 5);
  for (const JnrPoint& p : pts) {
    CHECK(p.minCoeff() >= -1e-12);
    CHECK(p.sum() <= 1.0 + 1e-12);
    CHECK(jnr_membership(f, p, 1e-9).status != JnrMembership::kOutside);
    // l^p norms of rank-one samples never exceed the l1 norm.
    double l1 = p.cwiseAbs().sum();
    for (double q : {2.0, 4.0}) {
      double lp = std::pow(p.cwiseAbs().array().pow(q).sum(), 1.0 / q);
      CHECK(lp <= l1 + 1e-12);
    }
    // Cone form: nonzero samples normalize to moment points.
    if (p.sum() > 1e-8) {
      MomentPoint unit(RealVector(p / p.sum()));
      CHECK(moment_membership(s, unit).status == Feasibility::kFeasible);
    }
  }
}

TEST_CASE("classic samples of the full space sum to one") {
  Vector e1 = Vector::Unit(3, 0), e2 = Vector::Unit(3, 1), e3 = Vector::Unit(3, 2);
  Subspace full = orthonormalize({e1, e2, e3});
  for (const JnrPoint& p : classic_jnr_sample(ase_family(full, 3), 10, 6))
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("moment points are unit-sum range points and back") {
  Rng rng(49);
  Subspace s = random_subspace(rng, 5, 2);
  HermitianFamily f = ase_family(s, 5);
  for (const MomentPoint& m : sample_moment_extremes(s, 5, 77)) {
    CHECK(jnr_membership(f, m.coords(), 1e-8).status != JnrMembership::kOutside);
  }
  for (int trial = 0; trial < 5; ++trial) {
    Rng stream = rng.fork(trial);
    Matrix z = s.projector().mat().cast<Complex>();
    Matrix g = gaussian_matrix(stream, 5, 5);
    DensityMatrix rho = project_density_on_subspace(
        HermitianMatrix(z + g + g.adjoint()), s);
    JnrPoint p = evaluate(f, rho);
    if (std::abs(p.sum() - 1.0) <= 1e-10) {
      CHECK(moment_membership(s, MomentPoint(p)).status ==
            Feasibility::kFeasible);
    }
  }
}

TEST_CASE("boundary trace of the segment family") {
  HermitianFamily f({diag2(1, 0), diag2(0, 1)});
  std::vector<std::array<double, 2>> pts = trace_boundary_2d(f, 0, 1, 32);
  REQUIRE(pts.size() == 32);
  for (const auto& p : pts) {
    // Unit-trace two-dimensional densities force x + y = 1, x in [0, 1].
    CHECK(std::abs(p[0] + p[1] - 1.0) <= 1e-10);
    CHECK(p[0] >= -1e-10);
    CHECK(p[0] <= 1.0 + 1e-10);
  }

  // Touch-point set is symmetric across the diagonal, matching the family's
  // slot-swap symmetry.
  std::vector<std::array<double, 2>> swapped = trace_boundary_2d(f, 1, 0, 32);
  for (const auto& p : pts) {
    double best = 1e9;
    for (const auto& q : swapped)
      best = std::min(best, std::abs(p[0] - q[1]) + std::abs(p[1] - q[0]));
    CHECK(best <= 1e-9);
  }
}

TEST_CASE("boundary touch points pass membership") {
  Rng rng(50);
  std::vector<HermitianMatrix> members;
  for (int j = 0; j < 2; ++j) {
    Matrix g = gaussian_matrix(rng, 3, 3);
    members.emplace_back((g + g.adjoint()) / 2.0);
  }
  HermitianFamily f(members);
  for (const auto& p : trace_boundary_2d(f, 0, 1, 16)) {
    RealVector z(2);
    z << p[0], p[1];
    CHECK(jnr_membership(f, z).status != JnrMembership::kOutside);
  }
  CHECK_THROWS_AS(trace_boundary_2d(f, 0, 0, 16), ValidationError);
}

TEST_CASE("family and truncation validation") {
  CHECK_THROWS_AS(HermitianFamily{std::vector<HermitianMatrix>{}},
                  ValidationError);
  std::vector<HermitianMatrix> mixed{diag2(1, 0),
                                     HermitianMatrix(Matrix::Zero(3, 3))};
  CHECK_THROWS_AS(HermitianFamily{mixed}, ValidationError);

  Rng rng(51);
  Subspace s = random_subspace(rng, 4, 2);
  CHECK_THROWS_AS(ase_family(s, 0), ValidationError);
  CHECK_THROWS_AS(ase_family(s, 5), ValidationError);
  CHECK(ase_family(s, 3).size() == 3);
}

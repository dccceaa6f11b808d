#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "minop/curves.hpp"
#include "minop/gellmann.hpp"
#include "minop/hermitian.hpp"
#include "minop/minimal.hpp"
#include "minop/rng.hpp"
#include "minop/subspace.hpp"
#include "minop/support.hpp"

namespace {

using namespace minop;

HermitianMatrix random_hermitian(int n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix g = gaussian_matrix(rng, n, n);
  return HermitianMatrix(0.5 * (g + g.adjoint()));
}

Subspace random_subspace(int n, int r, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> vs;
  for (int i = 0; i < r; ++i) vs.push_back(gaussian_vector(rng, n));
  return orthonormalize(vs);
}

std::pair<Subspace, Subspace> orthogonal_pair(int n, int r, int t,
                                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> vs;
  for (int i = 0; i < r + t; ++i) vs.push_back(gaussian_vector(rng, n));
  Subspace joint = orthonormalize(vs);
  return {Subspace(Matrix(joint.frame().leftCols(r))),
          Subspace(Matrix(joint.frame().rightCols(t)))};
}

void BM_EigenHermitian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  HermitianMatrix a = random_hermitian(n, 11);
  for (auto _ : state) {
    EigenDecomposition d = eigen_hermitian(a);
    benchmark::DoNotOptimize(d.eigenvalues);
  }
}
BENCHMARK(BM_EigenHermitian)->Arg(8)->Arg(32)->Arg(128);

void BM_ProjectDensityOnSubspace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Subspace s = random_subspace(n, n / 2, 21);
  HermitianMatrix z = random_hermitian(n, 22);
  for (auto _ : state) {
    DensityMatrix d = project_density_on_subspace(z, s);
    benchmark::DoNotOptimize(d.mat());
  }
}
BENCHMARK(BM_ProjectDensityOnSubspace)->Arg(8)->Arg(32);

void BM_DecideSupport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto pr = orthogonal_pair(n, 2, 2, 31);
  for (auto _ : state) {
    SupportVerdict v = decide_support(pr.first, pr.second);
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(BM_DecideSupport)->Arg(5)->Arg(8);

void BM_IsoUApply(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  IsoU iso(random_subspace(2 * r, r, 41));
  Rng rng(42);
  Matrix m = gaussian_matrix(rng, r, r);
  for (auto _ : state) {
    Matrix out = iso.apply(m);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_IsoUApply)->Arg(2)->Arg(4)->Arg(8);

void BM_OracleDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  HermitianMatrix a = random_hermitian(n, 51);
  OracleConfig cfg;
  cfg.iterations = 2000;
  cfg.patience = 500;
  for (auto _ : state) {
    OracleResult res = oracle_distance_to_diagonals(a, cfg);
    benchmark::DoNotOptimize(res.distance);
  }
}
BENCHMARK(BM_OracleDistance)->Arg(3)->Arg(6);

void BM_EvalCurve(benchmark::State& state) {
  Subspace s = random_subspace(6, 3, 61);
  PrincipalCurve curve = build_curve(s, 0, 1);
  double t = 0.0;
  for (auto _ : state) {
    CurveSample smp = eval_curve(curve, t);
    benchmark::DoNotOptimize(smp.moment);
    t = t < 1.5 ? t + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_EvalCurve);

}  // namespace

BENCHMARK_MAIN();

#include "minop/gellmann.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "minop/rng.hpp"

namespace minop {
namespace {

const Complex kI(0.0, 1.0);

double min_eigenvalue(const Matrix& m) {
  Matrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

GellMannBasis build_gellmann(int r) {
  if (r < 1) throw ValidationError("build_gellmann: r must be >= 1");
  check_dim(r, "build_gellmann");
  GellMannBasis basis;
  basis.r = r;
  basis.elements.reserve(r * r);
  // Loop indices follow the 1-based construction; matrix writes are 0-based.
  for (int k = 1; k <= r; ++k) {
    for (int j = 1; j <= r; ++j) {
      if (k == r && j == r) continue;
      Matrix w = Matrix::Zero(r, r);
      if (k == j) {
        // Diagonal family member: traceless, unit Frobenius norm.
        double scale = 1.0 / std::sqrt(1.0 + 1.0 / j);
        for (int l = 1; l <= j; ++l) w(l - 1, l - 1) = scale / j;
        w(j, j) = -scale;
      } else if (k < j) {
        w(k - 1, j - 1) = 1.0 / std::sqrt(2.0);
        w(j - 1, k - 1) = 1.0 / std::sqrt(2.0);
      } else {
        w(k - 1, j - 1) = kI / std::sqrt(2.0);
        w(j - 1, k - 1) = -kI / std::sqrt(2.0);
      }
      basis.elements.push_back(std::move(w));
      basis.indices.emplace_back(k - 1, j - 1);
    }
  }
  basis.elements.push_back(Matrix::Identity(r, r) / std::sqrt(double(r)));
  return basis;
}

CompressedBasis build_compressed(const Subspace& s) {
  GellMannBasis gm = build_gellmann(s.dim());
  CompressedBasis out{s, {}, gm.indices};
  out.elements.reserve(gm.elements.size());
  // Substituting the frame columns for the coordinate vectors turns each
  // rank-structured combination of e_k (x) e_j into F (e_k (x) e_j) F*, so
  // the whole element maps by frame conjugation.
  for (const Matrix& w : gm.elements) {
    Matrix v = s.frame() * w * s.frame().adjoint();
    out.elements.push_back((v + v.adjoint()) / 2.0);
  }
  return out;
}

IsoU::IsoU(Subspace s)
    : basis_(build_gellmann(s.dim())), compressed_(build_compressed(s)) {}

Matrix IsoU::apply(const Matrix& m) const {
  const int r = basis_.r;
  if (m.rows() != r || m.cols() != r)
    throw ValidationError("IsoU::apply: input must be " + std::to_string(r) +
                          "x" + std::to_string(r));
  const Matrix& f = compressed_.subspace.frame();
  return f * m * f.adjoint();
}

Matrix IsoU::apply_via_basis(const Matrix& m) const {
  const int r = basis_.r;
  if (m.rows() != r || m.cols() != r)
    throw ValidationError("IsoU::apply_via_basis: input must be " +
                          std::to_string(r) + "x" + std::to_string(r));
  const int n = compressed_.subspace.ambient();
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < basis_.elements.size(); ++i) {
    Complex coeff = (basis_.elements[i].adjoint() * m).trace();
    out += coeff * compressed_.elements[i];
  }
  return out;
}

Matrix IsoU::apply_inverse(const Matrix& b) const {
  const int n = compressed_.subspace.ambient();
  if (b.rows() != n || b.cols() != n)
    throw ValidationError("IsoU::apply_inverse: input must be " +
                          std::to_string(n) + "x" + std::to_string(n));
  const Matrix& f = compressed_.subspace.frame();
  Matrix compressed = f * (f.adjoint() * b * f) * f.adjoint();
  double residual = (b - compressed).norm();
  if (residual > 1e-9)
    throw ValidationError("IsoU::apply_inverse: input not supported on the "
                          "subspace, compression residual " +
                          std::to_string(residual));
  return f.adjoint() * b * f;
}

double UPropertyReport::worst() const {
  double w = 0.0;
  for (const auto& e : entries) w = std::max(w, e.max_residual);
  return w;
}

bool UPropertyReport::all_within(double bound) const {
  return worst() <= bound;
}

UPropertyReport verify_u_properties(const IsoU& iso, int trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw ValidationError("verify_u_properties: trials < 1");
  const int r = iso.source_dim();
  const Matrix ps = iso.subspace().projector().mat();

  UPropertyReport report;
  report.entries = {{"trace_preservation", 0.0},
                    {"adjoint_compatibility", 0.0},
                    {"hermiticity_equivalence", 0.0},
                    {"multiplicativity", 0.0},
                    {"inverse_compatibility", 0.0},
                    {"positivity_both_ways", 0.0},
                    {"trace_inner_product", 0.0},
                    {"projection_preservation", 0.0},
                    {"density_image", 0.0}};
  auto bump = [&](int slot, double value) {
    report.entries[slot].max_residual =
        std::max(report.entries[slot].max_residual, value);
  };

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Rng stream = rng.fork(t);
    Matrix a = gaussian_matrix(stream, r, r);
    Matrix b = gaussian_matrix(stream, r, r);
    Matrix ua = iso.apply(a);
    Matrix ub = iso.apply(b);

    bump(0, std::abs(ua.trace() - a.trace()));
    bump(1, (iso.apply(Matrix(a.adjoint())) - ua.adjoint()).norm());

    // Hermiticity both ways: hermitian input has hermitian image, and a
    // hermitian operator supported on S pulls back hermitian.
    Matrix h = (a + a.adjoint()) / 2.0;
    bump(2, (iso.apply(h) - iso.apply(h).adjoint()).norm());
    const int n = static_cast<int>(ps.rows());
    Matrix gs = ps * gaussian_matrix(stream, n, n) * ps;
    Matrix hs = (gs + gs.adjoint()) / 2.0;
    Matrix back = iso.apply_inverse(hs);
    bump(2, (back - back.adjoint()).norm());

    bump(3, (iso.apply(a * b) - ua * ub).norm());

    // Invertible input: gaussian square matrices are far from singular with
    // overwhelming probability; regenerate on the rare near-singular draw.
    Matrix inv_src = a;
    while (std::abs(inv_src.determinant()) < 1e-8)
      inv_src = gaussian_matrix(stream, r, r);
    bump(4, (iso.apply(inv_src.inverse()) * iso.apply(inv_src) - ps).norm());

    // Positivity both ways.
    Matrix g = gaussian_matrix(stream, r, r);
    Matrix psd = g * g.adjoint();
    bump(5, std::max(0.0, -min_eigenvalue(iso.apply(psd))));
    Matrix m2 = gaussian_matrix(stream, r, r);
    Matrix psd_on_s = iso.subspace().frame() * (m2 * m2.adjoint()) *
                      iso.subspace().frame().adjoint();
    bump(5, std::max(0.0, -min_eigenvalue(iso.apply_inverse(psd_on_s))));

    bump(6, std::abs((ub.adjoint() * ua).trace() - (b.adjoint() * a).trace()));

    // Projection preservation both ways, using a random projection of rank
    // 1..r built from orthonormalized gaussian columns.
    int q = 1 + static_cast<int>(stream.next_u64() % static_cast<std::uint64_t>(r));
    std::vector<Vector> cols;
    for (int i = 0; i < q; ++i) cols.push_back(gaussian_vector(stream, r));
    Matrix qf = orthonormalize(cols).frame();
    Matrix proj = qf * qf.adjoint();
    Matrix up = iso.apply(proj);
    bump(7, (up * up - up).norm() + (up - up.adjoint()).norm());
    Matrix tp = iso.subspace().frame() * proj * iso.subspace().frame().adjoint();
    Matrix tb = iso.apply_inverse(tp);
    bump(7, (tb * tb - tb).norm() + (tb - tb.adjoint()).norm());

    // Density image both ways.
    Matrix g3 = gaussian_matrix(stream, r, r);
    Matrix rho = g3 * g3.adjoint();
    rho /= rho.trace();
    Matrix urho = iso.apply(rho);
    double d9 = std::abs(urho.trace() - Complex(1.0, 0.0));
    d9 = std::max(d9, std::max(0.0, -min_eigenvalue(urho)));
    d9 = std::max(d9, (urho - ps * urho * ps).norm());
    Matrix g4 = gaussian_matrix(stream, r, r);
    Matrix y = iso.subspace().frame() * (g4 * g4.adjoint()) *
               iso.subspace().frame().adjoint();
    y /= y.trace();
    Matrix yback = iso.apply_inverse(y);
    d9 = std::max(d9, std::abs(yback.trace() - Complex(1.0, 0.0)));
    d9 = std::max(d9, std::max(0.0, -min_eigenvalue(yback)));
    bump(8, d9);
  }
  return report;
}

}  // namespace minop

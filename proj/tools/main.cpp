#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "minop/curves.hpp"
#include "minop/gellmann.hpp"
#include "minop/jnr.hpp"
#include "minop/minimal.hpp"
#include "minop/moment.hpp"
#include "minop/rng.hpp"
#include "minop/subspace.hpp"
#include "minop/support.hpp"

namespace {

using namespace minop;
using cli::fmt17;
using cli::IoError;

constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;
constexpr int kExitConstraint = 65;
constexpr int kExitFailure = 70;

// Raised for semantic command-line problems the parser cannot catch
// (conflicting modes, bad composite values); maps to exit 64.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// MINOP_TOL overrides the default feasibility tolerance; explicit --tol
// flags win over both.
double resolve_tol(const std::optional<double>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MINOP_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      throw UsageError(std::string("MINOP_TOL is not a positive number: ") +
                       env);
    return v;
  }
  return 1e-8;
}

std::string support_status_str(SupportStatus s) {
  switch (s) {
    case SupportStatus::kSupport: return "SUPPORT";
    case SupportStatus::kNoSupport: return "NO_SUPPORT";
    case SupportStatus::kUndecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

std::string support_body(const SupportVerdict& v) {
  std::ostringstream out;
  out << "\"status\":\"" << support_status_str(v.status) << "\""
      << ",\"residual\":" << fmt17(v.residual)
      << ",\"iterations\":" << v.iterations;
  if (v.witness) {
    out << ",\"witness\":{\"common\":"
        << cli::json_real_array(v.witness->common.coords())
        << ",\"x\":{\"n\":" << v.witness->x.dim()
        << ",\"entries\":" << cli::json_matrix_entries(v.witness->x.mat())
        << "},\"y\":{\"n\":" << v.witness->y.dim()
        << ",\"entries\":" << cli::json_matrix_entries(v.witness->y.mat())
        << "}}";
  }
  if (v.certificate) {
    out << ",\"certificate\":{\"direction\":"
        << cli::json_real_array(v.certificate->direction)
        << ",\"margin\":" << fmt17(v.certificate->margin) << "}";
  }
  return out.str();
}

int support_exit(SupportStatus s) {
  switch (s) {
    case SupportStatus::kSupport: return 0;
    case SupportStatus::kNoSupport: return 1;
    case SupportStatus::kUndecided: return kExitUndecided;
  }
  return kExitUndecided;
}

struct SupportArgs {
  std::string s_path, v_path, route = "primal";
  std::optional<double> tol;
  int max_iter = 100000;
};

int run_support(const SupportArgs& args) {
  Subspace s = cli::load_subspace(args.s_path);
  Subspace v = cli::load_subspace(args.v_path);
  SolverConfig cfg;
  cfg.tol = resolve_tol(args.tol);
  cfg.max_iterations = args.max_iter;

  if (args.route == "both") {
    SupportVerdict primal = decide_support(s, v, cfg);
    SupportVerdict jnr = support_via_truncated_jnr(s, v, cfg);
    SupportStatus combined;
    if (primal.status == jnr.status)
      combined = primal.status;
    else if (primal.status == SupportStatus::kUndecided)
      combined = jnr.status;
    else if (jnr.status == SupportStatus::kUndecided)
      combined = primal.status;
    else
      combined = SupportStatus::kUndecided;
    std::cout << "{\"schema\":\"minop.support/1\",\"route\":\"both\""
              << ",\"status\":\"" << support_status_str(combined) << "\""
              << ",\"primal\":{" << support_body(primal) << "}"
              << ",\"jnr\":{" << support_body(jnr) << "}}\n";
    return support_exit(combined);
  }

  SupportVerdict verdict = args.route == "jnr"
                               ? support_via_truncated_jnr(s, v, cfg)
                               : decide_support(s, v, cfg);
  std::cout << "{\"schema\":\"minop.support/1\",\"route\":\"" << args.route
            << "\"," << support_body(verdict) << "}\n";
  return support_exit(verdict.status);
}

struct MinimalArgs {
  std::string s_path, v_path, r_path, matrix_path;
  std::optional<double> lambda;
  std::optional<double> tol;
  int max_iter = 100000;
  bool oracle = false;
};

std::string minimal_json(const MinimalityCertificate& c) {
  std::ostringstream out;
  out << "{\"schema\":\"minop.minimal/1\",\"status\":\"";
  switch (c.status) {
    case MinimalStatus::kMinimal: out << "MINIMAL"; break;
    case MinimalStatus::kNotMinimal: out << "NOT_MINIMAL"; break;
    case MinimalStatus::kUndecided: out << "UNDECIDED"; break;
  }
  out << "\",\"route\":\"";
  switch (c.route) {
    case CertificateRoute::kSupportTheorem: out << "SUPPORT_THEOREM"; break;
    case CertificateRoute::kOracle: out << "ORACLE"; break;
    case CertificateRoute::kBoth: out << "BOTH"; break;
  }
  out << "\",\"lambda\":" << fmt17(c.lambda);
  out << ",\"distance\":"
      << (c.distance ? fmt17(*c.distance) : std::string("null"));
  out << ",\"best_diagonal\":"
      << (c.best_diagonal ? cli::json_real_array(*c.best_diagonal)
                          : std::string("null"));
  out << ",\"note\":\"" << cli::json_escape(c.note) << "\"";
  out << ",\"support\":";
  if (c.support)
    out << "{" << support_body(*c.support) << "}";
  else
    out << "null";
  out << "}";
  return out.str();
}

int minimal_exit(MinimalStatus s) {
  switch (s) {
    case MinimalStatus::kMinimal: return 0;
    case MinimalStatus::kNotMinimal: return 1;
    case MinimalStatus::kUndecided: return kExitUndecided;
  }
  return kExitUndecided;
}

int run_minimal(const MinimalArgs& args) {
  const bool construct =
      !args.s_path.empty() || !args.v_path.empty() || args.lambda.has_value();
  const bool analyze = !args.matrix_path.empty();
  if (construct == analyze)
    throw UsageError(
        "minimal: pass either --s --v --lambda (construct) or --matrix "
        "(analyze)");
  SolverConfig cfg;
  cfg.tol = resolve_tol(args.tol);
  cfg.max_iterations = args.max_iter;
  OracleConfig ocfg;

  MinimalityCertificate cert;
  if (analyze) {
    HermitianMatrix a(cli::load_matrix(args.matrix_path));
    cert = certify_matrix(a,
                          args.oracle ? CertificateRoute::kOracle
                                      : CertificateRoute::kSupportTheorem,
                          cfg, ocfg);
  } else {
    if (args.s_path.empty() || args.v_path.empty() || !args.lambda)
      throw UsageError("minimal: construct mode needs --s, --v and --lambda");
    Subspace s = cli::load_subspace(args.s_path);
    Subspace v = cli::load_subspace(args.v_path);
    std::optional<HermitianMatrix> r;
    if (!args.r_path.empty())
      r.emplace(cli::load_matrix(args.r_path));
    MinimalCandidate cand = make_candidate(s, v, *args.lambda, std::move(r));
    cert = args.oracle ? certify_matrix(assemble(cand),
                                        CertificateRoute::kOracle, cfg, ocfg)
                       : certify_by_support(cand, cfg, ocfg);
  }
  std::cout << minimal_json(cert) << "\n";
  return minimal_exit(cert.status);
}

struct CurveArgs {
  std::string s_path, out_path;
  int j = 0, k = 0, samples = 0;
};

int run_curve(const CurveArgs& args) {
  Subspace s = cli::load_subspace(args.s_path);
  PrincipalCurve curve = build_curve(s, args.j, args.k);
  std::cerr << (classify_curve(curve) == CurveKind::kSegment ? "SEGMENT"
                                                             : "ELLIPSE_ARC")
            << "\n";
  constexpr double kHalfPi = 1.5707963267948966;
  std::ostringstream csv;
  csv << "t";
  for (int q = 1; q <= s.ambient(); ++q) csv << ",x_" << q;
  csv << "\n";
  for (int i = 0; i <= args.samples; ++i) {
    double t = kHalfPi * i / args.samples;
    CurveSample sample = eval_curve(curve, t);
    csv << fmt17(sample.t);
    for (int q = 0; q < s.ambient(); ++q)
      csv << "," << fmt17(sample.moment.coords()(q));
    csv << "\n";
  }
  cli::write_file(args.out_path, csv.str());
  return 0;
}

struct JnrArgs {
  std::string family_path, subspace_path, dims, out_path;
  int m = 0, directions = 0;
  bool svg = false;
};

std::string jnr_svg(const std::vector<std::array<double, 2>>& boundary,
                    const std::vector<std::array<double, 2>>& interior) {
  double min_x = boundary[0][0], max_x = boundary[0][0];
  double min_y = boundary[0][1], max_y = boundary[0][1];
  for (const auto& p : boundary) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  double span_x = std::max(max_x - min_x, 1e-9);
  double span_y = std::max(max_y - min_y, 1e-9);
  auto sx = [&](double x) { return 20.0 + 600.0 * (x - min_x) / span_x; };
  auto sy = [&](double y) { return 620.0 - 600.0 * (y - min_y) / span_y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 640\">\n"
      << "<rect width=\"640\" height=\"640\" fill=\"#ffffff\"/>\n"
      << "<polyline fill=\"none\" stroke=\"#1f6f8b\" stroke-width=\"1.5\" "
         "points=\"";
  for (const auto& p : boundary)
    svg << fmt17(sx(p[0])) << "," << fmt17(sy(p[1])) << " ";
  svg << fmt17(sx(boundary[0][0])) << "," << fmt17(sy(boundary[0][1]));
  svg << "\"/>\n";
  for (const auto& p : interior) {
    if (p[0] < min_x || p[0] > max_x || p[1] < min_y || p[1] > max_y) continue;
    svg << "<circle cx=\"" << fmt17(sx(p[0])) << "\" cy=\"" << fmt17(sy(p[1]))
        << "\" r=\"2\" fill=\"#c46d2a\" fill-opacity=\"0.6\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

int run_jnr(const JnrArgs& args) {
  const bool from_family = !args.family_path.empty();
  const bool from_subspace = !args.subspace_path.empty();
  if (from_family == from_subspace)
    throw UsageError("jnr: pass either --family or --subspace with --m");

  std::optional<HermitianFamily> family;
  if (from_family) {
    family.emplace(cli::load_family(args.family_path));
  } else {
    if (args.m < 1) throw UsageError("jnr: subspace mode needs --m >= 1");
    Subspace s = cli::load_subspace(args.subspace_path);
    family.emplace(ase_family(s, args.m));
  }

  auto comma = args.dims.find(',');
  int j = 0, k = 0;
  try {
    if (comma == std::string::npos) throw std::invalid_argument("missing ,");
    std::size_t used = 0;
    j = std::stoi(args.dims.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("trailing text");
    std::string rest = args.dims.substr(comma + 1);
    k = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing text");
  } catch (const std::exception&) {
    throw UsageError("jnr: --dims expects J,K with integer member slots");
  }
  if (j == k) throw UsageError("jnr: --dims slots must differ");
  if (j < 0 || j >= family->size() || k < 0 || k >= family->size())
    throw UsageError("jnr: --dims slot outside the family (size " +
                     std::to_string(family->size()) + ")");

  std::vector<std::array<double, 2>> boundary =
      trace_boundary_2d(*family, j, k, args.directions);
  if (args.svg) {
    std::vector<JnrPoint> samples = classic_jnr_sample(*family, 256, 0);
    std::vector<std::array<double, 2>> interior;
    interior.reserve(samples.size());
    for (const JnrPoint& p : samples) interior.push_back({p(j), p(k)});
    cli::write_file(args.out_path, jnr_svg(boundary, interior));
  } else {
    std::ostringstream csv;
    csv << "x,y\n";
    for (const auto& p : boundary)
      csv << fmt17(p[0]) << "," << fmt17(p[1]) << "\n";
    cli::write_file(args.out_path, csv.str());
  }
  return 0;
}

struct GellmannArgs {
  std::string subspace_path;
  std::optional<int> dim;
  int trials = 200;
  std::uint64_t seed = 0;
};

int run_gellmann(const GellmannArgs& args) {
  std::optional<Subspace> s;
  if (!args.subspace_path.empty()) {
    s.emplace(cli::load_subspace(args.subspace_path));
    if (args.dim && *args.dim != s->dim())
      throw UsageError("gellmann: --dim " + std::to_string(*args.dim) +
                       " contradicts the subspace dimension " +
                       std::to_string(s->dim()));
  } else {
    if (!args.dim) throw UsageError("gellmann: pass --dim or --subspace");
    if (*args.dim < 1 || 2 * *args.dim > kMaxDim)
      throw UsageError("gellmann: --dim must lie in [1, " +
                       std::to_string(kMaxDim / 2) + "]");
    // Deterministic generic subspace of dimension r in C^{2r}.
    Rng rng(args.seed);
    Rng frame = rng.fork(0);
    std::vector<Vector> vs;
    for (int i = 0; i < *args.dim; ++i)
      vs.push_back(gaussian_vector(frame, 2 * *args.dim));
    s.emplace(orthonormalize(vs));
  }

  IsoU iso(*s);
  UPropertyReport report = verify_u_properties(iso, args.trials, args.seed);
  const double bound = 1e-9;

  std::ostringstream out;
  out << "{\"schema\":\"minop.gellmann/1\",\"r\":" << s->dim()
      << ",\"ambient\":" << s->ambient() << ",\"trials\":" << args.trials
      << ",\"seed\":" << args.seed << ",\"bound\":" << fmt17(bound)
      << ",\"properties\":[";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (i) out << ",";
    out << "{\"property\":\"" << cli::json_escape(report.entries[i].property)
        << "\",\"max_residual\":" << fmt17(report.entries[i].max_residual)
        << "}";
  }
  bool pass = report.all_within(bound);
  out << "],\"worst\":" << fmt17(report.worst())
      << ",\"pass\":" << (pass ? "true" : "false") << "}";
  std::cout << out.str() << "\n";
  return pass ? 0 : 1;
}

RealVector parse_point(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  try {
    while (pos < text.size()) {
      std::size_t used = 0;
      values.push_back(std::stod(text.substr(pos), &used));
      pos += used;
      if (pos < text.size()) {
        if (text[pos] != ',') throw std::invalid_argument("expected ,");
        ++pos;
      }
    }
  } catch (const std::exception&) {
    throw UsageError("moment: --point expects comma-separated coordinates");
  }
  if (values.empty())
    throw UsageError("moment: --point expects comma-separated coordinates");
  RealVector v(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    v(static_cast<int>(i)) = values[i];
  return v;
}

struct MomentArgs {
  std::string s_path, v_path, point;
  std::optional<double> tol;
  int count = 0, samples = 0;
  std::uint64_t seed = 0;
};

int run_moment_membership(const MomentArgs& args) {
  Subspace s = cli::load_subspace(args.s_path);
  RealVector coords = parse_point(args.point);
  std::optional<MomentPoint> point;
  try {
    point.emplace(coords);
  } catch (const ValidationError& e) {
    // A broken simplex point is malformed input, not a solver outcome.
    throw UsageError(std::string("moment: ") + e.what());
  }
  MomentVerdict verdict = moment_membership(s, *point, resolve_tol(args.tol));
  std::ostringstream out;
  out << "{\"schema\":\"minop.moment.membership/1\",\"status\":\"";
  switch (verdict.status) {
    case Feasibility::kFeasible: out << "FEASIBLE"; break;
    case Feasibility::kInfeasible: out << "INFEASIBLE"; break;
    case Feasibility::kUndecided: out << "UNDECIDED"; break;
  }
  out << "\",\"residual\":" << fmt17(verdict.residual)
      << ",\"margin\":" << fmt17(verdict.margin)
      << ",\"iterations\":" << verdict.iterations;
  out << ",\"witness_diagonal\":";
  if (verdict.witness)
    out << cli::json_real_array(verdict.witness->mat().diagonal().real());
  else
    out << "null";
  out << ",\"direction\":";
  if (verdict.direction)
    out << cli::json_real_array(*verdict.direction);
  else
    out << "null";
  out << "}";
  std::cout << out.str() << "\n";
  switch (verdict.status) {
    case Feasibility::kFeasible: return 0;
    case Feasibility::kInfeasible: return 1;
    case Feasibility::kUndecided: return kExitUndecided;
  }
  return kExitUndecided;
}

int run_moment_centroid(const MomentArgs& args) {
  Subspace s = cli::load_subspace(args.s_path);
  std::cout << "{\"schema\":\"minop.moment.centroid/1\",\"point\":"
            << cli::json_real_array(centroid(s).coords()) << "}\n";
  return 0;
}

int run_moment_sample(const MomentArgs& args) {
  Subspace s = cli::load_subspace(args.s_path);
  std::vector<MomentPoint> points =
      sample_moment_extremes(s, args.count, args.seed);
  std::ostringstream out;
  out << "{\"schema\":\"minop.moment.sample/1\",\"count\":" << args.count
      << ",\"seed\":" << args.seed << ",\"points\":[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ",";
    out << cli::json_real_array(points[i].coords());
  }
  out << "]}";
  std::cout << out.str() << "\n";
  return 0;
}

int run_moment_hausdorff(const MomentArgs& args) {
  Subspace s = cli::load_subspace(args.s_path);
  Subspace v = cli::load_subspace(args.v_path);
  double est = hausdorff_upper_estimate(s, v, args.samples, args.seed);
  std::cout << "{\"schema\":\"minop.moment.hausdorff/1\",\"samples\":"
            << args.samples << ",\"seed\":" << args.seed
            << ",\"estimate\":" << fmt17(est) << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment sets, joint numerical ranges, and minimality of "
               "lambda (P_S - P_V) + R with respect to the diagonal algebra"};
  app.require_subcommand(1);

  SupportArgs sup;
  CLI::App* c_sup = app.add_subcommand(
      "support", "Decide whether the moment sets of S and V intersect");
  c_sup->add_option("--s", sup.s_path, "Subspace file for S")->required();
  c_sup->add_option("--v", sup.v_path, "Subspace file for V")->required();
  c_sup->add_option("--tol", sup.tol, "Feasibility tolerance");
  c_sup->add_option("--max-iter", sup.max_iter, "Iteration cap");
  c_sup->add_option("--route", sup.route, "primal, jnr, or both")
      ->check(CLI::IsMember({"primal", "jnr", "both"}));

  MinimalArgs min_args;
  CLI::App* c_min = app.add_subcommand(
      "minimal", "Certify minimality with respect to the diagonal algebra");
  c_min->add_option("--s", min_args.s_path, "Subspace file for S");
  c_min->add_option("--v", min_args.v_path, "Subspace file for V");
  c_min->add_option("--lambda", min_args.lambda, "Weight lambda > 0");
  c_min->add_option("--r", min_args.r_path, "Remainder matrix file");
  c_min->add_option("--matrix", min_args.matrix_path,
                    "Hermitian matrix file to analyze");
  c_min->add_flag("--oracle", min_args.oracle,
                  "Force the brute-force distance oracle");
  c_min->add_option("--tol", min_args.tol, "Feasibility tolerance");
  c_min->add_option("--max-iter", min_args.max_iter, "Iteration cap");

  CurveArgs curve;
  CLI::App* c_curve = app.add_subcommand(
      "curve", "Trace an extremal curve of the moment set to CSV");
  c_curve->add_option("--s", curve.s_path, "Subspace file")->required();
  c_curve->add_option("--j", curve.j, "First coordinate index (zero-based)")
      ->required();
  c_curve->add_option("--k", curve.k, "Second coordinate index (zero-based)")
      ->required();
  c_curve->add_option("--samples", curve.samples, "Grid intervals (N+1 rows)")
      ->required()
      ->check(CLI::PositiveNumber);
  c_curve->add_option("--out", curve.out_path, "Output CSV path")->required();

  JnrArgs jnr;
  CLI::App* c_jnr = app.add_subcommand(
      "jnr", "Trace a planar joint numerical range boundary");
  c_jnr->add_option("--family", jnr.family_path, "Hermitian family file");
  c_jnr->add_option("--subspace", jnr.subspace_path,
                    "Subspace file (coordinate family mode)");
  c_jnr->add_option("--m", jnr.m, "Members of the coordinate family");
  c_jnr->add_option("--dims", jnr.dims, "Projection slots J,K")->required();
  c_jnr->add_option("--directions", jnr.directions, "Support directions")
      ->required()
      ->check(CLI::PositiveNumber);
  c_jnr->add_option("--out", jnr.out_path, "Output path")->required();
  c_jnr->add_flag("--svg", jnr.svg, "Emit SVG instead of CSV");

  GellmannArgs gm;
  CLI::App* c_gm = app.add_subcommand(
      "gellmann", "Verify the compressed-basis isomorphism properties");
  c_gm->add_option("--dim", gm.dim, "Subspace dimension r");
  c_gm->add_option("--subspace", gm.subspace_path, "Subspace file");
  c_gm->add_option("--trials", gm.trials, "Random trials")
      ->check(CLI::PositiveNumber);
  c_gm->add_option("--seed", gm.seed, "Sampling seed");

  MomentArgs mom;
  CLI::App* c_mom =
      app.add_subcommand("moment", "Moment set queries for a subspace");
  c_mom->require_subcommand(1);
  CLI::App* c_mem = c_mom->add_subcommand("membership",
                                          "Decide membership of a point");
  c_mem->add_option("--s", mom.s_path, "Subspace file")->required();
  c_mem->add_option("--point", mom.point, "Comma-separated coordinates")
      ->required();
  c_mem->add_option("--tol", mom.tol, "Feasibility tolerance");
  CLI::App* c_cen = c_mom->add_subcommand("centroid", "Barycenter of m_S");
  c_cen->add_option("--s", mom.s_path, "Subspace file")->required();
  CLI::App* c_sam =
      c_mom->add_subcommand("sample", "Seeded extreme point samples");
  c_sam->add_option("--s", mom.s_path, "Subspace file")->required();
  c_sam->add_option("--count", mom.count, "Number of samples")
      ->required()
      ->check(CLI::PositiveNumber);
  c_sam->add_option("--seed", mom.seed, "Sampling seed");
  CLI::App* c_hau = c_mom->add_subcommand(
      "hausdorff", "Sampled Hausdorff distance between two moment sets");
  c_hau->add_option("--s", mom.s_path, "Subspace file")->required();
  c_hau->add_option("--v", mom.v_path, "Second subspace file")->required();
  c_hau->add_option("--samples", mom.samples, "Samples per side")
      ->required()
      ->check(CLI::PositiveNumber);
  c_hau->add_option("--seed", mom.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_sup->parsed()) return run_support(sup);
    if (c_min->parsed()) return run_minimal(min_args);
    if (c_curve->parsed()) return run_curve(curve);
    if (c_jnr->parsed()) return run_jnr(jnr);
    if (c_gm->parsed()) return run_gellmann(gm);
    if (c_mom->parsed()) {
      if (c_mem->parsed()) return run_moment_membership(mom);
      if (c_cen->parsed()) return run_moment_centroid(mom);
      if (c_sam->parsed()) return run_moment_sample(mom);
      if (c_hau->parsed()) return run_moment_hausdorff(mom);
    }
    std::cerr << "no command selected\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstraint;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

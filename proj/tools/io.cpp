#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace minop::cli {
namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

Complex read_entry(const json& cell, const std::string& path) {
  if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
      !cell[1].is_number())
    throw IoError(path + ": complex entries must be [re, im] pairs");
  return Complex(cell[0].get<double>(), cell[1].get<double>());
}

}  // namespace

Matrix load_matrix(const std::string& path) {
  json j = parse_file(path);
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw IoError(path + ": expected fields n and entries");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw IoError(path + ": n must be a positive integer");
  const int n = j["n"].get<int>();
  const json& entries = j["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(n) * n)
    throw IoError(path + ": entries must hold n*n [re, im] pairs");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = read_entry(entries[static_cast<std::size_t>(r) * n + c], path);
  return m;
}

Subspace load_subspace(const std::string& path) {
  json j = parse_file(path);
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
    throw IoError(path + ": expected fields ambient and basis");
  if (!j["ambient"].is_number_integer() || j["ambient"].get<int>() < 1)
    throw IoError(path + ": ambient must be a positive integer");
  const int n = j["ambient"].get<int>();
  const json& basis = j["basis"];
  if (!basis.is_array() || basis.empty())
    throw IoError(path + ": basis must be a non-empty list of vectors");
  std::vector<Vector> vs;
  vs.reserve(basis.size());
  for (const json& row : basis) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw IoError(path + ": every basis vector needs ambient entries");
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = read_entry(row[i], path);
    vs.push_back(std::move(v));
  }

  Matrix raw(n, static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    raw.col(static_cast<int>(i)) = vs[i];
  double deviation =
      (raw.adjoint() * raw -
       Matrix::Identity(raw.cols(), raw.cols()))
          .cwiseAbs()
          .maxCoeff();
  try {
    Subspace s = orthonormalize(vs);
    if (deviation > 1e-10)
      std::cerr << "notice: basis in " << path
                << " was not orthonormal (deviation " << deviation
                << "); orthonormalized on load\n";
    return s;
  } catch (const ValidationError& e) {
    throw IoError(path + ": " + e.what());
  }
}

HermitianFamily load_family(const std::string& path) {
  json j = parse_file(path);
  if (!j.is_object() || !j.contains("n") || !j.contains("matrices"))
    throw IoError(path + ": expected fields n and matrices");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw IoError(path + ": n must be a positive integer");
  const int n = j["n"].get<int>();
  const json& list = j["matrices"];
  if (!list.is_array() || list.empty())
    throw IoError(path + ": matrices must be a non-empty list");
  std::vector<HermitianMatrix> members;
  members.reserve(list.size());
  for (const json& entries : list) {
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(n) * n)
      throw IoError(path + ": each member needs n*n [re, im] pairs");
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        m(r, c) =
            read_entry(entries[static_cast<std::size_t>(r) * n + c], path);
    members.emplace_back(std::move(m));
  }
  return HermitianFamily(std::move(members));
}

std::string fmt17(double x) {
  // Infinite residuals (infeasible verdicts) must stay JSON-parseable.
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string json_real_array(const RealVector& v) {
  std::string out = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt17(v(i));
  }
  return out + "]";
}

std::string json_matrix_entries(const Matrix& m) {
  std::string out = "[";
  bool first = true;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (!first) out += ",";
      first = false;
      out += "[" + fmt17(m(r, c).real()) + "," + fmt17(m(r, c).imag()) + "]";
    }
  return out + "]";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace minop::cli

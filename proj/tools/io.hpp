#pragma once

#include <stdexcept>
#include <string>

#include "minop/hermitian.hpp"
#include "minop/jnr.hpp"
#include "minop/subspace.hpp"

namespace minop::cli {

// Unreadable files, JSON syntax errors, and broken file invariants.  The
// driver maps this to exit code 64; semantic constraint violations surface
// as ValidationError and map to 65.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// MatrixFile: {"n": N, "entries": [[re, im], ...]} row-major, N*N entries.
Matrix load_matrix(const std::string& path);

// SubspaceFile: {"ambient": N, "basis": [[[re, im], ...], ...]}.  Spanning
// sets are orthonormalized on load with a notice on stderr; dependent sets
// are rejected.
Subspace load_subspace(const std::string& path);

// FamilyFile: {"n": N, "matrices": [entries, ...]} with each entries list
// shaped like MatrixFile entries.  Members must be hermitian.
HermitianFamily load_family(const std::string& path);

// 17 significant digits, the pinned interchange format for every float the
// tool emits.
std::string fmt17(double x);

std::string json_escape(const std::string& s);
std::string json_real_array(const RealVector& v);

// Row-major [[re, im], ...] entries block matching MatrixFile.
std::string json_matrix_entries(const Matrix& m);

void write_file(const std::string& path, const std::string& content);

}  // namespace minop::cli

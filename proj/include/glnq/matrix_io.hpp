#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "glnq/matrix.hpp"
#include "glnq/subspace.hpp"

namespace glnq {

/// A set of square matrices over one field, as stored in `glnq n q count` files.
struct MatrixSet {
  unsigned n = 0;
  unsigned q = 0;
  std::vector<Matrix> elements;
};

/// A set of k-subspaces, as stored in `grass n k q count` files.
struct SubspaceSet {
  unsigned n = 0;
  unsigned k = 0;
  unsigned q = 0;
  std::vector<Subspace> blocks;
};

void write_matrix_set(std::ostream& out, const MatrixSet& set);
MatrixSet read_matrix_set(std::istream& in);
void save_matrix_set(const std::string& path, const MatrixSet& set);
MatrixSet load_matrix_set(const std::string& path);

void write_subspace_set(std::ostream& out, const SubspaceSet& set);
SubspaceSet read_subspace_set(std::istream& in);
void save_subspace_set(const std::string& path, const SubspaceSet& set);
SubspaceSet load_subspace_set(const std::string& path);

/// Parses a row-major digit string (one hex digit per entry).
Matrix parse_matrix_digits(const Field& field, unsigned rows, unsigned cols, const std::string& digits);

}  // namespace glnq

#include "glnq/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace glnq {

Matrix parse_matrix_digits(const Field& field, unsigned rows, unsigned cols, const std::string& digits) {
  if (digits.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorCode::Parse, "expected " + std::to_string(rows * cols) + " digits, got '" + digits + "'");
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else {
      throw Error(ErrorCode::Parse, std::string("bad digit '") + c + "'");
    }
    if (v >= field.q()) throw Error(ErrorCode::Parse, "digit exceeds field size");
    m(static_cast<unsigned>(i / cols), static_cast<unsigned>(i % cols)) = static_cast<Elem>(v);
  }
  return m;
}

void write_matrix_set(std::ostream& out, const MatrixSet& set) {
  out << "glnq " << set.n << ' ' << set.q << ' ' << set.elements.size() << '\n';
  for (const Matrix& m : set.elements) out << m.digits() << '\n';
}

MatrixSet read_matrix_set(std::istream& in) {
  std::string tag;
  MatrixSet set;
  std::size_t count = 0;
  if (!(in >> tag >> set.n >> set.q >> count) || tag != "glnq") {
    throw Error(ErrorCode::Parse, "missing 'glnq n q count' header");
  }
  const Field& field = field_of_order(set.q);
  set.elements.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string digits;
    if (!(in >> digits)) throw Error(ErrorCode::Parse, "matrix file truncated");
    set.elements.push_back(parse_matrix_digits(field, set.n, set.n, digits));
  }
  return set;
}

void save_matrix_set(const std::string& path, const MatrixSet& set) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  write_matrix_set(out, set);
}

MatrixSet load_matrix_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  return read_matrix_set(in);
}

void write_subspace_set(std::ostream& out, const SubspaceSet& set) {
  out << "grass " << set.n << ' ' << set.k << ' ' << set.q << ' ' << set.blocks.size() << '\n';
  for (const Subspace& s : set.blocks) out << s.basis().digits() << '\n';
}

SubspaceSet read_subspace_set(std::istream& in) {
  std::string tag;
  SubspaceSet set;
  std::size_t count = 0;
  if (!(in >> tag >> set.n >> set.k >> set.q >> count) || tag != "grass") {
    throw Error(ErrorCode::Parse, "missing 'grass n k q count' header");
  }
  const Field& field = field_of_order(set.q);
  for (std::size_t i = 0; i < count; ++i) {
    std::string digits;
    if (!(in >> digits)) throw Error(ErrorCode::Parse, "subspace file truncated");
    const Subspace s = Subspace::span(parse_matrix_digits(field, set.k, set.n, digits));
    if (s.dim() != set.k) throw Error(ErrorCode::Parse, "block '" + digits + "' is not of full rank");
    set.blocks.push_back(s);
  }
  return set;
}

void save_subspace_set(const std::string& path, const SubspaceSet& set) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  write_subspace_set(out, set);
}

SubspaceSet load_subspace_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  return read_subspace_set(in);
}

}  // namespace glnq

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "glnq/field.hpp"

namespace glnq {

// Dimension bound for dense matrices and subspaces.
inline constexpr unsigned kMaxDim = 8;

/// Dense matrix over F_q with inline storage (rows, cols <= kMaxDim).
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, unsigned rows, unsigned cols);

  static Matrix identity(const Field& field, unsigned n);
  static Matrix zero(const Field& field, unsigned rows, unsigned cols) {
    return Matrix(field, rows, cols);
  }

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  Elem operator()(unsigned r, unsigned c) const { return a_[r * kMaxDim + c]; }
  Elem& operator()(unsigned r, unsigned c) { return a_[r * kMaxDim + c]; }

  const Elem* row(unsigned r) const { return a_.data() + r * kMaxDim; }
  Elem* row(unsigned r) { return a_.data() + r * kMaxDim; }

  bool operator==(const Matrix& o) const;
  /// Order used by sets: row by row, each row as a base-q number with column 0
  /// least significant.
  std::strong_ordering operator<=>(const Matrix& o) const;

  /// Base-q code, row-major, entry (0,0) least significant. Requires
  /// q^(rows*cols) < 2^64.
  std::uint64_t code() const;
  static Matrix from_code(const Field& field, unsigned rows, unsigned cols, std::uint64_t code);

  /// Row-major digits, one hex character per entry.
  std::string digits() const;

  std::size_t hash() const;

  bool is_square() const { return rows_ == cols_; }

 private:
  const Field* field_ = nullptr;
  std::uint8_t rows_ = 0, cols_ = 0;
  std::array<Elem, kMaxDim * kMaxDim> a_{};
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(Elem s, const Matrix& a);
Matrix transpose(const Matrix& a);
/// Throws Singular when the matrix is not invertible.
Matrix mat_inverse(const Matrix& a);
Matrix mat_pow(const Matrix& a, std::uint64_t k);

unsigned mat_rank(const Matrix& m);
/// Reduces m in place to reduced row echelon form; returns the rank. Zero rows
/// end up at the bottom.
unsigned rref_in_place(Matrix& m);
bool is_invertible(const Matrix& m);

/// rank(x - y).
unsigned rank_distance(const Matrix& x, const Matrix& y);

/// Multiplicative order of an invertible matrix.
std::uint64_t mat_order(const Matrix& g);

/// Block-diagonal assembly.
Matrix block_diag(const Matrix& a, const Matrix& b);

}  // namespace glnq

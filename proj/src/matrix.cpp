#include "glnq/matrix.hpp"

#include <algorithm>
#include <utility>

#include "glnq/common.hpp"

namespace glnq {

Matrix::Matrix(const Field& field, unsigned rows, unsigned cols)
    : field_(&field), rows_(static_cast<std::uint8_t>(rows)), cols_(static_cast<std::uint8_t>(cols)) {
  if (rows > kMaxDim || cols > kMaxDim) {
    throw Error(ErrorCode::OutOfRange, "matrix dimensions exceed " + std::to_string(kMaxDim));
  }
}

Matrix Matrix::identity(const Field& field, unsigned n) {
  Matrix m(field, n, n);
  for (unsigned i = 0; i < n && i < kMaxDim; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::strong_ordering Matrix::operator<=>(const Matrix& o) const {
  if (auto c = rows_ <=> o.rows_; c != 0) return c;
  if (auto c = cols_ <=> o.cols_; c != 0) return c;
  for (unsigned r = 0; r < rows_; ++r) {
    for (unsigned c = cols_; c-- > 0;) {
      if (auto cmp = (*this)(r, c) <=> o(r, c); cmp != 0) return cmp;
    }
  }
  return std::strong_ordering::equal;
}

std::uint64_t Matrix::code() const {
  const std::uint64_t q = field_->q();
  std::uint64_t code = 0;
  for (unsigned i = rows_ * cols_; i-- > 0;) code = code * q + (*this)(i / cols_, i % cols_);
  return code;
}

Matrix Matrix::from_code(const Field& field, unsigned rows, unsigned cols, std::uint64_t code) {
  Matrix m(field, rows, cols);
  const std::uint64_t q = field.q();
  for (unsigned i = 0; i < rows * cols; ++i) {
    m(i / cols, i % cols) = static_cast<Elem>(code % q);
    code /= q;
  }
  return m;
}

std::string Matrix::digits() const {
  static const char* hex = "0123456789abcdef";
  std::string s;
  s.reserve(rows_ * cols_);
  for (unsigned r = 0; r < rows_; ++r) {
    for (unsigned c = 0; c < cols_; ++c) s.push_back(hex[(*this)(r, c)]);
  }
  return s;
}

std::size_t Matrix::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ (rows_ * 131u + cols_);
  for (unsigned r = 0; r < rows_; ++r) {
    for (unsigned c = 0; c < cols_; ++c) {
      h ^= (*this)(r, c);
      h *= 1099511628211ull;
    }
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.field_ptr() != b.field_ptr() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::MixedDimensions, std::string(op) + ": operand shapes differ");
  }
}

bool is_binary(const Field& f) { return f.q() == 2; }

}  // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.field_ptr() != b.field_ptr() || a.cols() != b.rows()) {
    throw Error(ErrorCode::MixedDimensions, "mat_mul: incompatible operands");
  }
  const Field& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  if (is_binary(f)) {
    std::uint8_t brow[kMaxDim];
    for (unsigned k = 0; k < b.rows(); ++k) {
      std::uint8_t bits = 0;
      for (unsigned j = 0; j < b.cols(); ++j) bits |= static_cast<std::uint8_t>(b(k, j) << j);
      brow[k] = bits;
    }
    for (unsigned i = 0; i < a.rows(); ++i) {
      std::uint8_t acc = 0;
      for (unsigned k = 0; k < a.cols(); ++k) {
        if (a(i, k)) acc ^= brow[k];
      }
      for (unsigned j = 0; j < b.cols(); ++j) c(i, j) = (acc >> j) & 1u;
    }
    return c;
  }
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (!x) continue;
      for (unsigned j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  const Field& f = a.field();
  Matrix c(f, a.rows(), a.cols());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  }
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_sub");
  const Field& f = a.field();
  Matrix c(f, a.rows(), a.cols());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  }
  return c;
}

Matrix mat_scale(Elem s, const Matrix& a) {
  const Field& f = a.field();
  Matrix c(f, a.rows(), a.cols());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

unsigned rref_in_place(Matrix& m) {
  const Field& f = m.field();
  unsigned rank = 0;
  for (unsigned c = 0; c < m.cols() && rank < m.rows(); ++c) {
    unsigned pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (unsigned j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const Elem inv = f.inv(m(rank, c));
    for (unsigned j = c; j < m.cols(); ++j) m(rank, j) = f.mul(inv, m(rank, j));
    for (unsigned i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      const Elem factor = m(i, c);
      if (!factor) continue;
      for (unsigned j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

unsigned mat_rank(const Matrix& m) {
  if (is_binary(m.field())) {
    std::uint8_t rows[kMaxDim];
    for (unsigned i = 0; i < m.rows(); ++i) {
      std::uint8_t bits = 0;
      for (unsigned j = 0; j < m.cols(); ++j) bits |= static_cast<std::uint8_t>(m(i, j) << j);
      rows[i] = bits;
    }
    unsigned rank = 0;
    for (unsigned c = 0; c < m.cols(); ++c) {
      const std::uint8_t mask = static_cast<std::uint8_t>(1u << c);
      unsigned pivot = rank;
      while (pivot < m.rows() && !(rows[pivot] & mask)) ++pivot;
      if (pivot == m.rows()) continue;
      std::swap(rows[pivot], rows[rank]);
      for (unsigned i = rank + 1; i < m.rows(); ++i) {
        if (rows[i] & mask) rows[i] ^= rows[rank];
      }
      ++rank;
    }
    return rank;
  }
  Matrix copy = m;
  return rref_in_place(copy);
}

bool is_invertible(const Matrix& m) { return m.is_square() && mat_rank(m) == m.rows(); }

Matrix mat_inverse(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::Singular, "non-square matrix has no inverse");
  const Field& f = a.field();
  const unsigned n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(f, n);
  for (unsigned c = 0; c < n; ++c) {
    unsigned pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != c) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    const Elem s = f.inv(m(c, c));
    for (unsigned j = 0; j < n; ++j) {
      m(c, j) = f.mul(s, m(c, j));
      inv(c, j) = f.mul(s, inv(c, j));
    }
    for (unsigned i = 0; i < n; ++i) {
      if (i == c) continue;
      const Elem factor = m(i, c);
      if (!factor) continue;
      for (unsigned j = 0; j < n; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        inv(i, j) = f.sub(inv(i, j), f.mul(factor, inv(c, j)));
      }
    }
  }
  return inv;
}

Matrix mat_pow(const Matrix& a, std::uint64_t k) {
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (k) {
    if (k & 1) result = mat_mul(result, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return result;
}

unsigned rank_distance(const Matrix& x, const Matrix& y) { return mat_rank(mat_sub(x, y)); }

std::uint64_t mat_order(const Matrix& g) {
  if (!is_invertible(g)) throw Error(ErrorCode::Singular, "mat_order: element is not invertible");
  const Matrix id = Matrix::identity(g.field(), g.rows());
  Matrix x = g;
  std::uint64_t order = 1;
  while (!(x == id)) {
    x = mat_mul(x, g);
    ++order;
  }
  return order;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  for (unsigned i = 0; i < b.rows(); ++i) {
    for (unsigned j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return m;
}

}  // namespace glnq

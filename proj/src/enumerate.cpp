#include "glnq/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "glnq/qanalog.hpp"

namespace glnq {

std::uint64_t row_code(const Matrix& m, unsigned row) {
  const std::uint64_t q = m.field().q();
  std::uint64_t code = 0;
  for (unsigned j = m.cols(); j-- > 0;) code = code * q + m(row, j);
  return code;
}

namespace {

struct GlWalker {
  const Field& field;
  unsigned n;
  std::uint64_t row_count;
  const std::function<void(const Matrix&)>& visit;
  Matrix current;
  // echelon[i] holds the reduced span of rows 0..i-1 (as rows, pivot-first).
  Matrix echelon[kMaxDim + 1];

  void set_row(unsigned r, std::uint64_t code) {
    const unsigned q = field.q();
    for (unsigned j = 0; j < n; ++j) {
      current(r, j) = static_cast<Elem>(code % q);
      code /= q;
    }
  }

  // Extends the echelon basis of rows < r by row r; false if dependent.
  bool extend(unsigned r) {
    Matrix basis = echelon[r];
    Matrix m(field, r + 1, n);
    for (unsigned i = 0; i < r; ++i) {
      for (unsigned j = 0; j < n; ++j) m(i, j) = basis(i, j);
    }
    for (unsigned j = 0; j < n; ++j) m(r, j) = current(r, j);
    if (rref_in_place(m) != r + 1) return false;
    echelon[r + 1] = m;
    return true;
  }

  void walk(unsigned r) {
    if (r == n) {
      visit(current);
      return;
    }
    for (std::uint64_t code = 1; code < row_count; ++code) {
      set_row(r, code);
      if (extend(r)) walk(r + 1);
    }
  }
};

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

void for_each_gl(const Field& field, unsigned n, const std::function<void(const Matrix&)>& visit) {
  if (n == 0 || n > kMaxDim) throw Error(ErrorCode::OutOfRange, "GL dimension out of range");
  GlWalker w{field, n, pow_u64(field.q(), n), visit, Matrix(field, n, n), {}};
  w.echelon[0] = Matrix(field, 0, n);
  w.walk(0);
}

void for_each_gl_with_first_row(const Field& field, unsigned n, std::uint64_t first_row,
                                const std::function<void(const Matrix&)>& visit) {
  if (n == 0 || n > kMaxDim) throw Error(ErrorCode::OutOfRange, "GL dimension out of range");
  GlWalker w{field, n, pow_u64(field.q(), n), visit, Matrix(field, n, n), {}};
  if (first_row == 0 || first_row >= w.row_count) return;
  w.echelon[0] = Matrix(field, 0, n);
  w.set_row(0, first_row);
  w.extend(0);
  w.walk(1);
}

std::vector<Matrix> enumerate_gl(const Field& field, unsigned n, const Budget& budget) {
  const BigInt order = gl_order(n, field.q());
  budget.check(order, "enumerate_gl");
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(order));
  for_each_gl(field, n, [&](const Matrix& g) { out.push_back(g); });
  return out;
}

Matrix random_invertible(const Field& field, unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> digit(0, field.q() - 1);
  Matrix m(field, n, n);
  do {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(digit(rng));
    }
  } while (!is_invertible(m));
  return m;
}

std::vector<Matrix> group_closure(const std::vector<Matrix>& generators, const Budget& budget) {
  if (generators.empty()) throw Error(ErrorCode::EmptySet, "group_closure needs a generator");
  const Matrix id = Matrix::identity(generators[0].field(), generators[0].rows());
  std::unordered_set<Matrix, MatrixHash> seen{id};
  std::vector<Matrix> out{id};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Matrix& s : generators) {
      Matrix x = mat_mul(out[i], s);
      if (seen.insert(x).second) {
        out.push_back(x);
        budget.check(static_cast<std::uint64_t>(out.size()), "group_closure");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const std::vector<Matrix>& elements) {
  if (elements.empty()) return false;
  std::unordered_set<Matrix, MatrixHash> set(elements.begin(), elements.end());
  for (const Matrix& x : elements) {
    if (!set.count(mat_inverse(x))) return false;
    for (const Matrix& y : elements) {
      if (!set.count(mat_mul(x, y))) return false;
    }
  }
  return true;
}

}  // namespace glnq

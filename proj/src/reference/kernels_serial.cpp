#include "glnq/enumerate.hpp"
#include "glnq/kernels.hpp"

namespace glnq::reference {

Tally class_tally(const ClassTable& table, const std::vector<Matrix>& elements) {
  Tally t(table.size(), 0);
  for (const Matrix& g : elements) ++t[table.classify(g)];
  return t;
}

Tally gl_class_tally(const ClassTable& table) {
  Tally t(table.size(), 0);
  for_each_gl(table.field(), table.n(), [&](const Matrix& g) { ++t[table.index_of(jordan_type(g))]; });
  return t;
}

Tally quotient_class_tally(const ClassTable& table, const std::vector<Matrix>& ys) {
  Tally t(table.size(), 0);
  for (const Matrix& x : ys) {
    const Matrix xi = mat_inverse(x);
    for (const Matrix& y : ys) ++t[table.classify(mat_mul(xi, y))];
  }
  return t;
}

Tally rank_distance_tally(const std::vector<Matrix>& ys) {
  const unsigned n = ys.empty() ? 0 : ys.front().rows();
  Tally t(n + 1, 0);
  for (const Matrix& x : ys) {
    for (const Matrix& y : ys) ++t[rank_distance(x, y)];
  }
  return t;
}

Tally gl_fixed_dim_tally(const Field& field, unsigned n) {
  Tally t(n + 1, 0);
  const Matrix id = Matrix::identity(field, n);
  for_each_gl(field, n, [&](const Matrix& g) { ++t[n - mat_rank(mat_sub(g, id))]; });
  return t;
}

bool transitivity_rows_constant(const std::vector<Matrix>& ys, const FlagSpec& spec,
                                const std::vector<Flag>& flags, const FlagIndex& index, std::uint64_t r) {
  std::vector<std::uint64_t> row(flags.size());
  for (const Flag& a : flags) {
    std::fill(row.begin(), row.end(), 0);
    for (const Matrix& g : ys) ++row[index.at(apply(g, spec, a))];
    for (std::uint64_t c : row) {
      if (c != r) return false;
    }
  }
  return true;
}

Tally class_coefficients(const ClassTable& table, const std::vector<std::uint64_t>& ys) {
  const std::size_t k = table.size();
  const unsigned n = table.n();
  Tally m(k * k, 0);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::uint64_t code : ys) {
      const Matrix y = Matrix::from_code(table.field(), n, n, code);
      ++m[table.classify(mat_mul(y, table.representative(t))) * k + t];
    }
  }
  return m;
}

}  // namespace glnq::reference

#pragma once

// Brute-force reference computations used as test oracles. They share no code
// with the library beyond reading a field's modulus and order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "glnq/field.hpp"
#include "glnq/matrix.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

// Field arithmetic from polynomial multiplication modulo the field's modulus.
struct NaiveField {
  int p, e, q;
  std::vector<int> modulus;

  explicit NaiveField(const glnq::Field& f) : p(f.p()), e(f.e()), q(f.q()) {
    for (unsigned c : f.modulus()) modulus.push_back(static_cast<int>(c));
  }

  Vec digits(int a) const {
    Vec d(e);
    for (int i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  int from_digits(const Vec& d) const {
    int a = 0;
    for (int i = e; i-- > 0;) a = a * p + ((d[i] % p) + p) % p;
    return a;
  }
  int add(int a, int b) const {
    Vec x = digits(a), y = digits(b);
    for (int i = 0; i < e; ++i) x[i] += y[i];
    return from_digits(x);
  }
  int neg(int a) const {
    Vec x = digits(a);
    for (int& v : x) v = -v;
    return from_digits(x);
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    Vec x = digits(a), y = digits(b);
    Vec prod(2 * e, 0);
    for (int i = 0; i < e; ++i) {
      for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    // Reduce with the monic modulus of degree e.
    for (int d = 2 * e - 1; d >= e; --d) {
      const int c = prod[d] % p;
      if (!c) continue;
      for (int i = 0; i <= e; ++i) prod[d - e + i] = ((prod[d - e + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(e);
    return from_digits(prod);
  }
  int inv(int a) const {
    for (int b = 1; b < q; ++b) {
      if (mul(a, b) == 1) return b;
    }
    return 0;
  }
};

inline Mat to_mat(const glnq::Matrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (unsigned i = 0; i < m.rows(); ++i) {
    for (unsigned j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline glnq::Matrix from_mat(const glnq::Field& f, const Mat& m) {
  glnq::Matrix out(f, static_cast<unsigned>(m.size()), m.empty() ? 0u : static_cast<unsigned>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out(static_cast<unsigned>(i), static_cast<unsigned>(j)) = static_cast<glnq::Elem>(m[i][j]);
  }
  return out;
}

inline Mat mul(const NaiveField& f, const Mat& a, const Mat& b) {
  Mat c(a.size(), Vec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      int s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s = f.add(s, f.mul(a[i][k], b[k][j]));
      c[i][j] = s;
    }
  }
  return c;
}

inline int rank(const NaiveField& f, Mat m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const int inv = f.inv(m[r][c]);
    for (int& v : m[r]) v = f.mul(v, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !m[i][c]) continue;
      const int factor = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }
  return r;
}

// All vectors of F_q^n, index = base-q code (entry 0 least significant).
inline std::vector<Vec> all_vectors(int q, int n) {
  std::vector<Vec> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  for (int c = 0; c < total; ++c) {
    Vec v(n);
    int x = c;
    for (int i = 0; i < n; ++i) {
      v[i] = x % q;
      x /= q;
    }
    out.push_back(v);
  }
  return out;
}

// Every invertible n x n matrix, by filtering all q^(n^2) matrices.
inline std::vector<Mat> all_invertible(const NaiveField& f, int n) {
  std::vector<Mat> out;
  const auto vecs = all_vectors(f.q, n * n);
  for (const Vec& v : vecs) {
    Mat m(n, Vec(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = v[i * n + j];
    }
    if (rank(f, m) == n) out.push_back(m);
  }
  return out;
}

// Number of ordered k-tuples of independent vectors, counted by search.
inline std::uint64_t count_independent_tuples(const NaiveField& f, int n, int k) {
  const auto vecs = all_vectors(f.q, n);
  std::uint64_t count = 0;
  Mat cur;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      ++count;
      return;
    }
    for (const Vec& v : vecs) {
      cur.push_back(v);
      if (rank(f, cur) == depth + 1) self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

// Gauss-Jordan inverse; the input must be invertible.
inline Mat inverse(const NaiveField& f, const Mat& a) {
  const int n = static_cast<int>(a.size());
  Mat m(n, Vec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    const int inv = f.inv(m[c][c]);
    for (int& v : m[c]) v = f.mul(v, inv);
    for (int i = 0; i < n; ++i) {
      if (i == c || !m[i][c]) continue;
      const int factor = m[i][c];
      for (int j = 0; j < 2 * n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
    }
  }
  Mat out(n, Vec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  }
  return out;
}

// Conjugacy classes of a finite matrix group, as lists of indices into group.
inline std::vector<std::vector<std::size_t>> conjugacy_classes(const NaiveField& f, const std::vector<Mat>& group) {
  std::map<Mat, std::size_t> pos;
  for (std::size_t i = 0; i < group.size(); ++i) pos.emplace(group[i], i);
  std::vector<Mat> inverses;
  for (const Mat& g : group) inverses.push_back(inverse(f, g));
  std::vector<int> seen(group.size(), 0);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t h = 0; h < group.size(); ++h) {
      orbit.insert(pos.at(mul(f, mul(f, group[h], group[i]), inverses[h])));
    }
    for (std::size_t j : orbit) seen[j] = 1;
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

// Number of partitions of n by the standard recursion on the largest part.
inline std::uint64_t partition_count(int n, int largest = -1) {
  if (largest < 0) largest = n;
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int part = std::min(n, largest); part >= 1; --part) total += partition_count(n - part, part);
  return total;
}

}  // namespace oracle

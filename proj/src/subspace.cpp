#include "glnq/subspace.hpp"

#include <algorithm>

#include "glnq/qanalog.hpp"

namespace glnq {

Subspace Subspace::span(const Matrix& rows) {
  Matrix m = rows;
  const unsigned rank = rref_in_place(m);
  Subspace s;
  s.n_ = rows.cols();
  s.basis_ = Matrix(rows.field(), rank, rows.cols());
  for (unsigned i = 0; i < rank; ++i) {
    for (unsigned j = 0; j < rows.cols(); ++j) s.basis_(i, j) = m(i, j);
  }
  return s;
}

Subspace Subspace::zero(const Field& field, unsigned n) {
  Subspace s;
  s.n_ = n;
  s.basis_ = Matrix(field, 0, n);
  return s;
}

Subspace Subspace::whole(const Field& field, unsigned n) {
  Subspace s;
  s.n_ = n;
  s.basis_ = Matrix::identity(field, n);
  return s;
}

std::vector<unsigned> Subspace::pivots() const {
  std::vector<unsigned> p;
  for (unsigned i = 0; i < basis_.rows(); ++i) {
    unsigned c = 0;
    while (basis_(i, c) == 0) ++c;
    p.push_back(c);
  }
  return p;
}

bool Subspace::contains(const Matrix& v) const {
  const Field& f = field();
  Elem w[kMaxDim];
  for (unsigned j = 0; j < n_; ++j) w[j] = v(0, j);
  const auto piv = pivots();
  for (unsigned i = 0; i < piv.size(); ++i) {
    const Elem c = w[piv[i]];
    if (!c) continue;
    for (unsigned j = 0; j < n_; ++j) w[j] = f.sub(w[j], f.mul(c, basis_(i, j)));
  }
  for (unsigned j = 0; j < n_; ++j) {
    if (w[j]) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (unsigned i = 0; i < other.dim(); ++i) {
    Matrix v(field(), 1, n_);
    for (unsigned j = 0; j < n_; ++j) v(0, j) = other.basis()(i, j);
    if (!contains(v)) return false;
  }
  return true;
}

namespace {

Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  for (unsigned i = 0; i < b.rows(); ++i) {
    for (unsigned j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

}  // namespace

Subspace subspace_from_rows(const Matrix& rows) { return Subspace::span(rows); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.dim() + b.dim() > kMaxDim) {
    // Stacked rows would overflow the inline storage; add b's rows one by one.
    Subspace s = a;
    for (unsigned i = 0; i < b.dim(); ++i) {
      Matrix v(a.field(), 1, a.ambient_dim());
      for (unsigned j = 0; j < a.ambient_dim(); ++j) v(0, j) = b.basis()(i, j);
      if (!s.contains(v)) s = Subspace::span(stack(s.basis(), v));
    }
    return s;
  }
  return Subspace::span(stack(a.basis(), b.basis()));
}

unsigned intersection_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - subspace_sum(a, b).dim();
}

bool trivially_intersecting(const Subspace& a, const Subspace& b) { return intersection_dim(a, b) == 0; }

Subspace apply(const Matrix& g, const Subspace& s) {
  if (s.dim() == 0) return s;
  return Subspace::span(mat_mul(s.basis(), transpose(g)));
}

std::vector<Subspace> enumerate_subspaces(const Field& field, unsigned n, unsigned k,
                                          const Budget& budget) {
  if (k > n) throw Error(ErrorCode::OutOfRange, "enumerate_subspaces: k > n");
  budget.check(q_binomial(n, k, field.q()), "enumerate_subspaces");
  std::vector<Subspace> out;
  if (k == 0) {
    out.push_back(Subspace::zero(field, n));
    return out;
  }
  const unsigned q = field.q();
  std::vector<unsigned> piv(k);
  for (unsigned i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // Free positions: (row, col) with col > piv[row] and col not a pivot.
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned c = piv[i] + 1; c < n; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
      }
    }
    std::vector<unsigned> digits(free.size(), 0);
    while (true) {
      Matrix m(field, k, n);
      for (unsigned i = 0; i < k; ++i) m(i, piv[i]) = 1;
      for (std::size_t t = 0; t < free.size(); ++t) {
        m(free[t].first, free[t].second) = static_cast<Elem>(digits[t]);
      }
      out.push_back(Subspace::span(m));
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
      if (t == digits.size()) break;
    }
    // Next pivot combination.
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && piv[i] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enumerate_complements(const Subspace& b, const Budget& budget) {
  const Field& field = b.field();
  const unsigned n = b.ambient_dim();
  const unsigned k = b.dim();
  const unsigned m = n - k;
  BigInt count = 1;
  for (unsigned i = 0; i < k * m; ++i) count *= field.q();
  budget.check(count, "enumerate_complements");
  const auto piv = b.pivots();
  std::vector<unsigned> freecols;
  for (unsigned c = 0; c < n; ++c) {
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) freecols.push_back(c);
  }
  std::vector<Subspace> out;
  std::vector<unsigned> x(k * m, 0);
  const unsigned q = field.q();
  while (true) {
    Matrix rows(field, m, n);
    for (unsigned j = 0; j < m; ++j) {
      rows(j, freecols[j]) = 1;
      for (unsigned i = 0; i < k; ++i) {
        const Elem c = static_cast<Elem>(x[j * k + i]);
        if (!c) continue;
        for (unsigned col = 0; col < n; ++col) {
          rows(j, col) = field.add(rows(j, col), field.mul(c, b.basis()(i, col)));
        }
      }
    }
    out.push_back(Subspace::span(rows));
    std::size_t t = 0;
    while (t < x.size() && ++x[t] == q) x[t++] = 0;
    if (t == x.size()) break;
  }
  return out;
}

}  // namespace glnq

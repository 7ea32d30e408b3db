#include "glnq/fqpoly.hpp"

#include <utility>

#include "glnq/common.hpp"

namespace glnq {

FqPoly::FqPoly(const Field& field, std::vector<Elem> coeffs) : field_(&field), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::x_minus(const Field& field, Elem a) { return FqPoly(field, {field.neg(a), 1}); }

FqPoly FqPoly::monic_from_code(const Field& field, unsigned degree, std::uint64_t code) {
  std::vector<Elem> c(degree + 1);
  for (unsigned i = 0; i < degree; ++i) {
    c[i] = static_cast<Elem>(code % field.q());
    code /= field.q();
  }
  c[degree] = 1;
  return FqPoly(field, std::move(c));
}

std::uint64_t FqPoly::lower_code() const {
  std::uint64_t code = 0;
  for (std::size_t i = c_.size() > 0 ? c_.size() - 1 : 0; i-- > 0;) code = code * field_->q() + c_[i];
  return code;
}

std::strong_ordering FqPoly::operator<=>(const FqPoly& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  const Elem lead = c_.empty() ? 0 : c_.back();
  const Elem other_lead = o.c_.empty() ? 0 : o.c_.back();
  if (auto c = lead <=> other_lead; c != 0) return c;
  return lower_code() <=> o.lower_code();
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly(a.is_zero() ? a.field() : b.field(), {});
  const Field& f = a.field();
  std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return FqPoly(f, std::move(c));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  const Field& f = a.field();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(static_cast<unsigned>(i)), b.coeff(static_cast<unsigned>(i)));
  return FqPoly(f, std::move(c));
}

void poly_divmod(const FqPoly& a, const FqPoly& b, FqPoly& quotient, FqPoly& remainder) {
  if (b.is_zero()) throw Error(ErrorCode::Singular, "polynomial division by zero");
  const Field& f = b.field();
  std::vector<Elem> r = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  std::vector<Elem> qc(r.size() > db ? r.size() - db : 0, 0);
  const Elem lead_inv = f.inv(b.coeffs().back());
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem c = f.mul(r[i], lead_inv);
    if (!c) continue;
    qc[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b.coeffs()[j]));
  }
  quotient = FqPoly(f, std::move(qc));
  remainder = FqPoly(f, std::move(r));
}

FqPoly poly_mod(const FqPoly& a, const FqPoly& b) {
  FqPoly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

bool is_irreducible(const FqPoly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  const Field& field = f.field();
  for (int k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= field.q();
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, FqPoly::monic_from_code(field, static_cast<unsigned>(k), code)).is_zero()) return false;
    }
  }
  return true;
}

Matrix eval_at_matrix(const FqPoly& f, const Matrix& g) {
  const Field& field = g.field();
  const unsigned n = g.rows();
  Matrix acc(field, n, n);
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = mat_mul(acc, g);
    const Elem c = f.coeffs()[i];
    if (c) {
      for (unsigned j = 0; j < n && j < kMaxDim; ++j) acc(j, j) = field.add(acc(j, j), c);
    }
  }
  return acc;
}

FqPoly char_poly(const Matrix& g) {
  const Field& f = g.field();
  const unsigned n = g.rows();
  Matrix h = g;
  // Similarity reduction to upper Hessenberg form.
  for (unsigned m = 1; m + 1 < n; ++m) {
    unsigned i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (unsigned j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (unsigned j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Elem inv = f.inv(h(m, m - 1));
    for (unsigned r = m + 1; r < n; ++r) {
      const Elem u = f.mul(h(r, m - 1), inv);
      if (!u) continue;
      for (unsigned j = 0; j < n; ++j) h(r, j) = f.sub(h(r, j), f.mul(u, h(m, j)));
      for (unsigned j = 0; j < n; ++j) h(j, m) = f.add(h(j, m), f.mul(u, h(j, r)));
    }
  }
  // p_m = (X - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}.
  std::vector<FqPoly> p{FqPoly::one(f)};
  for (unsigned m = 0; m < n; ++m) {
    FqPoly next = FqPoly::x_minus(f, h(m, m)) * p[m];
    Elem t = 1;
    for (unsigned i = m; i-- > 0;) {
      t = f.mul(t, h(i + 1, i));
      const Elem c = f.mul(h(i, m), t);
      if (c) next = next - FqPoly(f, {c}) * p[i];
    }
    p.push_back(next);
  }
  return p[n];
}

Matrix companion(const FqPoly& f) {
  const Field& field = f.field();
  const unsigned d = static_cast<unsigned>(f.degree());
  Matrix c(field, d, d);
  for (unsigned i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (unsigned i = 0; i < d; ++i) c(i, d - 1) = field.neg(f.coeffs()[i]);
  return c;
}

std::string poly_digits(const FqPoly& f) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) s.push_back(hex[f.coeffs()[i]]);
  return s;
}

FqPoly parse_poly_digits(const Field& field, const std::string& digits) {
  std::vector<Elem> c;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const char ch = digits[i];
    unsigned v;
    if (ch >= '0' && ch <= '9') v = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') v = static_cast<unsigned>(ch - 'a' + 10);
    else throw Error(ErrorCode::Parse, "bad polynomial digit in '" + digits + "'");
    if (v >= field.q()) throw Error(ErrorCode::Parse, "polynomial digit exceeds field size");
    c.push_back(static_cast<Elem>(v));
  }
  return FqPoly(field, std::move(c));
}

std::string poly_pretty(const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Elem c = f.coeffs()[i];
    if (!c) continue;
    if (!s.empty()) s += "+";
    if (c != 1 || i == 0) s += std::to_string(c);
    if (i >= 1) s += "X";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace glnq

#include "glnq/asc.hpp"

#include "glnq/qanalog.hpp"

namespace glnq {

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::x_minus(const BigInt& a) { return IntPolynomial({-a, BigInt(1)}); }

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return IntPolynomial();
  std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
  std::vector<BigInt> c = a.coeffs;
  for (auto& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string s;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    const BigInt& c = p.coeffs[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (i == 0 || mag != 1) s += mag.str();
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPolynomial asc_poly(unsigned k, unsigned q) {
  IntPolynomial prev;                             // U_{-1}
  IntPolynomial cur = IntPolynomial::constant(1);  // U_0
  for (unsigned i = 0; i < k; ++i) {
    const BigInt qi = big_pow(q, i);
    IntPolynomial next = IntPolynomial::x_minus(2 * qi) * cur;
    if (i > 0) next = next + (big_pow(q, i - 1) * (1 - qi)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt asc_eval(unsigned k, unsigned q, const BigInt& x) {
  // Run the recurrence on values directly.
  BigInt prev = 0, cur = 1;
  for (unsigned i = 0; i < k; ++i) {
    const BigInt qi = big_pow(q, i);
    BigInt next = (x - 2 * qi) * cur;
    if (i > 0) next += big_pow(q, i - 1) * (1 - qi) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool asc_moment_identity(unsigned j, unsigned q) {
  IntPolynomial lhs;
  for (unsigned k = 0; k <= j; ++k) lhs = lhs + q_binomial(j, k, q) * asc_poly(k, q);
  IntPolynomial rhs = IntPolynomial::constant(1);
  for (unsigned i = 0; i < j; ++i) rhs = rhs * IntPolynomial::x_minus(big_pow(q, i));
  return lhs == rhs;
}

BigInt asc_inversion(unsigned j, unsigned l, unsigned q) {
  BigInt s = 0;
  for (unsigned k = j; k <= l; ++k) {
    const unsigned d = k - j;
    BigInt term = big_pow(q, d * (d - (d > 0 ? 1 : 0)) / 2) * q_binomial(k, j, q) * q_binomial(l, k, q);
    s += d % 2 ? -term : term;
  }
  return s;
}

}  // namespace glnq

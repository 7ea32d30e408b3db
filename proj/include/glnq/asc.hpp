#pragma once

#include <string>
#include <vector>

#include "glnq/common.hpp"

namespace glnq {

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> c);
  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial x_minus(const BigInt& a);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt eval(const BigInt& x) const;
  bool operator==(const IntPolynomial& o) const = default;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const BigInt& s, const IntPolynomial& a);
std::string to_string(const IntPolynomial& p);

/// Al-Salam-Carlitz polynomial U_k(x) for parameter q, from the three-term
/// recurrence U_{k+1} = (x - 2q^k) U_k + q^{k-1}(1 - q^k) U_{k-1}.
IntPolynomial asc_poly(unsigned k, unsigned q);
BigInt asc_eval(unsigned k, unsigned q, const BigInt& x);

/// sum_k [j k]_q U_k(x) == prod_{i<j} (x - q^i), checked as polynomials.
bool asc_moment_identity(unsigned j, unsigned q);

/// sum_{k=j}^{l} (-1)^{k-j} q^{C(k-j,2)} [k j]_q [l k]_q.
BigInt asc_inversion(unsigned j, unsigned l, unsigned q);

}  // namespace glnq

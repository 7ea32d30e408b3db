#pragma once

#include <compare>
#include <string>
#include <vector>

#include "glnq/field.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

/// Polynomial over F_q, coefficients ascending, no trailing zeros.
class FqPoly {
 public:
  FqPoly() = default;
  FqPoly(const Field& field, std::vector<Elem> coeffs);
  static FqPoly one(const Field& field) { return FqPoly(field, {1}); }
  /// X - a.
  static FqPoly x_minus(const Field& field, Elem a);
  /// Monic polynomial of degree d whose lower coefficients are the base-q
  /// digits of code (constant term least significant).
  static FqPoly monic_from_code(const Field& field, unsigned degree, std::uint64_t code);

  const Field& field() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }

  /// Code of the coefficients below the leading one.
  std::uint64_t lower_code() const;

  bool operator==(const FqPoly& o) const { return c_ == o.c_; }
  /// Degree first, then lower_code.
  std::strong_ordering operator<=>(const FqPoly& o) const;

 private:
  const Field* field_ = nullptr;
  std::vector<Elem> c_;
};

FqPoly operator*(const FqPoly& a, const FqPoly& b);
FqPoly operator-(const FqPoly& a, const FqPoly& b);
/// Quotient and remainder; the divisor must be nonzero.
void poly_divmod(const FqPoly& a, const FqPoly& b, FqPoly& quotient, FqPoly& remainder);
FqPoly poly_mod(const FqPoly& a, const FqPoly& b);

bool is_irreducible(const FqPoly& f);

/// f(g) for a square matrix g.
Matrix eval_at_matrix(const FqPoly& f, const Matrix& g);

/// Characteristic polynomial det(X I - g), via Hessenberg reduction.
FqPoly char_poly(const Matrix& g);

/// Companion matrix: ones on the subdiagonal, -f_i in the last column.
Matrix companion(const FqPoly& f);

/// Coefficient digits from the leading coefficient down, e.g. X+2 -> "12".
std::string poly_digits(const FqPoly& f);
FqPoly parse_poly_digits(const Field& field, const std::string& digits);
/// Human-readable form such as X^2+X+1.
std::string poly_pretty(const FqPoly& f);

}  // namespace glnq

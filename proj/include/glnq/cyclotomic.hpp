#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glnq/common.hpp"

namespace glnq {

using Wide = __int128;

/// One summand mult * zeta_e^exp.
struct CycloTerm {
  std::uint32_t exp = 0;
  std::int64_t mult = 0;
  auto operator<=>(const CycloTerm&) const = default;
};

/// A sum of e-th roots of unity: terms sorted by exponent, no zero multiplicities.
/// This is the form in which character values are stored.
using SparseCyclo = std::vector<CycloTerm>;

SparseCyclo cyclo_integer(std::int64_t value);
/// Complex conjugate: exponents negated modulo e.
SparseCyclo cyclo_conj(const SparseCyclo& a, std::uint32_t e);
/// "exp:mult,exp:mult" or "0" for the empty sum.
std::string to_string(const SparseCyclo& a);
SparseCyclo parse_cyclo(const std::string& text);

/// Dense element of Z[x]/(x^e - 1) that can be brought to a normal form in
/// Z[zeta_e], so equality in Z[zeta_e] becomes equality of vectors.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(std::uint32_t e);

  std::uint32_t order() const { return e_; }
  void clear();
  void add_term(std::uint32_t exp, Wide coef);
  void add(const SparseCyclo& a, Wide scale);
  /// Adds scale * a * conj(b).
  void add_product_conj(const SparseCyclo& a, const SparseCyclo& b, Wide scale);

  /// Rewrites the vector in the Zumbroich basis of Z[zeta_e]; afterwards
  /// two accumulators are equal in Z[zeta_e] iff their vectors agree.
  void reduce();
  /// After reduce(): the rational integer this equals, if it is one.
  std::optional<Wide> as_integer() const;
  bool is_zero() const;
  const std::vector<Wide>& coefficients() const { return c_; }

 private:
  std::uint32_t e_;
  std::vector<Wide> c_;
  std::vector<std::uint32_t> primes_;
};

struct RationalInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Certified enclosures of the real and imaginary parts of sum mult*zeta_e^exp,
/// each of width at most 2^-128 for multiplicities below 2^60.
RationalInterval real_part(const SparseCyclo& a, std::uint32_t e);
RationalInterval imag_part(const SparseCyclo& a, std::uint32_t e);

std::string wide_to_string(Wide v);

}  // namespace glnq

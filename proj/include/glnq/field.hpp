#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glnq {

using Elem = std::uint8_t;

// Largest field size supported by the dense element tables.
inline constexpr unsigned kMaxFieldSize = 16;

/// The finite field F_q with q = p^e.
///
/// Elements are integers in [0, q): the base-p digits of an element are the
/// coefficients (constant term first) of its residue modulo `modulus()`.
/// Instances are interned; obtain them through `field_make` and compare by
/// address.
class Field {
 public:
  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }

  /// Monic modulus, coefficients in ascending degree (size e + 1). For e = 1
  /// this is the trivial modulus X.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const { return inv_[a]; }

  /// A generator of the multiplicative group (least such element).
  Elem primitive() const { return primitive_; }

  std::string describe() const;

  Field(unsigned p, unsigned e, std::vector<unsigned> modulus);

 private:
  unsigned p_, e_, q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 1;
};

bool is_prime(std::uint64_t n);

/// Interned field F_{p^e}; throws NotPrime for composite p and OutOfRange when
/// p^e exceeds kMaxFieldSize.
const Field& field_make(unsigned p, unsigned e);

/// F_q for a prime power q.
const Field& field_of_order(unsigned q);

}  // namespace glnq

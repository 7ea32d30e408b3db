#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "glnq/classes.hpp"

namespace glnq {

/// Conjugacy-class data of GL(n,q) in the sorted Lambda_n order.
class ClassTable {
 public:
  ClassTable(const Field& field, unsigned n);

  const Field& field() const { return *field_; }
  unsigned n() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const BigInt& group_order() const { return order_; }

  const std::vector<LambdaMap>& labels() const { return labels_; }
  const LambdaMap& label(std::size_t i) const { return labels_[i]; }
  const Matrix& representative(std::size_t i) const { return reps_[i]; }
  const BigInt& class_size(std::size_t i) const { return sizes_[i]; }
  const std::vector<BigInt>& class_sizes() const { return sizes_; }
  const PairType& type(std::size_t i) const { return types_[i]; }
  std::uint64_t element_order(std::size_t i) const { return orders_[i]; }
  /// Class of g^{-1} for g in class i.
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  std::size_t identity_index() const { return identity_; }
  /// Least common multiple of element orders.
  std::uint64_t exponent() const { return exponent_; }

  /// Index of a label; throws OutOfRange for labels of the wrong norm.
  std::size_t index_of(const LambdaMap& m) const;

  /// Class index of an invertible matrix. Uses a dense lookup table when q^(n^2)
  /// is small enough, built on first use; otherwise falls back to jordan_type.
  std::size_t classify(const Matrix& g) const;

  /// Whether classify() is served by the dense table.
  bool has_lookup() const { return lookup_possible_; }
  /// Forces the dense table to be built (no-op when unavailable).
  void build_lookup() const;

  /// Class index of an invertible matrix given by its code; requires the dense
  /// table (call build_lookup first). Returns size() for singular codes.
  std::size_t classify_code(std::uint64_t code) const {
    const std::uint8_t c = lookup_[code];
    return c == 0xFF ? labels_.size() : c;
  }
  /// Codes of the elements of class i, increasing. Requires the dense table.
  std::vector<std::uint64_t> class_codes(std::size_t i, const Budget& budget = Budget::defaults()) const;

  /// All elements of class i, in increasing code order. Requires the dense table.
  std::vector<Matrix> class_elements(std::size_t i, const Budget& budget = Budget::defaults()) const;

 private:
  const Field* field_;
  unsigned n_;
  BigInt order_;
  std::vector<LambdaMap> labels_;
  std::map<LambdaMap, std::size_t> index_;
  std::vector<Matrix> reps_;
  std::vector<BigInt> sizes_;
  std::vector<PairType> types_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::uint64_t exponent_ = 1;

  bool lookup_possible_ = false;
  mutable std::once_flag lookup_once_;
  mutable std::vector<std::uint8_t> lookup_;
};

/// Shared, lazily constructed table for GL(n,q).
const ClassTable& class_table(const Field& field, unsigned n);

/// Generators of GL(n,q) used for conjugation orbits.
std::vector<Matrix> gl_generators(const Field& field, unsigned n);

}  // namespace glnq

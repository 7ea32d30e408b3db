#pragma once

#include <compare>
#include <string>
#include <vector>

#include "glnq/common.hpp"

namespace glnq {

/// Integer partition: weakly decreasing positive parts; the empty list is the
/// empty partition.
struct Partition {
  std::vector<unsigned> parts;

  Partition() = default;
  /// Sorts the input decreasingly and drops zeros.
  explicit Partition(std::vector<unsigned> p);
  Partition(std::initializer_list<unsigned> p) : Partition(std::vector<unsigned>(p)) {}

  unsigned size() const;
  unsigned length() const { return static_cast<unsigned>(parts.size()); }
  bool empty() const { return parts.empty(); }
  /// lambda_i with 1-based index; zero past the end.
  unsigned part(unsigned i) const { return i >= 1 && i <= parts.size() ? parts[i - 1] : 0; }
  /// Number of parts equal to i.
  unsigned multiplicity(unsigned i) const;
  /// n(lambda) = sum (i-1) lambda_i.
  unsigned n_statistic() const;

  bool operator==(const Partition& o) const = default;
  /// Lexicographic on the parts list.
  auto operator<=>(const Partition& o) const { return parts <=> o.parts; }
};

/// Sequence of positive integers, order significant.
struct Composition {
  std::vector<unsigned> parts;
  unsigned size() const;
  unsigned length() const { return static_cast<unsigned>(parts.size()); }
  bool operator==(const Composition& o) const = default;
};

/// A pair of partitions: (sigma, tau) for flag types, (kappa, lambda) for
/// class types.
struct PairType {
  Partition first;
  Partition second;
  unsigned size() const { return first.size() + second.size(); }
  bool operator==(const PairType& o) const = default;
  auto operator<=>(const PairType& o) const = default;
};

Partition conjugate(const Partition& lambda);

/// True iff mu is dominated by lambda: every prefix sum of mu is at most the
/// matching prefix sum of lambda. Sizes may differ.
bool dominates(const Partition& lambda, const Partition& mu);

/// True iff mu, padded with |lambda|-|mu| ones, can be grouped so that the
/// groups sum exactly to the parts of lambda.
bool refines(const Partition& mu, const Partition& lambda);

/// (nu, mu) precedes (kappa, lambda): kappa refines nu and mu is dominated by lambda.
bool pair_precedes(const PairType& a, const PairType& b);
bool pair_strictly_precedes(const PairType& a, const PairType& b);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> all_partitions(unsigned n);
/// All compositions of n.
std::vector<Composition> all_compositions(unsigned n);

/// "3,1"; the empty partition is "-".
std::string to_string(const Partition& lambda);
Partition parse_partition(const std::string& text);
std::string to_string(const Composition& rho);
Composition parse_composition(const std::string& text);
/// "(sigma|tau)" with partitions written as above.
std::string to_string(const PairType& t);

}  // namespace glnq

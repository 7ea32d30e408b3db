#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "glnq/common.hpp"
#include "glnq/matrix.hpp"
#include "glnq/partition.hpp"

namespace glnq {

/// A flag specification (rho, I): a composition of n and the selected block
/// indices (1-based, increasing).
struct FlagSpec {
  Composition rho;
  std::vector<unsigned> selected;

  unsigned n() const { return rho.size(); }
  bool is_selected(unsigned block) const;  // 0-based block index
  bool operator==(const FlagSpec& o) const = default;
};

/// Throws InvalidType unless the spec is valid over F_q: parts positive,
/// indices in range, and (for q = 2) every unselected part larger than 1.
void validate_spec(const FlagSpec& spec, unsigned q);

/// "rho=2,5,1,2,3 I=2,3,5" (the I= clause may be omitted or written I=-).
FlagSpec parse_flag_spec(const std::string& text);
std::string to_string(const FlagSpec& spec);

/// (sigma, tau): selected parts and unselected parts, each sorted decreasingly.
PairType type_of_spec(const FlagSpec& spec);

/// Canonical spec of a type: selected blocks sigma first, then tau.
FlagSpec canonical_spec(const PairType& type);

/// For q = 2 an unselected one-dimensional quotient carries a unique basis, so
/// parts equal to 1 in tau move to sigma. Identity for q > 2.
PairType normalize_type(const PairType& type, unsigned q);

/// True iff the type is realized by some valid spec over F_q of dimension n.
bool is_valid_type(const PairType& type, unsigned n, unsigned q);

/// Number of flags of the given type:
/// [n]_q! / prod [tau_i]_q! * (q-1)^{|sigma|} * q^{sum sigma_i (sigma_i - 1)/2}.
/// Cross-checked against |GL(n,q)| / |stabilizer|. Throws InvalidType.
BigInt flag_count(const Partition& sigma, const Partition& tau, unsigned n, unsigned q);

/// Stabilizer order q^{(n^2 - sum rho_i^2)/2} prod_{i not in I} |GL(rho_i, q)|.
BigInt flag_stabilizer_order(const FlagSpec& spec, unsigned q);

/// A concrete flag. `vecs` holds n row vectors (as row codes) block by block:
/// for a selected block, its basis tuple reduced modulo the previous space;
/// for an unselected block, the rows of the echelon basis of V_i whose pivots
/// are new. This is a canonical key.
struct Flag {
  std::array<std::uint32_t, kMaxDim> vecs{};
  bool operator==(const Flag& o) const { return vecs == o.vecs; }
  auto operator<=>(const Flag& o) const { return vecs <=> o.vecs; }
};

struct FlagHash {
  std::size_t operator()(const Flag& f) const;
};

/// Canonicalizes a basis adapted to the spec (n rows of `basis`, block by block).
Flag make_flag(const FlagSpec& spec, const Matrix& basis);
/// The n vectors of a flag as matrix rows.
Matrix flag_vectors(const Field& field, const FlagSpec& spec, const Flag& flag);

/// Image of a flag under v -> g v.
Flag apply(const Matrix& g, const FlagSpec& spec, const Flag& flag);

/// Every flag of the spec once, in a deterministic order.
std::vector<Flag> enumerate_flags(const Field& field, const FlagSpec& spec,
                                  const Budget& budget = Budget::defaults());

using FlagIndex = std::unordered_map<Flag, std::uint32_t, FlagHash>;
FlagIndex index_flags(const std::vector<Flag>& flags);

/// r such that every flag maps to every flag under exactly r elements of Y, or
/// nothing if the count is not constant.
std::optional<std::uint64_t> transitivity_constant(const std::vector<Matrix>& ys, const FlagSpec& spec,
                                                   const Budget& budget = Budget::defaults());

/// Whether g fixes some flag of the given type (scan over the canonical spec).
bool fixes_some_flag(const Matrix& g, const PairType& type, const Budget& budget = Budget::defaults());

}  // namespace glnq

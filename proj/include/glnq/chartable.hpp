#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "glnq/class_table.hpp"
#include "glnq/cyclotomic.hpp"

namespace glnq {

/// Irreducible characters of GL(n,q) on its classes (columns in ClassTable
/// order). Values are sums of exponent-th roots of unity.
struct CharacterTable {
  unsigned n = 0, q = 0;
  std::uint32_t exponent = 1;
  std::uint64_t prime = 0;
  BigInt group_order;
  std::vector<BigInt> class_sizes;
  std::vector<std::string> labels;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<SparseCyclo>> rows;

  std::size_t size() const { return rows.size(); }
};

struct CharTableOptions {
  /// Empty means default_cache_dir().
  std::string cache_dir;
  bool read_cache = true;
  bool write_cache = true;
  /// When false, a missing cache entry raises TableMissing.
  bool allow_compute = true;
  /// Progress notes go here when non-null.
  std::ostream* log = nullptr;
  Budget budget = Budget::defaults();
};

/// $GLNQ_CACHE_DIR, or ./.glnq-cache when unset.
std::string default_cache_dir();
std::string cache_path(const std::string& dir, unsigned n, unsigned q);

/// Least prime p = 1 mod e with p > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t e, const BigInt& order);

/// Dixon-Schneider: split the class-multiplication eigenspaces mod p, then lift
/// each character value from eigenvalue multiplicities via power maps.
CharacterTable compute_character_table(const ClassTable& classes, std::ostream* log = nullptr,
                                       const Budget& budget = Budget::defaults());

/// Cached variant.
CharacterTable character_table(const Field& field, unsigned n, const CharTableOptions& options = {});

void write_character_table(std::ostream& out, const CharacterTable& table);
CharacterTable read_character_table(std::istream& in);

/// (1/|G|) sum_t |C_t| chi_i(t) conj(chi_j(t)) == delta_ij, checked exactly.
bool rows_orthonormal(const CharacterTable& table);

/// Throws KeyMismatch unless the table was built for these classes.
void require_matching(const CharacterTable& table, const ClassTable& classes);

}  // namespace glnq

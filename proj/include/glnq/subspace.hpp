#pragma once

#include <vector>

#include "glnq/common.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

/// A subspace of F_q^n, held by its reduced row echelon basis (a canonical
/// key: two subspaces are equal iff their bases are equal).
class Subspace {
 public:
  Subspace() = default;
  /// Row space of `rows` (any spanning set; zero rows allowed).
  static Subspace span(const Matrix& rows);
  static Subspace zero(const Field& field, unsigned n);
  static Subspace whole(const Field& field, unsigned n);

  const Field& field() const { return basis_.field(); }
  unsigned ambient_dim() const { return n_; }
  unsigned dim() const { return basis_.rows(); }
  /// k x n reduced echelon basis.
  const Matrix& basis() const { return basis_; }
  /// Pivot column of each basis row.
  std::vector<unsigned> pivots() const;

  /// v is a 1 x n row vector.
  bool contains(const Matrix& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  auto operator<=>(const Subspace& o) const { return basis_ <=> o.basis_; }
  std::size_t hash() const { return basis_.hash() * 31 + n_; }

 private:
  unsigned n_ = 0;
  Matrix basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace subspace_from_rows(const Matrix& rows);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool trivially_intersecting(const Subspace& a, const Subspace& b);
unsigned intersection_dim(const Subspace& a, const Subspace& b);
/// Image of a subspace under x -> x g^T, i.e. the column action v -> g v.
Subspace apply(const Matrix& g, const Subspace& s);

/// All k-subspaces of F_q^n in canonical order (pivot sets lexicographic,
/// then free entries). The count equals the Gaussian binomial [n k]_q.
std::vector<Subspace> enumerate_subspaces(const Field& field, unsigned n, unsigned k,
                                          const Budget& budget = Budget::defaults());

/// All (n-k)-subspaces C with B + C = F_q^n and B cap C = 0; there are
/// q^(k(n-k)) of them.
std::vector<Subspace> enumerate_complements(const Subspace& b,
                                            const Budget& budget = Budget::defaults());

}  // namespace glnq

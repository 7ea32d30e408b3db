#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "glnq/common.hpp"
#include "glnq/fqpoly.hpp"
#include "glnq/matrix.hpp"
#include "glnq/partition.hpp"

namespace glnq {

/// Monic irreducible polynomials other than X of degree at most max_degree,
/// ordered by degree, then by the code of the lower coefficients.
const std::vector<FqPoly>& irreducibles(const Field& field, unsigned max_degree);

/// Finite-support map from irreducible polynomials to nonempty partitions;
/// names a conjugacy class of GL(n,q) with n = norm().
struct LambdaMap {
  /// Sorted by polynomial; partitions are nonempty.
  std::vector<std::pair<FqPoly, Partition>> entries;

  LambdaMap() = default;
  /// Sorts entries and drops empty partitions.
  explicit LambdaMap(std::vector<std::pair<FqPoly, Partition>> e);

  unsigned norm() const;
  /// lambda(f), empty when f is not in the support.
  Partition at(const FqPoly& f) const;

  bool operator==(const LambdaMap& o) const { return entries == o.entries; }
  std::strong_ordering operator<=>(const LambdaMap& o) const;
};

/// "f1:l1;f2:l2" with polynomials as digit strings (leading coefficient first).
std::string to_string(const LambdaMap& m);
LambdaMap parse_lambda_map(const Field& field, const std::string& text);

/// All maps of norm n, sorted.
std::vector<LambdaMap> enumerate_lambda(const Field& field, unsigned n,
                                        const Budget& budget = Budget::defaults());

/// Block-diagonal canonical representative built from the blocks C(f, k).
Matrix class_representative(const Field& field, const LambdaMap& m);

/// C(f, k): k diagonal copies of C(f) with identity blocks on the block superdiagonal.
Matrix jordan_block(const FqPoly& f, unsigned k);

/// Class label of an invertible matrix; throws Singular otherwise.
LambdaMap jordan_type(const Matrix& g);

/// (kappa, lambda): lambda = m(X-1); kappa has |m(f)| parts equal to deg f for
/// every other f in the support.
PairType type_of_lambda(const Field& field, const LambdaMap& m);

/// Entrywise partition conjugation.
LambdaMap conjugate_lambda(const LambdaMap& m);

/// |C| = |GL(n,q)| / prod_f a_{m(f)}(q^{deg f}) from centralizer orders.
BigInt class_size_closed_form(const Field& field, const LambdaMap& m);

/// q^(n - rank(g - I)), the number of vectors fixed by g.
BigInt theta_value(const Matrix& g);

}  // namespace glnq

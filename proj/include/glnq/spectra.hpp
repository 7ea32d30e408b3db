#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glnq/chartable.hpp"
#include "glnq/class_table.hpp"
#include "glnq/cyclotomic.hpp"
#include "glnq/partition.hpp"

namespace glnq {

/// Rational-valued class function of GL(n,q), indexed by the class-table order.
struct ClassFunction {
  unsigned n = 0, q = 0;
  std::vector<Rational> values;
};

ClassFunction constant_function(const Field& field, unsigned n, const Rational& value);
/// theta(g) = q^{n - rank(g - I)}, the number of fixed vectors.
ClassFunction theta_function(const Field& field, unsigned n);
/// xi_j = prod_{i<j} (theta - q^i), the permutation character on independent
/// j-tuples. Throws OutOfRange for j > n.
ClassFunction xi_function(const Field& field, unsigned n, unsigned j);
/// U_k(theta) = sum_j (-1)^{k-j} q^{C(k-j,2)} [k j]_q xi_j. Throws OutOfRange for k > n.
ClassFunction u_theta(const Field& field, unsigned n, unsigned k);

/// (1/|G|) sum |C| phi conj(psi); throws KeyMismatch for different groups.
Rational class_inner_product(const ClassFunction& phi, const ClassFunction& psi);
/// <phi, chi_row> computed exactly; throws SizeMismatch if it is not rational.
Rational character_inner_product(const ClassFunction& phi, const CharacterTable& table, std::size_t row);

struct AscDecompositionReport {
  bool ok = false;
  /// <U_k(theta), chi> for every row of the GL(n,q) table.
  std::vector<Rational> multiplicities;
  /// Character degrees of GL(k,q), sorted.
  std::vector<std::uint64_t> expected;
  bool xi_ok = false;
  std::string detail;
};

/// Checks that the nonzero multiplicities of U_k(theta) are the degrees of
/// GL(k,q), that U_0..U_k have disjoint supports, and that xi_k decomposes with
/// the [k i]_q weights. Requires 2k <= n.
AscDecompositionReport verify_asc_decomposition(const Field& field, unsigned n, unsigned k,
                                                const CharTableOptions& options = {});

struct DualEntry {
  /// Exact value when it is rational.
  std::optional<Rational> exact;
  RationalInterval enclosure;
  /// The imaginary part encloses zero.
  bool real = false;
};

/// a'_chi = (chi(1)/|Y|) sum_{x,y in Y} chi(x^{-1} y), one entry per table row.
std::vector<DualEntry> dual_distribution(const std::vector<Matrix>& ys, const CharacterTable& table);

struct LpBound {
  /// Rigorous enclosure of the optimum.
  RationalInterval value;
  /// Orbits {mu, mu^{-1}} of unconstrained classes and their optimal weights
  /// from the lower program.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<Rational> weights;
  unsigned pivots = 0;
};

/// Delsarte bound for (sigma,tau)-cliques: maximize sum a_mu subject to a >= 0,
/// a_identity = 1, the forbidden-class zero pattern, a_mu = a_{mu^{-1}} and
/// sum_mu Re(chi_mu) a_mu >= 0 for every character. Solved exactly over lower
/// and upper rational enclosures of the real parts.
LpBound lp_clique_bound(const ClassTable& classes, const CharacterTable& table, const PairType& type);
LpBound lp_clique_bound(const Field& field, unsigned n, const Partition& sigma, const Partition& tau,
                        const CharTableOptions& options = {});

}  // namespace glnq

#pragma once

#include <utility>
#include <vector>

#include "glnq/class_table.hpp"
#include "glnq/common.hpp"
#include "glnq/matrix.hpp"
#include "glnq/partition.hpp"

namespace glnq {

/// a_mu = (1/|Y|) #{(x,y) in Y^2 : x^{-1} y in class mu}, in class-table order.
struct InnerDistribution {
  const ClassTable* table = nullptr;
  BigInt subset_size;
  std::vector<Rational> values;
};

/// A_i = (1/|Y|) #{(x,y) : rank(x - y) = i} and A'_k = sum_i U_k(q^{n-i}) A_i.
struct DistanceDistribution {
  std::vector<Rational> A;
  std::vector<Rational> Aprime;
};

/// Checks that Y is nonempty and lies in a single GL(n,q); returns (n, field).
std::pair<unsigned, const Field*> check_subset(const std::vector<Matrix>& ys);

InnerDistribution inner_distribution(const std::vector<Matrix>& ys);
DistanceDistribution distance_distribution(const std::vector<Matrix>& ys);
/// Fills Aprime from A.
DistanceDistribution with_dual(std::vector<Rational> a, unsigned n, unsigned q);

/// t-design test: the A' criterion for t <= n/2, the direct flag test beyond.
bool is_t_design(const std::vector<Matrix>& ys, unsigned t);
/// Pairwise rank distance at least d.
bool is_d_code(const std::vector<Matrix>& ys, unsigned d);

/// Classes whose inner-distribution entry must vanish for a (sigma,tau)-clique:
/// (tau,sigma) precedes type(mu') and type(mu') is not (0,(n)).
std::vector<bool> clique_forbidden_classes(const ClassTable& table, const PairType& type);

/// Clique test through the inner distribution. Throws InvalidType.
bool is_clique(const std::vector<Matrix>& ys, const Partition& sigma, const Partition& tau);
/// Clique test from the definition: no quotient of distinct elements fixes a flag.
bool is_clique_by_flags(const std::vector<Matrix>& ys, const Partition& sigma, const Partition& tau);

/// (clique upper bound, design lower bound), both |GL(n,q)|/|H|.
std::pair<BigInt, BigInt> clique_design_bounds(const Partition& sigma, const Partition& tau, unsigned n,
                                               unsigned q);

/// Distance distribution forced for a t-design that is an (n-t)-code of the given size.
DistanceDistribution predicted_distance_distribution(unsigned n, unsigned q, const BigInt& size, unsigned t);

/// w_i = number of elements of GL(n,q) fixing exactly a q^i-element subspace.
std::vector<BigInt> w_vector(unsigned n, unsigned q);

/// sum_i w_i U_k(q^i) U_l(q^i) with the weights of w_vector(n, q).
BigInt asc_weighted_inner(unsigned n, unsigned k, unsigned l, unsigned q);

/// Enumeration tally of fixed-space dimensions over GL(n,q).
std::vector<BigInt> fixed_space_tally(const Field& field, unsigned n, const Budget& budget = Budget::defaults());

}  // namespace glnq

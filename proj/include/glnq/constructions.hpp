#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glnq/common.hpp"
#include "glnq/fqpoly.hpp"
#include "glnq/matrix.hpp"
#include "glnq/subspace.hpp"

namespace glnq {

/// Least irreducible of degree n (in irreducibles() order) whose companion
/// matrix has order q^n - 1.
FqPoly primitive_polynomial(const Field& field, unsigned n);

/// Companion matrix of primitive_polynomial: multiplication by a generator
/// alpha of F_{q^n}^* in the basis 1, alpha, ..., alpha^{n-1}.
Matrix singer_generator(const Field& field, unsigned n);

/// C, C^2, ..., C^{q^n - 1} = I for the Singer generator C.
std::vector<Matrix> singer_cycle(const Field& field, unsigned n);

/// Powers of C^step: a cyclic subgroup of order (q^n - 1)/step.
std::vector<Matrix> singer_subgroup(const Field& field, unsigned n, unsigned step);

/// Matrix of x -> x^q on F_{q^n} in the same basis; column j holds alpha^{jq}.
Matrix frobenius_matrix(const Field& field, unsigned n);

/// Group generated by the Singer generator and the Frobenius matrix, sorted.
std::vector<Matrix> gamma_l1(const Field& field, unsigned n);

/// A set of k-subspaces of F_q^n with a claimed strength.
struct SubspaceDesign {
  unsigned n = 0, k = 0;
  const Field* field = nullptr;
  std::vector<Subspace> blocks;
  unsigned declared_t = 0;
};

/// Every k-space of F_q^n (a design of every strength t <= k).
SubspaceDesign full_grassmannian(const Field& field, unsigned n, unsigned k);

/// The (n/k)-dimensional F_{q^k}-lines of F_q^n viewed over F_q: a spread of
/// pairwise trivially intersecting k-spaces. Requires k | n.
SubspaceDesign field_spread(const Field& field, unsigned n, unsigned k);

/// Number of blocks through each t-space if constant, otherwise nothing.
std::optional<BigInt> grassmannian_design_check(const SubspaceDesign& d, unsigned t,
                                                const Budget& budget = Budget::defaults());

/// Checks the declared strength; throws NotADesign when it fails.
void verify_design(const SubspaceDesign& d);

/// Builds a design from a subspace-set file and verifies the declared strength.
SubspaceDesign load_subspace_design(const std::string& path, unsigned declared_t);

/// m_{i,j} from the closed formula. Throws StrengthExceeded unless i + j <= declared_t.
BigInt intersection_number_formula(const SubspaceDesign& d, unsigned i, unsigned j);
/// #{B : I <= B, B cap J = 0} for the given I and J.
BigInt intersection_number_count(const SubspaceDesign& d, const Subspace& i_space, const Subspace& j_space);
/// Same, with I spanned by e_1..e_i and J by e_{i+1}..e_{i+j}.
BigInt intersection_number_empirical(const SubspaceDesign& d, unsigned i, unsigned j);

/// {(g_B y, h_{B,C} z)}: the element acting as g_B y on U = <e_1..e_k> and as
/// h_{B,C} z on W = <e_{k+1}..e_n>, for every y, z, B in D and complement C of
/// B. g_B and h_{B,C} map standard bases to echelon bases, or to randomly
/// re-based ones when rng is given. With verify set, the t-design hypotheses
/// are checked first (NotADesign).
std::vector<Matrix> recursive_design(const std::vector<Matrix>& ys, const std::vector<Matrix>& zs,
                                     const SubspaceDesign& d, unsigned t, bool verify = true,
                                     std::mt19937_64* rng = nullptr,
                                     const Budget& budget = Budget::defaults());

/// F_q-linear rank-metric code given by a basis of n x n matrices.
struct LinearRankCode {
  unsigned n = 0, d = 0;
  const Field* field = nullptr;
  std::vector<Matrix> generators;
};

/// Gabidulin code: the maps x -> sum_{i <= n-d} a_i x^{q^i}, spanned by C^j F^i.
LinearRankCode mrd_code(const Field& field, unsigned n, unsigned d);
/// Every member of the code (q^dim of them).
std::vector<Matrix> code_members(const LinearRankCode& code, const Budget& budget = Budget::defaults());
/// Minimum rank over nonzero members.
unsigned code_min_rank(const LinearRankCode& code, const Budget& budget = Budget::defaults());
/// Invertible members, sorted.
std::vector<Matrix> invertible_subcode(const LinearRankCode& code, const Budget& budget = Budget::defaults());
/// N = sum_{j <= n-d} (-1)^j q^{C(j,2)} [n j]_q (q^{n(n-d+1-j)} - 1).
BigInt mrd_invertible_count(unsigned n, unsigned d, unsigned q);

/// Repeatedly takes the closure of two random elements of GL(n,q) until a
/// subgroup of the target order appears; returns it sorted.
std::vector<Matrix> random_subgroup_search(const Field& field, unsigned n, const BigInt& target_order,
                                           std::uint64_t seed, unsigned max_tries = 1000);

}  // namespace glnq

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "glnq/class_table.hpp"
#include "glnq/constructions.hpp"
#include "glnq/distributions.hpp"
#include "glnq/enumerate.hpp"
#include "glnq/flags.hpp"
#include "glnq/matrix_io.hpp"
#include "glnq/qanalog.hpp"
#include "oracles.hpp"

using namespace glnq;

namespace {

std::vector<std::uint64_t> codes(const std::vector<Matrix>& ms) {
  std::vector<std::uint64_t> out;
  for (const Matrix& m : ms) out.push_back(m.code());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> transitivity(const std::vector<Matrix>& ys, const char* spec) {
  return transitivity_constant(ys, parse_flag_spec(spec));
}

// Number of y in Y with y e_l = v_l for l < i, for the first i columns of target.
std::uint64_t extension_count(const std::vector<Matrix>& ys, const Matrix& target, unsigned i) {
  std::uint64_t c = 0;
  for (const Matrix& y : ys) {
    bool ok = true;
    for (unsigned l = 0; l < i && ok; ++l) {
      for (unsigned r = 0; r < y.rows() && ok; ++r) ok = y(r, l) == target(r, l);
    }
    c += ok;
  }
  return c;
}

}  // namespace

TEST_CASE("Singer cycles") {
  const Field& f2 = field_of_order(2);
  const auto s32 = singer_cycle(f2, 3);
  CHECK(s32.size() == 7);
  CHECK(is_subgroup(s32));
  CHECK(transitivity(s32, "rho=1,2 I=1") == std::optional<std::uint64_t>(1));
  CHECK(singer_cycle(field_of_order(3), 2).size() == 8);

  // The subgroup of order (q^n-1)/(q-1) meets the scalars only when
  // gcd(n, q-1) = 1; the first (q^n-1)/(q-1) powers of C always form a set
  // sharply transitive on points.
  for (auto [n, q] : {std::pair{2u, 3u}, std::pair{3u, 3u}, std::pair{2u, 4u}, std::pair{2u, 5u}, std::pair{3u, 4u}}) {
    CAPTURE(n);
    CAPTURE(q);
    const Field& f = field_of_order(q);
    const auto sub = singer_subgroup(f, n, q - 1);
    const std::uint64_t points_count = static_cast<std::uint64_t>(q_integer(n, q));
    CHECK(sub.size() == points_count);
    FlagSpec points;
    points.rho.parts = {1, n - 1};
    const bool coprime = std::gcd(n, q - 1) == 1;
    CHECK(transitivity_constant(sub, points).has_value() == coprime);
    const auto cycle = singer_cycle(f, n);
    const std::vector<Matrix> first(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(points_count));
    CHECK(transitivity_constant(first, points) == std::optional<std::uint64_t>(1));
  }

  // Nonidentity quotients have no eigenvalue 1.
  for (auto [n, q] : {std::pair{3u, 2u}, std::pair{4u, 2u}, std::pair{2u, 3u}}) {
    const Field& f = field_of_order(q);
    const FqPoly x_minus_1 = FqPoly::x_minus(f, 1);
    for (const Matrix& g : singer_cycle(f, n)) {
      if (g == Matrix::identity(f, n)) continue;
      CHECK(jordan_type(g).at(x_minus_1).empty());
    }
  }
  // The primitive polynomial's companion matrix has full order.
  CHECK(mat_order(singer_generator(field_of_order(3), 3)) == 26);
}

TEST_CASE("semilinear groups") {
  const Field& f2 = field_of_order(2);
  const Field& f3 = field_of_order(3);
  const auto g32 = gamma_l1(f2, 3);
  CHECK(g32.size() == 21);
  CHECK(is_subgroup(g32));
  CHECK(transitivity(g32, "rho=1,1,1 I=1,2,3") == std::optional<std::uint64_t>(1));

  const auto g23 = gamma_l1(f3, 2);
  CHECK(g23.size() == 16);
  CHECK(transitivity(g23, "rho=1,1 I=1,2") == std::optional<std::uint64_t>(1));

  const auto g52 = gamma_l1(f2, 5);
  CHECK(g52.size() == 155);
  CHECK(is_subgroup(g52));
  CHECK(transitivity(g52, "rho=3,2") == std::optional<std::uint64_t>(1));

  // The Frobenius matrix has order n and normalizes the Singer cycle.
  const Matrix fr = frobenius_matrix(f2, 5);
  CHECK(mat_order(fr) == 5);
  const Matrix c = singer_generator(f2, 5);
  CHECK(mat_mul(fr, c) == mat_mul(mat_pow(c, 2), fr));
}

TEST_CASE("Grassmannian designs") {
  const Field& f2 = field_of_order(2);
  const SubspaceDesign full = full_grassmannian(f2, 4, 2);
  CHECK(full.blocks.size() == 35);
  CHECK(grassmannian_design_check(full, 1) == std::optional<BigInt>(7));
  CHECK(grassmannian_design_check(full, 2) == std::optional<BigInt>(1));

  const SubspaceDesign spread = field_spread(f2, 4, 2);
  CHECK(spread.blocks.size() == 5);
  for (std::size_t a = 0; a < spread.blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < spread.blocks.size(); ++b) {
      CHECK(trivially_intersecting(spread.blocks[a], spread.blocks[b]));
    }
  }
  CHECK(grassmannian_design_check(spread, 1) == std::optional<BigInt>(1));
  CHECK(!grassmannian_design_check(spread, 2).has_value());

  SubspaceDesign missing = full;
  missing.blocks.pop_back();
  CHECK(!grassmannian_design_check(missing, 1).has_value());
  missing.declared_t = 1;
  CHECK_THROWS_AS(verify_design(missing), Error);

  const SubspaceDesign spread63 = field_spread(field_of_order(3), 4, 2);
  CHECK(spread63.blocks.size() == 10);
  CHECK(grassmannian_design_check(spread63, 1) == std::optional<BigInt>(1));
}

TEST_CASE("intersection numbers") {
  const Field& f2 = field_of_order(2);
  SubspaceDesign full = full_grassmannian(f2, 4, 2);
  full.declared_t = 2;
  CHECK(intersection_number_formula(full, 0, 0) == 35);
  CHECK(intersection_number_formula(full, 2, 0) == 1);
  CHECK(intersection_number_formula(full, 1, 0) == 7);

  // Every pair (I, J) with I cap J = 0 gives the formula value.
  for (unsigned i = 0; i <= 2; ++i) {
    for (unsigned j = 0; i + j <= 2; ++j) {
      const BigInt expect = intersection_number_formula(full, i, j);
      CHECK(intersection_number_empirical(full, i, j) == expect);
      for (const Subspace& is : enumerate_subspaces(f2, 4, i)) {
        for (const Subspace& js : enumerate_subspaces(f2, 4, j)) {
          if (!trivially_intersecting(is, js)) continue;
          CHECK(intersection_number_count(full, is, js) == expect);
        }
      }
    }
  }
  SubspaceDesign spread = field_spread(f2, 4, 2);
  spread.declared_t = 1;
  CHECK(intersection_number_formula(spread, 0, 1) == intersection_number_empirical(spread, 0, 1));
  CHECK(intersection_number_formula(spread, 1, 0) == 1);
  CHECK_THROWS_AS(intersection_number_formula(spread, 1, 1), Error);
}

TEST_CASE("recursive construction") {
  const Field& f2 = field_of_order(2);
  const auto gl2 = enumerate_gl(f2, 2);
  SubspaceDesign full = full_grassmannian(f2, 4, 2);
  full.declared_t = 2;
  const auto out = recursive_design(gl2, gl2, full, 2);
  CHECK(out.size() == 20160);
  CHECK(codes(out) == codes(enumerate_gl(f2, 4)));

  SubspaceDesign spread = field_spread(f2, 4, 2);
  spread.declared_t = 1;
  const auto s = recursive_design(gl2, gl2, spread, 1);
  CHECK(s.size() == 2880);
  const auto sc = codes(s);
  CHECK(std::adjacent_find(sc.begin(), sc.end()) == sc.end());
  for (const Matrix& g : s) CHECK(is_invertible(g));
  CHECK(is_t_design(s, 1));
  CHECK(!is_t_design(s, 2));

  // With full groups as factors a change of bases is absorbed.
  std::mt19937_64 rng(41);
  CHECK(codes(recursive_design(gl2, gl2, spread, 1, true, &rng)) == sc);

  // Smaller factors: Singer cycles are 1-designs in GL(2,2). Other bases give
  // another set, still a 1-design.
  const auto singer = singer_cycle(f2, 2);
  const auto small = recursive_design(singer, singer, spread, 1);
  CHECK(small.size() == 3 * 3 * 5 * 16);
  CHECK(is_t_design(small, 1));
  const auto rebased = recursive_design(singer, singer, spread, 1, true, &rng);
  CHECK(is_t_design(rebased, 1));
  CHECK(codes(rebased) != codes(small));

  // A set that is not a 1-design is rejected.
  CHECK_THROWS_AS(recursive_design({Matrix::identity(f2, 2)}, gl2, spread, 1), Error);
  CHECK_NOTHROW(recursive_design({Matrix::identity(f2, 2)}, gl2, spread, 0));
}

TEST_CASE("extension counts in a design") {
  // r_i = number of y sending e_1..e_i to fixed independent vectors; for a
  // t-design these satisfy r_i = (q^k - q^i) r_{i+1} for i < t.
  const Field& f2 = field_of_order(2);
  const Field& f3 = field_of_order(3);
  for (const auto& [ys, t] : {std::pair{enumerate_gl(f2, 3), 3u}, std::pair{gamma_l1(f2, 3), 1u},
                              std::pair{enumerate_gl(f3, 2), 2u}, std::pair{singer_cycle(f3, 2), 1u}}) {
    const unsigned k = ys.front().rows();
    const unsigned q = ys.front().field().q();
    std::mt19937_64 rng(43);
    const Matrix target = random_invertible(ys.front().field(), k, rng);
    for (unsigned i = 0; i < t; ++i) {
      const BigInt ri = extension_count(ys, target, i);
      const BigInt next = extension_count(ys, target, i + 1);
      CHECK(ri == (big_pow(q, k) - big_pow(q, i)) * next);
    }
  }
}

TEST_CASE("rank-metric codes") {
  for (auto [n, q] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}}) {
    const Field& f = field_of_order(q);
    for (unsigned d = 1; d <= n; ++d) {
      CAPTURE(n);
      CAPTURE(q);
      CAPTURE(d);
      const LinearRankCode code = mrd_code(f, n, d);
      CHECK(code.generators.size() == n * (n - d + 1));
      const auto members = code_members(code);
      CHECK(BigInt(members.size()) == big_pow(q, n * (n - d + 1)));
      CHECK(code_min_rank(code) >= d);

      // Oracle: count invertible members with naive ranks.
      const oracle::NaiveField nf(f);
      std::size_t invertible = 0;
      for (const Matrix& m : members) invertible += oracle::rank(nf, oracle::to_mat(m)) == static_cast<int>(n);
      const auto sub = invertible_subcode(code);
      CHECK(sub.size() == invertible);
      CHECK(BigInt(sub.size()) == mrd_invertible_count(n, d, q));
      CHECK(is_d_code(sub, d));

      const Rational size(BigInt(sub.size()));
      const Rational lower = (Rational(1) - Rational(1, q - 1)) * Rational(big_pow(q, n * (n - d + 1)));
      CHECK(size >= lower);
      if (q == 2) CHECK(size >= Rational(big_pow(q, n * (n - d))));
    }
  }
  const Field& f2 = field_of_order(2);
  CHECK(invertible_subcode(mrd_code(f2, 3, 3)).size() == 7);
  CHECK(mrd_invertible_count(3, 2, 2) == 14);
  CHECK_THROWS_AS(mrd_code(f2, 3, 0), Error);
  CHECK_THROWS_AS(mrd_code(f2, 3, 4), Error);
}

TEST_CASE("subgroup search") {
  const Field& f2 = field_of_order(2);
  const auto found = random_subgroup_search(f2, 3, 21, 5);
  CHECK(found.size() == 21);
  CHECK(is_subgroup(found));
  CHECK(transitivity(found, "rho=1,1,1 I=1,2,3") == std::optional<std::uint64_t>(1));

  const auto a7 = load_matrix_set(std::string(GLNQ_FIXTURE_DIR) + "/a7_gl42.glnq").elements;
  CHECK(a7.size() == 2520);
  CHECK(is_subgroup(a7));
  CHECK(transitivity(a7, "rho=3,1 I=1,2") == std::optional<std::uint64_t>(1));
  CHECK_THROWS_AS(random_subgroup_search(f2, 3, 5, 1, 20), Error);
}

// End-to-end checks of the headline results. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "glnq/asc.hpp"
#include "glnq/chartable.hpp"
#include "glnq/class_table.hpp"
#include "glnq/constructions.hpp"
#include "glnq/distributions.hpp"
#include "glnq/enumerate.hpp"
#include "glnq/flags.hpp"
#include "glnq/matrix_io.hpp"
#include "glnq/qanalog.hpp"
#include "glnq/spectra.hpp"
#include "glnq/subspace.hpp"
#include "oracles.hpp"

using namespace glnq;

namespace {

// Collects failed expectations for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

CharTableOptions g_tables;

std::vector<Matrix> fixture(const char* name) {
  return load_matrix_set(std::string(GLNQ_FIXTURE_DIR) + "/" + name).elements;
}

std::optional<std::uint64_t> transitivity(const std::vector<Matrix>& ys, const char* spec) {
  return transitivity_constant(ys, parse_flag_spec(spec));
}

std::vector<std::uint64_t> sorted_codes(const std::vector<Matrix>& ms) {
  std::vector<std::uint64_t> out;
  for (const Matrix& m : ms) out.push_back(m.code());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PairType> valid_types(unsigned n, unsigned q) {
  std::vector<PairType> out;
  for (unsigned s = 0; s <= n; ++s) {
    for (const auto& sigma : s ? all_partitions(s) : std::vector<Partition>{Partition{}}) {
      for (const auto& tau : s < n ? all_partitions(n - s) : std::vector<Partition>{Partition{}}) {
        if (is_valid_type(PairType{sigma, tau}, n, q)) out.push_back({sigma, tau});
      }
    }
  }
  return out;
}

std::string show(const std::optional<std::uint64_t>& r) { return r ? std::to_string(*r) : "none"; }

void lp_table(Check& c) {
  const Field& f2 = field_of_order(2);
  const struct {
    Partition sigma, tau;
    long lp, bound;
  } rows[] = {{{2, 1, 1}, {}, 420, 630}, {{1, 1}, {2}, 84, 105}, {{2}, {2}, 168, 210}};
  const Rational tol(1, 1000000);
  for (const auto& row : rows) {
    const std::string name = to_string(PairType{row.sigma, row.tau});
    const LpBound b = lp_clique_bound(f2, 4, row.sigma, row.tau, g_tables);
    const Rational target(row.lp);
    c.expect(b.value.lo >= target - tol && b.value.hi <= target + tol,
             name + ": LP enclosure not within 1e-6 of " + std::to_string(row.lp));
    const BigInt clique = clique_design_bounds(row.sigma, row.tau, 4, 2).first;
    c.expect(clique == row.bound, name + ": clique bound " + clique.str());
  }
}

// The GL(5,2) rows of the same table.
void lp_table_gl52(Check& c) {
  const Field& f2 = field_of_order(2);
  const struct {
    Partition sigma, tau;
    long lp, bound;
  } rows[] = {{{3, 2}, {}, 139500, 156240}, {{3, 1, 1}, {}, 53010, 78120}, {{2, 2, 1}, {}, 24180, 39060},
              {{2, 1, 1, 1}, {}, 11718, 19530}, {{3}, {2}, 19530, 26040},       {{2, 1}, {2}, 3550, 6510},
              {{1, 1, 1}, {2}, 2604, 3255},     {{1}, {2, 2}, 805, 1085}};
  const CharacterTable table = character_table(f2, 5, g_tables);
  const ClassTable& classes = class_table(f2, 5);
  const Rational tol(1, 1000000);
  for (const auto& row : rows) {
    const PairType type{row.sigma, row.tau};
    // Cliques have integer size, so the bound is the floor of the optimum.
    const LpBound b = lp_clique_bound(classes, table, type);
    const Rational target(row.lp);
    c.expect(b.value.width() < tol && b.value.hi >= target - tol && b.value.lo < target + 1,
             to_string(type) + ": LP optimum does not round down to " + std::to_string(row.lp));
    c.expect(clique_design_bounds(row.sigma, row.tau, 5, 2).first == row.bound, to_string(type) + ": clique bound");
  }
}

void sharp_fixtures(Check& c) {
  const Field& f2 = field_of_order(2);
  const Field& f3 = field_of_order(3);
  const auto singer = fixture("singer_3_2.glnq");
  c.expect(sorted_codes(singer) == sorted_codes(singer_cycle(f2, 3)), "Singer fixture differs from the construction");
  c.expect(transitivity(singer, "rho=1,2 I=1") == 1u, "Singer r=" + show(transitivity(singer, "rho=1,2 I=1")));

  const struct {
    const Field* field;
    unsigned n;
    const char* spec;
    std::size_t flags;
  } cases[] = {{&f2, 3, "rho=1,1,1 I=1,2,3", 21}, {&f3, 2, "rho=1,1 I=1,2", 16}, {&f2, 5, "rho=3,2", 155}};
  for (const auto& k : cases) {
    const auto g = gamma_l1(*k.field, k.n);
    const std::string name = "GammaL(1," + std::to_string(k.field->q()) + "^" + std::to_string(k.n) + ")";
    c.expect(g.size() == k.flags, name + " order " + std::to_string(g.size()));
    c.expect(enumerate_flags(*k.field, parse_flag_spec(k.spec)).size() == k.flags, name + " flag count");
    c.expect(transitivity(g, k.spec) == 1u, name + " r=" + show(transitivity(g, k.spec)));
  }
}

void a7_code(Check& c) {
  const auto a = fixture("a7_gl42.glnq");
  c.expect(is_subgroup(a), "fixture is not a subgroup");
  c.expect(is_d_code(a, 2), "not a 2-code");
  BigInt prod = 1;
  for (int i = 0; i <= 2; ++i) prod *= 16 - (1 << i);
  c.expect(prod == 2520 && BigInt(a.size()) == prod, "size " + std::to_string(a.size()) + " vs bound " + prod.str());
  c.expect(independent_tuples(4, 3, 2) == prod, "bound formula");
  c.expect(transitivity(a, "rho=3,1 I=1,2") == 1u, "r=" + show(transitivity(a, "rho=3,1 I=1,2")));
}

void rudvalis_shinoda(Check& c) {
  for (auto [n, q] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{4u, 2u}}) {
    const std::string name = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    const auto w = w_vector(n, q);
    c.expect(w == fixed_space_tally(field_of_order(q), n), name + ": w differs from the tally");
    const DistanceDistribution d = predicted_distance_distribution(n, q, gl_order(n, q), n);
    for (unsigned i = 0; i <= n; ++i) c.expect(d.A[n - i] == Rational(w[i]), name + ": predicted A differs");
  }
}

void asc_suite(Check& c) {
  for (unsigned q : {2u, 3u}) {
    const BigInt b(q);
    const std::string name = "q=" + std::to_string(q);
    c.expect(asc_poly(1, q) == IntPolynomial({-2, 1}), name + ": U_1");
    c.expect(asc_poly(2, q) == IntPolynomial({3 * b + 1, -2 * (b + 1), 1}), name + ": U_2");
    c.expect(asc_poly(3, q) == IntPolynomial({-2 * b * (2 * b * b + b + 1), 3 * b * b * b + 4 * b * b + 4 * b + 1,
                                              -2 * (b * b + b + 1), 1}),
             name + ": U_3");
    for (unsigned j = 0; j <= 8; ++j) {
      c.expect(asc_moment_identity(j, q), name + ": moment identity j=" + std::to_string(j));
      for (unsigned l = j; l <= 8; ++l) {
        const BigInt expect = j == l ? 1 : 0;
        c.expect(asc_inversion(j, l, q) == expect, name + ": inversion " + std::to_string(j) + "," + std::to_string(l));
      }
    }
    for (unsigned n = 0; n <= 5; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        for (unsigned l = 0; k + l <= n; ++l) {
          const BigInt expect = k == l ? gl_order(k, q) * gl_order(n, q) : BigInt(0);
          c.expect(asc_weighted_inner(n, k, l, q) == expect, name + ": orthogonality n=" + std::to_string(n) +
                                                                 " k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
      }
    }
  }
}

void asc_decomposition(Check& c) {
  for (auto [n, q, k] : {std::tuple{4u, 2u, 0u}, std::tuple{4u, 2u, 1u}, std::tuple{4u, 2u, 2u}, std::tuple{4u, 3u, 1u}}) {
    const AscDecompositionReport r = verify_asc_decomposition(field_of_order(q), n, k, g_tables);
    const std::string name = "(" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(k) + ")";
    c.expect(r.ok, name + ": " + r.detail);
    c.expect(r.xi_ok, name + ": xi decomposition");
  }
}

void route_agreement(Check& c) {
  std::mt19937_64 rng(29);
  std::size_t design_disagree = 0, clique_disagree = 0;
  auto by_flags = [](const std::vector<Matrix>& ys, unsigned t) {
    const unsigned n = ys.front().rows();
    const PairType type = normalize_type(PairType{Partition{t}, Partition{n - t}}, ys.front().field().q());
    return transitivity_constant(ys, canonical_spec(type)).has_value();
  };
  auto compare = [&](const std::vector<Matrix>& ys) {
    for (unsigned t = 1; 2 * t <= ys.front().rows(); ++t) design_disagree += is_t_design(ys, t) != by_flags(ys, t);
  };
  for (auto [n, q] : {std::pair{3u, 2u}, std::pair{4u, 2u}, std::pair{2u, 3u}}) {
    const Field& f = field_of_order(q);
    const auto gl = enumerate_gl(f, n);
    compare(gl);
    compare(singer_cycle(f, n));
    compare(gamma_l1(f, n));
    const std::size_t points = static_cast<std::size_t>(big_pow(q, n)) - 1;
    for (int rep = 0; rep < 100; ++rep) {
      std::vector<Matrix> pool = gl;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(points * (1 + rng() % 3) + rng() % 2);
      compare(pool);
    }
  }
  compare(fixture("a7_gl42.glnq"));

  const Field& f2 = field_of_order(2);
  auto clique_differs = [](const std::vector<Matrix>& ys, const PairType& t) {
    return is_clique(ys, t.first, t.second) != is_clique_by_flags(ys, t.first, t.second);
  };
  const auto types3 = valid_types(3, 2);
  const Matrix id3 = Matrix::identity(f2, 3);
  for (const Matrix& g : enumerate_gl(f2, 3)) {
    if (g == id3) continue;
    for (const PairType& t : types3) {
      if (!t.first.parts.empty()) clique_disagree += clique_differs({id3, g}, t);
    }
  }
  auto types4 = valid_types(4, 2);
  std::erase_if(types4, [](const PairType& t) { return t.first.parts.empty(); });
  for (int rep = 0; rep < 1000;) {
    const Matrix x = random_invertible(f2, 4, rng);
    const Matrix y = random_invertible(f2, 4, rng);
    if (x == y) continue;
    clique_disagree += clique_differs({x, y}, types4[rng() % types4.size()]);
    ++rep;
  }
  c.expect(design_disagree == 0, std::to_string(design_disagree) + " design disagreements");
  c.expect(clique_disagree == 0, std::to_string(clique_disagree) + " clique disagreements");
}

void recursive_construction(Check& c) {
  const Field& f2 = field_of_order(2);
  const auto gl2 = enumerate_gl(f2, 2);
  SubspaceDesign full = full_grassmannian(f2, 4, 2);
  full.declared_t = 2;
  c.expect(sorted_codes(recursive_design(gl2, gl2, full, 2)) == sorted_codes(enumerate_gl(f2, 4)),
           "full Grassmannian does not give GL(4,2)");

  SubspaceDesign spread = field_spread(f2, 4, 2);
  spread.declared_t = 1;
  const auto s = recursive_design(gl2, gl2, spread, 1);
  c.expect(s.size() == 2880, "spread output size " + std::to_string(s.size()));
  c.expect(is_t_design(s, 1), "spread output is not a 1-design");

  for (unsigned i = 0; i <= 2; ++i) {
    for (unsigned j = 0; i + j <= 2; ++j) {
      const BigInt expect = intersection_number_formula(full, i, j);
      for (const Subspace& is : enumerate_subspaces(f2, 4, i)) {
        for (const Subspace& js : enumerate_subspaces(f2, 4, j)) {
          if (!trivially_intersecting(is, js)) continue;
          c.expect(intersection_number_count(full, is, js) == expect,
                   "intersection number i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
      }
    }
  }
}

void mrd(Check& c) {
  const Field& f2 = field_of_order(2);
  const unsigned n = 3, q = 2;
  for (unsigned d = 1; d <= n; ++d) {
    const std::string name = "d=" + std::to_string(d);
    const LinearRankCode code = mrd_code(f2, n, d);
    const auto sub = invertible_subcode(code);
    c.expect(BigInt(sub.size()) == mrd_invertible_count(n, d, q), name + ": invertible count");
    c.expect(code_min_rank(code) >= d, name + ": minimum rank");
    c.expect(is_d_code(sub, d), name + ": subcode distance");
    const Rational size(BigInt(sub.size()));
    const Rational full(big_pow(q, n * (n - d + 1)));
    c.expect(size >= (Rational(1) - Rational(1, q - 1)) * full, name + ": first lower bound");
    c.expect(size >= Rational(big_pow(q, n * (n - d))), name + ": second lower bound");
  }
}

void structure(Check& c) {
  const Field& f2 = field_of_order(2);
  for (const auto& m : enumerate_lambda(f2, 4)) {
    c.expect(jordan_type(class_representative(f2, m)) == m, "jordan_type round trip");
  }

  for (auto [n, q] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{4u, 2u}}) {
    const Field& f = field_of_order(q);
    const oracle::NaiveField nf(f);
    const auto group = oracle::all_invertible(nf, static_cast<int>(n));
    const auto classes = oracle::conjugacy_classes(nf, group);
    c.expect(classes.size() == class_table(f, n).size(),
             "GL(" + std::to_string(n) + "," + std::to_string(q) + ") class count");
  }

  const std::pair<unsigned, unsigned> groups[] = {{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {2, 3}, {3, 3},
                                                  {4, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5}, {2, 7}, {2, 8}, {2, 9}};
  for (auto [n, q] : groups) {
    const Field& f = field_of_order(q);
    for (const PairType& t : valid_types(n, q)) {
      const BigInt count = flag_count(t.first, t.second, n, q);
      if (count > 100000) continue;
      c.expect(BigInt(enumerate_flags(f, canonical_spec(t)).size()) == count, "flag count " + to_string(t));
    }
  }

  for (auto [n, q] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{2u, 5u},
                      std::pair{3u, 3u}, std::pair{4u, 2u}, std::pair{4u, 3u}}) {
    const CharacterTable t = character_table(field_of_order(q), n, g_tables);
    BigInt sq = 0;
    for (auto d : t.degrees) sq += BigInt(d) * d;
    c.expect(sq == gl_order(n, q), "sum of squared degrees for GL(" + std::to_string(n) + "," + std::to_string(q) + ")");
  }
}

}  // namespace

int main(int argc, char** argv) {
  // A fresh cache so every character table is recomputed.
  const std::filesystem::path cache = argc > 1 ? argv[1] : "acceptance-cache";
  std::filesystem::remove_all(cache);
  g_tables.cache_dir = cache.string();

  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"LP and clique bounds in GL(4,2)", lp_table},
      {"sharply transitive fixtures", sharp_fixtures},
      {"A7 code in GL(4,2)", a7_code},
      {"fixed-space weights", rudvalis_shinoda},
      {"Al-Salam-Carlitz identities", asc_suite},
      {"decomposition of U_k(theta)", asc_decomposition},
      {"route agreement for designs and cliques", route_agreement},
      {"recursive construction", recursive_construction},
      {"MRD invertible subcodes", mrd},
      {"structural invariants", structure},
      {"LP bounds in GL(5,2) (stretch)", lp_table_gl52},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.failures.empty() ? "PASS" : "FAIL") << ' ';
    if (index <= 10) line << index;
    else line << "extra";
    line << ": " << name << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "    " << c.failures[i] << '\n';
    failed += !c.failures.empty();
  }
  const int total = static_cast<int>(std::size(criteria));
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (total - failed) << "/" << total << std::endl;
  return failed ? 1 : 0;
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

#include "glnq/asc.hpp"
#include "glnq/chartable.hpp"
#include "glnq/class_table.hpp"
#include "glnq/constructions.hpp"
#include "glnq/cyclotomic.hpp"
#include "glnq/distributions.hpp"
#include "glnq/enumerate.hpp"
#include "glnq/lp.hpp"
#include "glnq/qanalog.hpp"
#include "glnq/spectra.hpp"

using namespace glnq;

namespace {

using Poly = std::vector<long long>;  // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by the monic polynomial m over Z.
Poly rem(Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const long long c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= c * m[i];
    trim(a);
  }
  return a;
}

Poly exact_div(Poly a, const Poly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  Poly quotient(a.size() >= m.size() ? a.size() - dm : 0, 0);
  while (a.size() > dm) {
    const long long c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    quotient[shift] = c;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= c * m[i];
    trim(a);
  }
  return quotient;
}

// Cyclotomic polynomial by dividing x^e - 1 by the smaller ones.
Poly cyclotomic_poly(unsigned e) {
  Poly p(e + 1, 0);
  p[0] = -1;
  p[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d == 0) p = exact_div(p, cyclotomic_poly(d));
  }
  return p;
}

Poly as_poly(const SparseCyclo& a, unsigned e) {
  Poly p(e, 0);
  for (const auto& t : a) p[t.exp % e] += t.mult;
  return p;
}

std::complex<double> numeric(const SparseCyclo& a, unsigned e) {
  std::complex<double> z = 0;
  for (const auto& t : a) z += static_cast<double>(t.mult) * std::polar(1.0, 2 * std::numbers::pi * t.exp / e);
  return z;
}

SparseCyclo random_cyclo(unsigned e, std::mt19937_64& rng) {
  std::map<std::uint32_t, std::int64_t> m;
  const int terms = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i) m[static_cast<std::uint32_t>(rng() % e)] += static_cast<std::int64_t>(rng() % 7) - 3;
  SparseCyclo out;
  for (auto [x, c] : m) {
    if (c) out.push_back({x, c});
  }
  return out;
}

CycloAccumulator reduced(const SparseCyclo& a, unsigned e) {
  CycloAccumulator acc(e);
  acc.add(a, 1);
  acc.reduce();
  return acc;
}

std::vector<Rational> rationals(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

CharacterTable table_for(unsigned n, unsigned q) { return character_table(field_of_order(q), n); }

// Values indexed by the labels of GL(2,2) classes in table order.
std::vector<Rational> by_label(const ClassFunction& f, const ClassTable& t, std::initializer_list<const char*> labels) {
  std::vector<Rational> out;
  for (const char* l : labels) out.push_back(f.values[t.index_of(parse_lambda_map(t.field(), l))]);
  return out;
}

}  // namespace

TEST_CASE("cyclotomic normal form agrees with reduction modulo the cyclotomic polynomial") {
  std::mt19937_64 rng(101);
  for (unsigned e : {1u, 2u, 3u, 4u, 6u, 8u, 9u, 12u, 15u, 20u, 30u, 36u, 60u, 105u}) {
    CAPTURE(e);
    const Poly phi = cyclotomic_poly(e);
    for (int rep = 0; rep < 60; ++rep) {
      const SparseCyclo a = random_cyclo(e, rng);
      SparseCyclo b = rep % 2 ? random_cyclo(e, rng) : a;
      if (rep % 2 == 0) {
        // Add a vanishing sum: a full coset of a prime-order subgroup.
        for (unsigned p = 2; p <= e; ++p) {
          if (e % p) continue;
          bool prime = true;
          for (unsigned d = 2; d * d <= p; ++d) prime = prime && p % d;
          if (!prime) continue;
          const std::uint32_t shift = static_cast<std::uint32_t>(rng() % e);
          for (unsigned i = 0; i < p; ++i) b.push_back({(shift + i * (e / p)) % e, 2});
          break;
        }
        std::map<std::uint32_t, std::int64_t> merged;
        for (auto t : b) merged[t.exp] += t.mult;
        b.clear();
        for (auto [x, c] : merged) {
          if (c) b.push_back({x, c});
        }
      }
      const bool equal_oracle = rem(as_poly(a, e), phi) == rem(as_poly(b, e), phi);
      CHECK((reduced(a, e).coefficients() == reduced(b, e).coefficients()) == equal_oracle);
      const bool zero_oracle = rem(as_poly(a, e), phi).empty();
      CHECK(reduced(a, e).is_zero() == zero_oracle);
    }
  }
  // zeta_5 + ... + zeta_5^4 = -1.
  CHECK(reduced({{1, 1}, {2, 1}, {3, 1}, {4, 1}}, 5).as_integer() == std::optional<Wide>(-1));
  CHECK(!reduced({{1, 1}}, 5).as_integer().has_value());
  CHECK(reduced(cyclo_integer(7), 12).as_integer() == std::optional<Wide>(7));

  const SparseCyclo x{{1, 2}, {5, -3}};
  CHECK(parse_cyclo(to_string(x)) == x);
  CHECK(to_string(SparseCyclo{}) == "0");
  CHECK(cyclo_conj(x, 12) == SparseCyclo{{7, -3}, {11, 2}});
}

TEST_CASE("real and imaginary enclosures") {
  std::mt19937_64 rng(103);
  const Rational tiny = Rational(1) / Rational(BigInt(1) << 128);
  for (unsigned e : {3u, 7u, 15u, 24u, 420u}) {
    for (int rep = 0; rep < 20; ++rep) {
      const SparseCyclo a = random_cyclo(e, rng);
      const std::complex<double> z = numeric(a, e);
      const RationalInterval re = real_part(a, e), im = imag_part(a, e);
      CHECK(re.width() <= tiny);
      CHECK(im.width() <= tiny);
      CHECK(std::abs(re.lo.convert_to<double>() - z.real()) < 1e-9);
      CHECK(std::abs(im.lo.convert_to<double>() - z.imag()) < 1e-9);
    }
  }
  const RationalInterval one = real_part(cyclo_integer(1), 7);
  CHECK(one.contains(1));
}

TEST_CASE("class functions") {
  const Field& f2 = field_of_order(2);
  const ClassTable& t = class_table(f2, 2);
  const ClassFunction theta = theta_function(f2, 2);
  CHECK(theta.values[t.identity_index()] == 4);
  CHECK(by_label(theta, t, {"11:1,1", "11:2", "111:1"}) == rationals({4, 2, 1}));
  CHECK(by_label(xi_function(f2, 2, 1), t, {"11:1,1", "11:2", "111:1"}) == rationals({3, 1, 0}));
  CHECK(by_label(u_theta(f2, 2, 1), t, {"11:1,1", "11:2", "111:1"}) == rationals({2, 0, -1}));
  CHECK(u_theta(f2, 2, 0).values == rationals({1, 1, 1}));
  CHECK_THROWS_AS(xi_function(f2, 2, 3), Error);
  CHECK_THROWS_AS(u_theta(f2, 2, 3), Error);

  const ClassFunction one = constant_function(f2, 2, 1);
  CHECK(class_inner_product(one, one) == 1);
  CHECK_THROWS_AS(class_inner_product(one, constant_function(f2, 3, 1)), Error);

  for (auto [n, q] : {std::pair{4u, 2u}, std::pair{4u, 3u}, std::pair{5u, 2u}, std::pair{3u, 3u}}) {
    CAPTURE(n);
    CAPTURE(q);
    const Field& f = field_of_order(q);
    const ClassFunction th = theta_function(f, n);
    const ClassFunction unit = constant_function(f, n, 1);
    std::vector<ClassFunction> u, xi;
    for (unsigned k = 0; k <= n; ++k) {
      u.push_back(u_theta(f, n, k));
      xi.push_back(xi_function(f, n, k));
    }
    for (unsigned k = 0; k <= n; ++k) {
      // Two routes to U_k(theta).
      for (std::size_t c = 0; c < th.values.size(); ++c) {
        CHECK(u[k].values[c] == Rational(asc_eval(k, q, BigInt(numerator(th.values[c])))));
        CHECK(xi[k].values[c] >= 0);
      }
      CHECK(class_inner_product(xi[k], unit) == 1);
      // xi_j = sum_k [j k]_q U_k(theta).
      ClassFunction sum = constant_function(f, n, 0);
      for (unsigned i = 0; i <= k; ++i) {
        for (std::size_t c = 0; c < sum.values.size(); ++c) sum.values[c] += Rational(q_binomial(k, i, q)) * u[i].values[c];
      }
      CHECK(sum.values == xi[k].values);
    }
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned l = 0; k + l <= n; ++l) {
        const Rational ip = class_inner_product(u[k], u[l]);
        CHECK(ip == (k == l ? Rational(gl_order(k, q)) : Rational(0)));
      }
      if (2 * k <= n) {
        BigInt expect = 0;
        for (unsigned i = 0; i <= k; ++i) expect += q_binomial(k, i, q) * q_binomial(k, i, q) * gl_order(i, q);
        CHECK(class_inner_product(xi[k], xi[k]) == Rational(expect));
      }
    }
  }
}

TEST_CASE("character tables of small groups") {
  // GL(2,2) is the symmetric group on three letters.
  const Field& f2 = field_of_order(2);
  const ClassTable& t22 = class_table(f2, 2);
  const CharacterTable c22 = table_for(2, 2);
  CHECK(c22.degrees == std::vector<std::uint64_t>{1, 1, 2});
  const std::size_t id = t22.identity_index();
  const std::size_t inv = t22.index_of(parse_lambda_map(f2, "11:2"));
  const std::size_t three = t22.index_of(parse_lambda_map(f2, "111:1"));
  auto value = [&](std::size_t row, std::size_t col) { return reduced(c22.rows[row][col], c22.exponent).as_integer(); };
  std::multiset<std::tuple<Wide, Wide, Wide>> got;
  for (std::size_t r = 0; r < 3; ++r) got.insert({*value(r, id), *value(r, inv), *value(r, three)});
  CHECK(got == std::multiset<std::tuple<Wide, Wide, Wide>>{{1, 1, 1}, {1, -1, 1}, {2, 0, -1}});

  for (auto [n, q] : {std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{2u, 5u},
                      std::pair{3u, 3u}, std::pair{4u, 2u}}) {
    CAPTURE(n);
    CAPTURE(q);
    const ClassTable& ct = class_table(field_of_order(q), n);
    const CharacterTable tab = table_for(n, q);
    CHECK(tab.size() == ct.size());
    CHECK_NOTHROW(require_matching(tab, ct));
    BigInt sq = 0;
    for (auto d : tab.degrees) sq += BigInt(d) * d;
    CHECK(sq == ct.group_order());
    CHECK(rows_orthonormal(tab));
    CHECK(std::is_sorted(tab.degrees.begin(), tab.degrees.end()));
    CHECK(tab.degrees.front() == 1);
    CHECK(tab.prime % tab.exponent == 1);

    // Column orthogonality in floating point: sum_chi chi(g) conj(chi(h)) = delta |C(g)|.
    double worst = 0;
    for (std::size_t g = 0; g < ct.size(); ++g) {
      for (std::size_t h = 0; h < ct.size(); ++h) {
        std::complex<double> s = 0;
        for (std::size_t r = 0; r < tab.size(); ++r) {
          s += numeric(tab.rows[r][g], tab.exponent) * std::conj(numeric(tab.rows[r][h], tab.exponent));
        }
        const double expect = g == h ? (ct.group_order() / ct.class_size(g)).convert_to<double>() : 0.0;
        worst = std::max(worst, std::abs(s - expect));
      }
      // First column holds the degrees.
      for (std::size_t r = 0; r < tab.size(); ++r) {
        if (g == ct.identity_index()) CHECK(reduced(tab.rows[r][g], tab.exponent).as_integer() == std::optional<Wide>(tab.degrees[r]));
      }
    }
    CHECK(worst < 1e-6);
  }
  CHECK_THROWS_AS(require_matching(table_for(2, 2), class_table(field_of_order(3), 2)), Error);
}

TEST_CASE("character table cache") {
  const CharacterTable c32 = table_for(3, 2);
  std::stringstream ss;
  write_character_table(ss, c32);
  const CharacterTable back = read_character_table(ss);
  CHECK(back.rows == c32.rows);
  CHECK(back.degrees == c32.degrees);
  CHECK(back.class_sizes == c32.class_sizes);
  CHECK(back.labels == c32.labels);
  CHECK(back.prime == c32.prime);

  std::stringstream bad("chartab 3 2 6 42 43\nversion 9\n");
  CHECK_THROWS_AS(read_character_table(bad), Error);

  const auto dir = std::filesystem::temp_directory_path() / "glnq-empty-cache-test";
  std::filesystem::remove_all(dir);
  CharTableOptions opts;
  opts.cache_dir = dir.string();
  opts.allow_compute = false;
  CHECK_THROWS_AS(character_table(field_of_order(2), 3, opts), Error);
  opts.allow_compute = true;
  const CharacterTable fresh = character_table(field_of_order(2), 3, opts);
  CHECK(std::filesystem::exists(cache_path(dir.string(), 3, 2)));
  CHECK(fresh.rows == c32.rows);
  opts.allow_compute = false;
  CHECK(character_table(field_of_order(2), 3, opts).rows == c32.rows);
  std::filesystem::remove_all(dir);

  CHECK(dixon_prime(420, gl_order(4, 2)) == 421);
  CHECK(dixon_prime(6, 6) == 7);
}

TEST_CASE("decomposition of U_k(theta)") {
  const Field& f2 = field_of_order(2);
  for (unsigned k = 0; k <= 2; ++k) {
    CAPTURE(k);
    const AscDecompositionReport r = verify_asc_decomposition(f2, 4, k);
    CHECK(r.ok);
    CHECK(r.xi_ok);
  }
  const AscDecompositionReport r2 = verify_asc_decomposition(f2, 4, 2);
  CHECK(r2.expected == std::vector<std::uint64_t>{1, 1, 2});
  const AscDecompositionReport r0 = verify_asc_decomposition(f2, 4, 0);
  std::size_t nonzero = 0;
  for (const auto& m : r0.multiplicities) nonzero += m != 0;
  CHECK(nonzero == 1);
  CHECK(verify_asc_decomposition(field_of_order(3), 2, 1).ok);
  CHECK(verify_asc_decomposition(f2, 3, 1).ok);
  CHECK_THROWS_AS(verify_asc_decomposition(f2, 4, 3), Error);
}

TEST_CASE("dual distributions") {
  const Field& f2 = field_of_order(2);
  for (unsigned n : {2u, 3u}) {
    const CharacterTable tab = table_for(n, 2);
    const auto gl = enumerate_gl(f2, n);
    const auto full = dual_distribution(gl, tab);
    for (std::size_t r = 0; r < tab.size(); ++r) {
      REQUIRE(full[r].exact.has_value());
      bool trivial = true;
      for (const auto& v : tab.rows[r]) trivial = trivial && v == cyclo_integer(1);
      CHECK(*full[r].exact == (trivial ? Rational(gl_order(n, 2)) : Rational(0)));
    }
    const auto one = dual_distribution({Matrix::identity(f2, n)}, tab);
    for (std::size_t r = 0; r < tab.size(); ++r) CHECK(*one[r].exact == Rational(tab.degrees[r] * tab.degrees[r]));
  }
  // Nonnegativity on assorted sets; the entry sum is |G| times a_identity.
  std::mt19937_64 rng(107);
  const CharacterTable t3 = table_for(3, 2);
  const auto gl3 = enumerate_gl(f2, 3);
  std::vector<std::vector<Matrix>> sets{singer_cycle(f2, 3), gamma_l1(f2, 3)};
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Matrix> ys = gl3;
    std::shuffle(ys.begin(), ys.end(), rng);
    ys.resize(1 + rng() % 30);
    sets.push_back(ys);
  }
  for (const auto& ys : sets) {
    Rational sum = 0;
    for (const auto& e : dual_distribution(ys, t3)) {
      CHECK(e.real);
      CHECK(e.enclosure.hi >= 0);
      sum += e.enclosure.lo;
    }
    CHECK(abs(sum - Rational(gl_order(3, 2))) < Rational(1, 1000000));
  }
  const auto singer2 = dual_distribution(singer_cycle(f2, 2), table_for(2, 2));
  std::size_t zeros = 0;
  for (const auto& e : singer2) {
    CHECK(e.enclosure.hi >= 0);
    zeros += e.exact && *e.exact == 0;
  }
  CHECK(zeros == 1);
}

TEST_CASE("exact simplex") {
  // max x + y, x + 2y <= 4, 3x + y <= 6 -> (8/5, 6/5), value 14/5.
  const LpSolution s = maximize({{1, 2}, {3, 1}}, {4, 6}, {1, 1});
  CHECK(s.value == Rational(14, 5));
  CHECK(s.x == std::vector<Rational>{Rational(8, 5), Rational(6, 5)});

  // Brute force over vertices of random two-variable programs.
  std::mt19937_64 rng(109);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i = 0; i < 4; ++i) {
      a.push_back({Rational(static_cast<int>(rng() % 5) + 1), Rational(static_cast<int>(rng() % 5) + 1)});
      b.push_back(Rational(static_cast<int>(rng() % 10) + 1));
    }
    const std::vector<Rational> c{Rational(static_cast<int>(rng() % 4)), Rational(static_cast<int>(rng() % 4))};
    // Candidate vertices: intersections of pairs of the lines, including axes.
    std::vector<std::vector<Rational>> lines = a;
    std::vector<Rational> rhs = b;
    lines.push_back({1, 0});
    rhs.push_back(0);
    lines.push_back({0, 1});
    rhs.push_back(0);
    Rational best = -1;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const Rational det = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0];
        if (det == 0) continue;
        const Rational x = (rhs[i] * lines[j][1] - lines[i][1] * rhs[j]) / det;
        const Rational y = (lines[i][0] * rhs[j] - rhs[i] * lines[j][0]) / det;
        bool ok = x >= 0 && y >= 0;
        for (std::size_t k = 0; k < a.size() && ok; ++k) ok = a[k][0] * x + a[k][1] * y <= b[k];
        if (ok) best = std::max(best, Rational(c[0] * x + c[1] * y));
      }
    }
    CHECK(maximize(a, b, c).value == best);
  }
  CHECK_THROWS_AS(maximize({{1, -1}}, {1}, {1, 1}), Error);
  CHECK_THROWS_AS(maximize({{1}}, {-1}, {1}), Error);
}

TEST_CASE("linear programming clique bounds") {
  const Field& f2 = field_of_order(2);
  const struct {
    Partition sigma, tau;
    int lp;
  } rows[] = {{{2, 1, 1}, {}, 420}, {{1, 1}, {2}, 84}, {{2}, {2}, 168}};
  for (const auto& row : rows) {
    const LpBound b = lp_clique_bound(f2, 4, row.sigma, row.tau);
    CHECK(b.value.lo <= row.lp);
    CHECK(b.value.hi >= row.lp);
    CHECK(b.value.width() < Rational(1, 1000000));
    CHECK(b.value.hi <= Rational(clique_design_bounds(row.sigma, row.tau, 4, 2).first));
  }

  // The LP bounds every clique at small scale: the Singer cycle and
  // semilinear group in GL(3,2), and the A7 code in GL(4,2).
  const ClassTable& t3 = class_table(f2, 3);
  const CharacterTable c3 = table_for(3, 2);
  const auto singer = singer_cycle(f2, 3);
  const auto gamma = gamma_l1(f2, 3);
  for (const PairType& type : {PairType{Partition{1, 1, 1}, Partition{}}, PairType{Partition{1}, Partition{2}},
                               PairType{Partition{2, 1}, Partition{}}, PairType{Partition{3}, Partition{}}}) {
    const LpBound b = lp_clique_bound(t3, c3, type);
    CHECK(b.value.hi <= Rational(clique_design_bounds(type.first, type.second, 3, 2).first));
    for (const auto& ys : {singer, gamma}) {
      if (is_clique(ys, type.first, type.second)) CHECK(Rational(static_cast<long>(ys.size())) <= b.value.hi);
    }
  }
  const LpBound code = lp_clique_bound(f2, 4, Partition{3, 1}, Partition{});
  CHECK(code.value.hi >= 2520);
  CHECK_THROWS_AS(lp_clique_bound(f2, 4, Partition{3}, Partition{1}), Error);
}

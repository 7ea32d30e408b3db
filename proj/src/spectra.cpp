#include "glnq/spectra.hpp"

#include <algorithm>
#include <numeric>

#include "glnq/distributions.hpp"
#include "glnq/flags.hpp"
#include "glnq/kernels.hpp"
#include "glnq/lp.hpp"
#include "glnq/qanalog.hpp"

namespace glnq {

namespace {

void require_same_key(const ClassFunction& a, const ClassFunction& b) {
  if (a.n != b.n || a.q != b.q || a.values.size() != b.values.size()) {
    throw Error(ErrorCode::KeyMismatch, "class functions belong to different groups");
  }
}

ClassFunction blank(const Field& field, unsigned n) {
  const ClassTable& table = class_table(field, n);
  return ClassFunction{n, field.q(), std::vector<Rational>(table.size())};
}

std::vector<std::uint64_t> gl_degrees(const Field& field, unsigned k, const CharTableOptions& options) {
  if (k == 0) return {1};
  auto degrees = character_table(field, k, options).degrees;
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

ClassFunction constant_function(const Field& field, unsigned n, const Rational& value) {
  ClassFunction f = blank(field, n);
  std::fill(f.values.begin(), f.values.end(), value);
  return f;
}

ClassFunction theta_function(const Field& field, unsigned n) {
  const ClassTable& table = class_table(field, n);
  ClassFunction f = blank(field, n);
  const Matrix id = Matrix::identity(field, n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    f.values[i] = Rational(big_pow(field.q(), n - mat_rank(mat_sub(table.representative(i), id))));
  }
  return f;
}

ClassFunction xi_function(const Field& field, unsigned n, unsigned j) {
  if (j > n) throw Error(ErrorCode::OutOfRange, "xi_j needs j <= n");
  const ClassFunction theta = theta_function(field, n);
  ClassFunction f = constant_function(field, n, Rational(1));
  for (unsigned i = 0; i < j; ++i) {
    const Rational qi(big_pow(field.q(), i));
    for (std::size_t c = 0; c < f.values.size(); ++c) f.values[c] *= theta.values[c] - qi;
  }
  return f;
}

ClassFunction u_theta(const Field& field, unsigned n, unsigned k) {
  if (k > n) throw Error(ErrorCode::OutOfRange, "U_k(theta) needs k <= n");
  const unsigned q = field.q();
  ClassFunction f = constant_function(field, n, Rational(0));
  for (unsigned j = 0; j <= k; ++j) {
    const unsigned gap = k - j;
    BigInt coef = big_pow(q, gap * (gap == 0 ? 0 : gap - 1) / 2) * q_binomial(k, j, q);
    if (gap % 2) coef = -coef;
    const ClassFunction xi = xi_function(field, n, j);
    for (std::size_t c = 0; c < f.values.size(); ++c) f.values[c] += Rational(coef) * xi.values[c];
  }
  return f;
}

Rational class_inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  require_same_key(phi, psi);
  const ClassTable& table = class_table(field_of_order(phi.q), phi.n);
  Rational sum = 0;
  for (std::size_t c = 0; c < phi.values.size(); ++c) {
    sum += Rational(table.class_size(c)) * phi.values[c] * psi.values[c];
  }
  return sum / Rational(table.group_order());
}

Rational character_inner_product(const ClassFunction& phi, const CharacterTable& table, std::size_t row) {
  if (phi.n != table.n || phi.q != table.q || phi.values.size() != table.class_sizes.size()) {
    throw Error(ErrorCode::KeyMismatch, "class function and character table belong to different groups");
  }
  // Clear denominators so the sum runs over integers.
  BigInt common = 1;
  for (const auto& v : phi.values) common = boost::multiprecision::lcm(common, denominator(v));
  CycloAccumulator acc(table.exponent);
  for (std::size_t c = 0; c < phi.values.size(); ++c) {
    const BigInt scaled = numerator(phi.values[c] * Rational(common)) * table.class_sizes[c];
    // Conjugating phi (real) times chi equals phi times conj(chi).
    acc.add(cyclo_conj(table.rows[row][c], table.exponent), static_cast<Wide>(static_cast<std::int64_t>(scaled)));
  }
  acc.reduce();
  const auto value = acc.as_integer();
  if (!value) throw Error(ErrorCode::SizeMismatch, "inner product is not rational");
  const BigInt v(wide_to_string(*value));
  return Rational(v) / Rational(table.group_order * common);
}

AscDecompositionReport verify_asc_decomposition(const Field& field, unsigned n, unsigned k,
                                                const CharTableOptions& options) {
  if (2 * k > n) throw Error(ErrorCode::OutOfRange, "the decomposition needs 2k <= n");
  const CharacterTable table = character_table(field, n, options);
  require_matching(table, class_table(field, n));
  const unsigned q = field.q();
  AscDecompositionReport report;
  std::vector<std::vector<Rational>> mult(k + 1);
  bool multisets = true;
  for (unsigned i = 0; i <= k; ++i) {
    const ClassFunction u = u_theta(field, n, i);
    std::vector<std::uint64_t> found;
    for (std::size_t r = 0; r < table.size(); ++r) {
      const Rational m = character_inner_product(u, table, r);
      mult[i].push_back(m);
      if (m == 0) continue;
      if (m < 0 || denominator(m) != 1) {
        multisets = false;
        report.detail += "U_" + std::to_string(i) + " has multiplicity " + m.str() + "; ";
        continue;
      }
      found.push_back(static_cast<std::uint64_t>(numerator(m)));
    }
    std::sort(found.begin(), found.end());
    const auto expected = gl_degrees(field, i, options);
    if (found != expected) {
      multisets = false;
      report.detail += "U_" + std::to_string(i) + " multiplicities differ from GL(" + std::to_string(i) + ") degrees; ";
    }
    if (i == k) report.expected = expected;
  }
  report.multiplicities = mult[k];
  bool disjoint = true;
  for (std::size_t r = 0; r < table.size(); ++r) {
    unsigned hits = 0;
    for (unsigned i = 0; i <= k; ++i) hits += mult[i][r] != 0;
    disjoint = disjoint && hits <= 1;
  }
  if (!disjoint) report.detail += "supports of U_0..U_k overlap; ";
  const ClassFunction xi = xi_function(field, n, k);
  report.xi_ok = true;
  for (std::size_t r = 0; r < table.size(); ++r) {
    Rational predicted = 0;
    for (unsigned i = 0; i <= k; ++i) predicted += Rational(q_binomial(k, i, q)) * mult[i][r];
    if (character_inner_product(xi, table, r) != predicted) report.xi_ok = false;
  }
  if (!report.xi_ok) report.detail += "xi_k decomposition mismatch; ";
  report.ok = multisets && disjoint && report.xi_ok;
  return report;
}

std::vector<DualEntry> dual_distribution(const std::vector<Matrix>& ys, const CharacterTable& table) {
  const auto [n, field] = check_subset(ys);
  const ClassTable& classes = class_table(*field, n);
  require_matching(table, classes);
  const Tally tally = kernels::quotient_class_tally(classes, ys);
  const Rational size(BigInt(ys.size()));
  std::vector<DualEntry> out;
  CycloAccumulator acc(table.exponent);
  for (std::size_t r = 0; r < table.size(); ++r) {
    acc.clear();
    SparseCyclo sum;
    for (std::size_t t = 0; t < tally.size(); ++t) {
      if (!tally[t]) continue;
      acc.add(table.rows[r][t], static_cast<Wide>(tally[t]));
      for (const CycloTerm& term : table.rows[r][t]) {
        sum.push_back({term.exp, term.mult * static_cast<std::int64_t>(tally[t])});
      }
    }
    const Rational factor = Rational(BigInt(table.degrees[r])) / size;
    DualEntry entry;
    const auto re = real_part(sum, table.exponent);
    const auto im = imag_part(sum, table.exponent);
    entry.enclosure = {re.lo * factor, re.hi * factor};
    entry.real = im.contains(Rational(0));
    acc.reduce();
    if (const auto exact = acc.as_integer()) {
      entry.exact = Rational(BigInt(wide_to_string(*exact))) * factor;
      entry.enclosure = {*entry.exact, *entry.exact};
      entry.real = true;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

LpBound lp_clique_bound(const ClassTable& classes, const CharacterTable& table, const PairType& type) {
  require_matching(table, classes);
  const std::vector<bool> forbidden = clique_forbidden_classes(classes, type);
  const std::size_t id = classes.identity_index();
  LpBound bound;
  std::vector<bool> seen(classes.size(), false);
  for (std::size_t t = 0; t < classes.size(); ++t) {
    if (t == id || forbidden[t] || seen[t]) continue;
    std::vector<std::size_t> orbit{t};
    const std::size_t inv = classes.inverse_index(t);
    seen[t] = true;
    if (inv != t) {
      if (forbidden[inv]) throw Error(ErrorCode::InvalidType, "zero pattern is not closed under inversion");
      orbit.push_back(inv);
      seen[inv] = true;
    }
    bound.orbits.push_back(orbit);
  }
  const std::size_t vars = bound.orbits.size();
  std::vector<Rational> objective;
  for (const auto& o : bound.orbits) objective.emplace_back(BigInt(o.size()));
  // Row r: -sum_o Re(sum_{t in o} chi_t) b_o <= chi(1).
  std::vector<std::vector<Rational>> lower(table.size(), std::vector<Rational>(vars));
  std::vector<std::vector<Rational>> upper = lower;
  std::vector<Rational> rhs;
  CycloAccumulator acc(table.exponent);
  for (std::size_t r = 0; r < table.size(); ++r) {
    rhs.emplace_back(BigInt(table.degrees[r]));
    for (std::size_t v = 0; v < vars; ++v) {
      SparseCyclo sum;
      acc.clear();
      for (std::size_t t : bound.orbits[v]) {
        sum.insert(sum.end(), table.rows[r][t].begin(), table.rows[r][t].end());
        // 2 Re(chi) = chi + conj(chi).
        acc.add(table.rows[r][t], 1);
        acc.add(cyclo_conj(table.rows[r][t], table.exponent), 1);
      }
      acc.reduce();
      if (const auto twice = acc.as_integer()) {
        const Rational exact = Rational(BigInt(wide_to_string(*twice))) / 2;
        lower[r][v] = upper[r][v] = -exact;
      } else {
        const RationalInterval re = real_part(sum, table.exponent);
        // Negated coefficients: the restricted program uses the upper end.
        lower[r][v] = -re.lo;
        upper[r][v] = -re.hi;
      }
    }
  }
  // Coefficients -lo >= -Re: the constraint is harder, so that optimum is a lower bound.
  const LpSolution low = maximize(lower, rhs, objective);
  const LpSolution high = maximize(upper, rhs, objective);
  bound.value = {low.value + 1, high.value + 1};
  bound.weights = low.x;
  bound.pivots = low.pivots + high.pivots;
  return bound;
}

LpBound lp_clique_bound(const Field& field, unsigned n, const Partition& sigma, const Partition& tau,
                        const CharTableOptions& options) {
  const PairType type{sigma, tau};
  if (!is_valid_type(type, n, field.q())) throw Error(ErrorCode::InvalidType, "(sigma,tau) is not a valid type");
  const ClassTable& classes = class_table(field, n);
  CharTableOptions opts = options;
  const CharacterTable table = character_table(field, n, opts);
  return lp_clique_bound(classes, table, type);
}

}  // namespace glnq

#include "glnq/distributions.hpp"

#include <unordered_map>

#include "glnq/asc.hpp"
#include "glnq/flags.hpp"
#include "glnq/kernels.hpp"
#include "glnq/qanalog.hpp"

namespace glnq {

std::pair<unsigned, const Field*> check_subset(const std::vector<Matrix>& ys) {
  if (ys.empty()) throw Error(ErrorCode::EmptySet, "subset is empty");
  const unsigned n = ys.front().rows();
  const Field* f = ys.front().field_ptr();
  for (const Matrix& y : ys) {
    if (y.rows() != n || y.cols() != n || y.field_ptr() != f) {
      throw Error(ErrorCode::MixedDimensions, "subset mixes matrix shapes or fields");
    }
  }
  return {n, f};
}

InnerDistribution inner_distribution(const std::vector<Matrix>& ys) {
  const auto [n, field] = check_subset(ys);
  const ClassTable& table = class_table(*field, n);
  const Tally tally = kernels::quotient_class_tally(table, ys);
  InnerDistribution d;
  d.table = &table;
  d.subset_size = ys.size();
  for (std::uint64_t c : tally) d.values.emplace_back(BigInt(c), d.subset_size);
  return d;
}

DistanceDistribution with_dual(std::vector<Rational> a, unsigned n, unsigned q) {
  DistanceDistribution d;
  d.A = std::move(a);
  for (unsigned k = 0; k <= n; ++k) {
    Rational s = 0;
    for (unsigned i = 0; i <= n; ++i) s += Rational(asc_eval(k, q, big_pow(q, n - i))) * d.A[i];
    d.Aprime.push_back(s);
  }
  return d;
}

DistanceDistribution distance_distribution(const std::vector<Matrix>& ys) {
  const auto [n, field] = check_subset(ys);
  const Tally tally = kernels::rank_distance_tally(ys);
  std::vector<Rational> a;
  for (std::uint64_t c : tally) a.emplace_back(BigInt(c), BigInt(ys.size()));
  return with_dual(std::move(a), n, field->q());
}

bool is_t_design(const std::vector<Matrix>& ys, unsigned t) {
  const auto [n, field] = check_subset(ys);
  if (t < 1 || t > n) throw Error(ErrorCode::OutOfRange, "design strength must satisfy 1 <= t <= n");
  if (2 * t <= n) {
    const DistanceDistribution d = distance_distribution(ys);
    for (unsigned k = 1; k <= t; ++k) {
      if (d.Aprime[k] != 0) return false;
    }
    return true;
  }
  const PairType type{Partition{t}, n > t ? Partition{n - t} : Partition()};
  return transitivity_constant(ys, canonical_spec(normalize_type(type, field->q()))).has_value();
}

bool is_d_code(const std::vector<Matrix>& ys, unsigned d) {
  const auto [n, field] = check_subset(ys);
  if (d < 1 || d > n) throw Error(ErrorCode::OutOfRange, "code distance must satisfy 1 <= d <= n");
  const Tally tally = kernels::rank_distance_tally(ys);
  if (tally[0] != ys.size()) return false;  // repeated elements
  for (unsigned i = 1; i < d; ++i) {
    if (tally[i] != 0) return false;
  }
  return true;
}

std::vector<bool> clique_forbidden_classes(const ClassTable& table, const PairType& type) {
  const PairType reversed{type.second, type.first};
  const PairType top{Partition(), Partition{table.n()}};
  std::vector<bool> forbidden(table.size(), false);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const PairType t = type_of_lambda(table.field(), conjugate_lambda(table.label(i)));
    forbidden[i] = pair_precedes(reversed, t) && pair_strictly_precedes(t, top);
  }
  return forbidden;
}

namespace {

PairType checked_type(const Partition& sigma, const Partition& tau, unsigned n, unsigned q) {
  const PairType type{sigma, tau};
  if (!is_valid_type(type, n, q)) {
    throw Error(ErrorCode::InvalidType, to_string(type) + " is not a flag type for n=" + std::to_string(n));
  }
  return type;
}

}  // namespace

bool is_clique(const std::vector<Matrix>& ys, const Partition& sigma, const Partition& tau) {
  const auto [n, field] = check_subset(ys);
  const PairType type = checked_type(sigma, tau, n, field->q());
  const InnerDistribution d = inner_distribution(ys);
  const std::vector<bool> forbidden = clique_forbidden_classes(*d.table, type);
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    if (forbidden[i] && d.values[i] != 0) return false;
  }
  return true;
}

bool is_clique_by_flags(const std::vector<Matrix>& ys, const Partition& sigma, const Partition& tau) {
  const auto [n, field] = check_subset(ys);
  const PairType type = checked_type(sigma, tau, n, field->q());
  std::unordered_map<Matrix, bool, MatrixHash> seen;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const Matrix xi = mat_inverse(ys[i]);
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (i == j) continue;
      const Matrix quotient = mat_mul(xi, ys[j]);
      auto it = seen.find(quotient);
      if (it == seen.end()) it = seen.emplace(quotient, fixes_some_flag(quotient, type)).first;
      if (it->second) return false;
    }
  }
  return true;
}

std::pair<BigInt, BigInt> clique_design_bounds(const Partition& sigma, const Partition& tau, unsigned n,
                                               unsigned q) {
  const BigInt index = flag_count(sigma, tau, n, q);
  return {index, index};
}

DistanceDistribution predicted_distance_distribution(unsigned n, unsigned q, const BigInt& size, unsigned t) {
  if (t < 1 || t > n) throw Error(ErrorCode::OutOfRange, "design strength must satisfy 1 <= t <= n");
  std::vector<Rational> a(n + 1, Rational(0));
  a[0] = 1;
  for (unsigned i = 0; i < n; ++i) {
    Rational s = 0;
    for (unsigned j = i; j <= t; ++j) {
      const unsigned d = j - i;
      Rational term = Rational(big_pow(q, d == 0 ? 0 : d * (d - 1) / 2) * q_binomial(j, i, q) * q_binomial(n, j, q)) *
                      (Rational(size, independent_tuples(n, j, q)) - 1);
      s += d % 2 ? -term : term;
    }
    a[n - i] = s;
  }
  return with_dual(std::move(a), n, q);
}

std::vector<BigInt> w_vector(unsigned n, unsigned q) {
  std::vector<BigInt> w;
  const BigInt order = gl_order(n, q);
  for (unsigned i = 0; i <= n; ++i) {
    Rational s = 0;
    for (unsigned k = 0; k <= n - i; ++k) {
      Rational term(big_pow(q, k == 0 ? 0 : k * (k - 1) / 2), big_pow(q, k * i) * gl_order(k, q));
      s += k % 2 ? -term : term;
    }
    const Rational wi = Rational(order, gl_order(i, q)) * s;
    if (denominator(wi) != 1) throw Error(ErrorCode::SizeMismatch, "w_i is not an integer");
    w.push_back(numerator(wi));
  }
  return w;
}

std::vector<BigInt> fixed_space_tally(const Field& field, unsigned n, const Budget& budget) {
  budget.check(gl_order(n, field.q()), "fixed_space_tally");
  std::vector<BigInt> out;
  for (std::uint64_t c : kernels::gl_fixed_dim_tally(field, n)) out.emplace_back(c);
  return out;
}

BigInt asc_weighted_inner(unsigned n, unsigned k, unsigned l, unsigned q) {
  const auto w = w_vector(n, q);
  BigInt sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    const BigInt x = big_pow(q, i);
    sum += w[i] * asc_eval(k, q, x) * asc_eval(l, q, x);
  }
  return sum;
}

}  // namespace glnq

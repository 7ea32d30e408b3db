#include "glnq/classes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "glnq/qanalog.hpp"

namespace glnq {

const std::vector<FqPoly>& irreducibles(const Field& field, unsigned max_degree) {
  static std::mutex mutex;
  static std::map<std::pair<const Field*, unsigned>, std::unique_ptr<std::vector<FqPoly>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{&field, max_degree}];
  if (!slot) {
    slot = std::make_unique<std::vector<FqPoly>>();
    for (unsigned d = 1; d <= max_degree; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= field.q();
      for (std::uint64_t code = 1; code < count; ++code) {
        if (code % field.q() == 0) continue;  // divisible by X
        FqPoly f = FqPoly::monic_from_code(field, d, code);
        if (is_irreducible(f)) slot->push_back(std::move(f));
      }
    }
  }
  return *slot;
}

LambdaMap::LambdaMap(std::vector<std::pair<FqPoly, Partition>> e) {
  for (auto& entry : e) {
    if (!entry.second.empty()) entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

unsigned LambdaMap::norm() const {
  unsigned s = 0;
  for (const auto& [f, lambda] : entries) s += static_cast<unsigned>(f.degree()) * lambda.size();
  return s;
}

Partition LambdaMap::at(const FqPoly& f) const {
  for (const auto& [g, lambda] : entries) {
    if (g == f) return lambda;
  }
  return Partition();
}

std::strong_ordering LambdaMap::operator<=>(const LambdaMap& o) const {
  const std::size_t common = std::min(entries.size(), o.entries.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = entries[i].first <=> o.entries[i].first; c != 0) return c;
    if (auto c = entries[i].second <=> o.entries[i].second; c != 0) return c;
  }
  return entries.size() <=> o.entries.size();
}

std::string to_string(const LambdaMap& m) {
  std::string s;
  for (const auto& [f, lambda] : m.entries) {
    if (!s.empty()) s += ';';
    s += poly_digits(f) + ':' + to_string(lambda);
  }
  return s.empty() ? "-" : s;
}

LambdaMap parse_lambda_map(const Field& field, const std::string& text) {
  std::vector<std::pair<FqPoly, Partition>> entries;
  if (text == "-") return LambdaMap();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Parse, "expected f:lambda in '" + item + "'");
    FqPoly f = parse_poly_digits(field, item.substr(0, colon));
    if (f.coeffs().empty() || f.coeffs().back() != 1 || !is_irreducible(f) || f.coeffs()[0] == 0) {
      throw Error(ErrorCode::Parse, "'" + item.substr(0, colon) + "' is not a monic irreducible other than X");
    }
    entries.emplace_back(std::move(f), parse_partition(item.substr(colon + 1)));
  }
  return LambdaMap(std::move(entries));
}

std::vector<LambdaMap> enumerate_lambda(const Field& field, unsigned n, const Budget& budget) {
  const auto& polys = irreducibles(field, n);
  std::vector<LambdaMap> out;
  std::vector<std::pair<FqPoly, Partition>> cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned left) {
    if (left == 0) {
      out.emplace_back(cur);
      budget.check(static_cast<std::uint64_t>(out.size()), "enumerate_lambda");
      return;
    }
    if (idx == polys.size()) return;
    const unsigned d = static_cast<unsigned>(polys[idx].degree());
    rec(idx + 1, left);
    for (unsigned m = 1; m * d <= left; ++m) {
      for (const Partition& p : all_partitions(m)) {
        cur.emplace_back(polys[idx], p);
        rec(idx + 1, left - m * d);
        cur.pop_back();
      }
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

Matrix jordan_block(const FqPoly& f, unsigned k) {
  const Field& field = f.field();
  const unsigned d = static_cast<unsigned>(f.degree());
  const Matrix c = companion(f);
  Matrix m(field, d * k, d * k);
  for (unsigned b = 0; b < k; ++b) {
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) m(b * d + i, b * d + j) = c(i, j);
    }
    if (b + 1 < k) {
      for (unsigned i = 0; i < d; ++i) m(b * d + i, (b + 1) * d + i) = 1;
    }
  }
  return m;
}

Matrix class_representative(const Field& field, const LambdaMap& m) {
  Matrix r(field, 0, 0);
  for (const auto& [f, lambda] : m.entries) {
    for (unsigned k : lambda.parts) r = block_diag(r, jordan_block(f, k));
  }
  return r;
}

LambdaMap jordan_type(const Matrix& g) {
  if (!is_invertible(g)) throw Error(ErrorCode::Singular, "jordan_type needs an invertible matrix");
  const Field& field = g.field();
  const unsigned n = g.rows();
  FqPoly chi = char_poly(g);
  std::vector<std::pair<FqPoly, Partition>> entries;
  for (const FqPoly& f : irreducibles(field, n)) {
    if (chi.degree() < f.degree()) break;
    unsigned mult = 0;
    while (true) {
      FqPoly quot, rem;
      poly_divmod(chi, f, quot, rem);
      if (!rem.is_zero()) break;
      chi = quot;
      ++mult;
    }
    if (mult == 0) continue;
    const unsigned d = static_cast<unsigned>(f.degree());
    if (mult == 1) {
      entries.emplace_back(f, Partition{1});
      continue;
    }
    // Column lengths of the partition from the rank sequence of f(g)^j.
    const Matrix fg = eval_at_matrix(f, g);
    Matrix power = Matrix::identity(field, n);
    unsigned prev_rank = n, covered = 0;
    std::vector<unsigned> columns;
    while (covered < mult) {
      power = mat_mul(power, fg);
      const unsigned r = mat_rank(power);
      const unsigned c = (prev_rank - r) / d;
      if (c == 0) break;
      columns.push_back(c);
      covered += c;
      prev_rank = r;
    }
    entries.emplace_back(f, conjugate(Partition(columns)));
  }
  return LambdaMap(std::move(entries));
}

PairType type_of_lambda(const Field& field, const LambdaMap& m) {
  const FqPoly x_minus_one = FqPoly::x_minus(field, 1);
  PairType t;
  std::vector<unsigned> kappa;
  for (const auto& [f, lambda] : m.entries) {
    if (f == x_minus_one) {
      t.second = lambda;
    } else {
      kappa.insert(kappa.end(), lambda.size(), static_cast<unsigned>(f.degree()));
    }
  }
  t.first = Partition(kappa);
  return t;
}

LambdaMap conjugate_lambda(const LambdaMap& m) {
  LambdaMap out = m;
  for (auto& entry : out.entries) entry.second = conjugate(entry.second);
  return out;
}

BigInt class_size_closed_form(const Field& field, const LambdaMap& m) {
  const unsigned n = m.norm();
  BigInt centralizer = 1;
  for (const auto& [f, lambda] : m.entries) {
    const BigInt qf = big_pow(field.q(), static_cast<unsigned>(f.degree()));
    // a_lambda(Q) = Q^{|lambda| + 2 n(lambda)} prod_i prod_{j <= m_i} (1 - Q^{-j}).
    unsigned exponent = lambda.size() + 2 * lambda.n_statistic();
    BigInt a = 1;
    for (unsigned i = 1; i <= lambda.size(); ++i) {
      const unsigned mi = lambda.multiplicity(i);
      for (unsigned j = 1; j <= mi; ++j) {
        BigInt qj = 1;
        for (unsigned t = 0; t < j; ++t) qj *= qf;
        a *= qj - 1;
        exponent -= j;
      }
    }
    for (unsigned t = 0; t < exponent; ++t) a *= qf;
    centralizer *= a;
  }
  const BigInt order = gl_order(n, field.q());
  if (order % centralizer != 0) throw Error(ErrorCode::InvalidType, "centralizer order does not divide |GL|");
  return order / centralizer;
}

BigInt theta_value(const Matrix& g) {
  const unsigned r = mat_rank(mat_sub(g, Matrix::identity(g.field(), g.rows())));
  return big_pow(g.field().q(), g.rows() - r);
}

}  // namespace glnq

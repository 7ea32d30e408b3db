#include "glnq/flags.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "glnq/enumerate.hpp"
#include "glnq/kernels.hpp"
#include "glnq/qanalog.hpp"
#include "glnq/subspace.hpp"

namespace glnq {

bool FlagSpec::is_selected(unsigned block) const {
  return std::find(selected.begin(), selected.end(), block + 1) != selected.end();
}

void validate_spec(const FlagSpec& spec, unsigned q) {
  if (spec.rho.parts.empty()) throw Error(ErrorCode::InvalidType, "flag spec needs at least one block");
  if (spec.n() > kMaxDim) throw Error(ErrorCode::OutOfRange, "flag dimension exceeds " + std::to_string(kMaxDim));
  for (unsigned p : spec.rho.parts) {
    if (p == 0) throw Error(ErrorCode::InvalidType, "flag blocks must be positive");
  }
  for (std::size_t i = 0; i < spec.selected.size(); ++i) {
    const unsigned idx = spec.selected[i];
    if (idx < 1 || idx > spec.rho.length()) throw Error(ErrorCode::InvalidType, "selected index out of range");
    if (i > 0 && spec.selected[i - 1] >= idx) throw Error(ErrorCode::InvalidType, "selected indices must increase");
  }
  if (q == 2) {
    for (unsigned i = 0; i < spec.rho.length(); ++i) {
      if (!spec.is_selected(i) && spec.rho.parts[i] == 1) {
        throw Error(ErrorCode::InvalidType, "over F_2 every unselected block must have dimension > 1");
      }
    }
  }
}

FlagSpec parse_flag_spec(const std::string& text) {
  std::stringstream ss(text);
  std::string token;
  FlagSpec spec;
  bool have_rho = false;
  while (ss >> token) {
    if (token.rfind("rho=", 0) == 0) {
      spec.rho = parse_composition(token.substr(4));
      have_rho = true;
    } else if (token.rfind("I=", 0) == 0) {
      spec.selected = parse_composition(token.substr(2)).parts;
    } else {
      throw Error(ErrorCode::Parse, "unexpected token '" + token + "' in flag spec");
    }
  }
  if (!have_rho) throw Error(ErrorCode::Parse, "flag spec needs rho=...");
  return spec;
}

std::string to_string(const FlagSpec& spec) {
  std::string s = "rho=" + to_string(spec.rho) + " I=";
  if (spec.selected.empty()) return s + "-";
  for (std::size_t i = 0; i < spec.selected.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(spec.selected[i]);
  }
  return s;
}

PairType type_of_spec(const FlagSpec& spec) {
  std::vector<unsigned> sigma, tau;
  for (unsigned i = 0; i < spec.rho.length(); ++i) {
    (spec.is_selected(i) ? sigma : tau).push_back(spec.rho.parts[i]);
  }
  return PairType{Partition(sigma), Partition(tau)};
}

FlagSpec canonical_spec(const PairType& type) {
  FlagSpec spec;
  for (unsigned p : type.first.parts) {
    spec.rho.parts.push_back(p);
    spec.selected.push_back(spec.rho.length());
  }
  for (unsigned p : type.second.parts) spec.rho.parts.push_back(p);
  return spec;
}

PairType normalize_type(const PairType& type, unsigned q) {
  if (q != 2) return type;
  std::vector<unsigned> sigma = type.first.parts, tau;
  for (unsigned p : type.second.parts) (p == 1 ? sigma : tau).push_back(p);
  return PairType{Partition(sigma), Partition(tau)};
}

bool is_valid_type(const PairType& type, unsigned n, unsigned q) {
  if (type.size() != n || n == 0) return false;
  if (q == 2 && type.second.multiplicity(1) > 0) return false;
  return true;
}

BigInt flag_stabilizer_order(const FlagSpec& spec, unsigned q) {
  const unsigned n = spec.n();
  unsigned squares = 0;
  for (unsigned p : spec.rho.parts) squares += p * p;
  BigInt order = big_pow(q, (n * n - squares) / 2);
  for (unsigned i = 0; i < spec.rho.length(); ++i) {
    if (!spec.is_selected(i)) order *= gl_order(spec.rho.parts[i], q);
  }
  return order;
}

BigInt flag_count(const Partition& sigma, const Partition& tau, unsigned n, unsigned q) {
  const PairType type{sigma, tau};
  if (!is_valid_type(type, n, q)) {
    throw Error(ErrorCode::InvalidType, to_string(type) + " is not a flag type for n=" + std::to_string(n) +
                                            ", q=" + std::to_string(q));
  }
  BigInt count = q_factorial(n, q);
  for (unsigned t : tau.parts) count /= q_factorial(t, q);
  for (unsigned s : sigma.parts) {
    for (unsigned i = 0; i < s; ++i) count *= q - 1;
    count *= big_pow(q, s * (s - 1) / 2);
  }
  const BigInt direct = gl_order(n, q) / flag_stabilizer_order(canonical_spec(type), q);
  if (count != direct) {
    throw Error(ErrorCode::InvalidType, "flag count formula disagrees with the stabilizer index");
  }
  return count;
}

std::size_t FlagHash::operator()(const Flag& f) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : f.vecs) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

namespace {

// Echelon basis of the growing space; rows kept reduced.
struct Echelon {
  const Field* field;
  unsigned n;
  unsigned rank = 0;
  Elem rows[kMaxDim][kMaxDim]{};
  unsigned pivot[kMaxDim]{};
  bool is_pivot[kMaxDim]{};

  // Clears the pivot coordinates of v.
  void reduce(Elem* v) const {
    const Field& f = *field;
    for (unsigned r = 0; r < rank; ++r) {
      const Elem c = v[pivot[r]];
      if (!c) continue;
      for (unsigned j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(c, rows[r][j]));
    }
  }

  // Inserts a vector already reduced by reduce(); returns false if zero.
  bool insert_reduced(const Elem* v) {
    const Field& f = *field;
    unsigned p = 0;
    while (p < n && v[p] == 0) ++p;
    if (p == n) return false;
    Elem w[kMaxDim];
    const Elem inv = f.inv(v[p]);
    for (unsigned j = 0; j < n; ++j) w[j] = f.mul(inv, v[j]);
    for (unsigned r = 0; r < rank; ++r) {
      const Elem c = rows[r][p];
      if (!c) continue;
      for (unsigned j = 0; j < n; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(c, w[j]));
    }
    // Keep rows sorted by pivot.
    unsigned pos = rank;
    while (pos > 0 && pivot[pos - 1] > p) {
      std::copy(rows[pos - 1], rows[pos - 1] + n, rows[pos]);
      pivot[pos] = pivot[pos - 1];
      --pos;
    }
    std::copy(w, w + n, rows[pos]);
    pivot[pos] = p;
    is_pivot[p] = true;
    ++rank;
    return true;
  }
};

std::uint32_t encode(const Elem* v, unsigned n, unsigned q) {
  std::uint32_t code = 0;
  for (unsigned j = n; j-- > 0;) code = code * q + v[j];
  return code;
}

void decode(std::uint32_t code, Elem* v, unsigned n, unsigned q) {
  for (unsigned j = 0; j < n; ++j) {
    v[j] = static_cast<Elem>(code % q);
    code /= q;
  }
}

Flag canonicalize(const Field& field, const FlagSpec& spec, const Elem (*vectors)[kMaxDim]) {
  const unsigned n = spec.n();
  const unsigned q = field.q();
  Echelon e{&field, n};
  Flag flag;
  unsigned at = 0;
  for (unsigned b = 0; b < spec.rho.length(); ++b) {
    const unsigned len = spec.rho.parts[b];
    if (spec.is_selected(b)) {
      Elem reduced[kMaxDim][kMaxDim];
      for (unsigned i = 0; i < len; ++i) {
        std::copy(vectors[at + i], vectors[at + i] + n, reduced[i]);
        e.reduce(reduced[i]);
        flag.vecs[at + i] = encode(reduced[i], n, q);
      }
      for (unsigned i = 0; i < len; ++i) {
        Elem w[kMaxDim];
        std::copy(reduced[i], reduced[i] + n, w);
        e.reduce(w);
        if (!e.insert_reduced(w)) throw Error(ErrorCode::Singular, "flag basis is not independent");
      }
    } else {
      bool old_pivot[kMaxDim];
      std::copy(e.is_pivot, e.is_pivot + n, old_pivot);
      for (unsigned i = 0; i < len; ++i) {
        Elem w[kMaxDim];
        std::copy(vectors[at + i], vectors[at + i] + n, w);
        e.reduce(w);
        if (!e.insert_reduced(w)) throw Error(ErrorCode::Singular, "flag basis is not independent");
      }
      unsigned k = 0;
      for (unsigned r = 0; r < e.rank; ++r) {
        if (!old_pivot[e.pivot[r]]) flag.vecs[at + k++] = encode(e.rows[r], n, q);
      }
    }
    at += len;
  }
  return flag;
}

}  // namespace

Flag make_flag(const FlagSpec& spec, const Matrix& basis) {
  const unsigned n = spec.n();
  if (basis.rows() != n || basis.cols() != n) throw Error(ErrorCode::MixedDimensions, "flag basis must be n x n");
  Elem v[kMaxDim][kMaxDim];
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) v[i][j] = basis(i, j);
  }
  return canonicalize(basis.field(), spec, v);
}

Matrix flag_vectors(const Field& field, const FlagSpec& spec, const Flag& flag) {
  const unsigned n = spec.n();
  Matrix m(field, n, n);
  for (unsigned i = 0; i < n; ++i) decode(flag.vecs[i], m.row(i), n, field.q());
  return m;
}

Flag apply(const Matrix& g, const FlagSpec& spec, const Flag& flag) {
  const Field& field = g.field();
  const unsigned n = spec.n();
  const unsigned q = field.q();
  Elem v[kMaxDim][kMaxDim];
  for (unsigned i = 0; i < n; ++i) {
    Elem x[kMaxDim];
    decode(flag.vecs[i], x, n, q);
    for (unsigned r = 0; r < n; ++r) {
      Elem acc = 0;
      for (unsigned c = 0; c < n; ++c) {
        if (x[c]) acc = field.add(acc, field.mul(g(r, c), x[c]));
      }
      v[i][r] = acc;
    }
  }
  return canonicalize(field, spec, v);
}

std::vector<Flag> enumerate_flags(const Field& field, const FlagSpec& spec, const Budget& budget) {
  validate_spec(spec, field.q());
  const PairType type = type_of_spec(spec);
  const unsigned n = spec.n();
  const unsigned q = field.q();
  budget.check(flag_count(type.first, type.second, n, q), "enumerate_flags");
  std::vector<Flag> out;
  Elem vectors[kMaxDim][kMaxDim]{};

  std::function<void(unsigned, unsigned, const Echelon&)> block = [&](unsigned b, unsigned at, const Echelon& e) {
    if (b == spec.rho.length()) {
      out.push_back(canonicalize(field, spec, vectors));
      return;
    }
    const unsigned len = spec.rho.parts[b];
    std::vector<unsigned> freecols;
    for (unsigned j = 0; j < n; ++j) {
      if (!e.is_pivot[j]) freecols.push_back(j);
    }
    const unsigned m = static_cast<unsigned>(freecols.size());
    std::uint64_t span = 1;
    for (unsigned i = 0; i < m; ++i) span *= q;
    auto embed = [&](std::uint64_t code, Elem* v) {
      std::fill(v, v + n, Elem(0));
      for (unsigned i = 0; i < m; ++i) {
        v[freecols[i]] = static_cast<Elem>(code % q);
        code /= q;
      }
    };
    if (spec.is_selected(b)) {
      // Ordered independent tuples supported on the free columns.
      std::function<void(unsigned, const Echelon&)> pick = [&](unsigned i, const Echelon& cur) {
        if (i == len) {
          block(b + 1, at + len, cur);
          return;
        }
        for (std::uint64_t code = 1; code < span; ++code) {
          embed(code, vectors[at + i]);
          Elem w[kMaxDim];
          std::copy(vectors[at + i], vectors[at + i] + n, w);
          Echelon next = cur;
          next.reduce(w);
          if (next.insert_reduced(w)) pick(i + 1, next);
        }
      };
      pick(0, e);
    } else {
      // Subspaces of the free-coordinate space, embedded.
      const Field& f = field;
      for (const Subspace& s : enumerate_subspaces(f, m, len, budget)) {
        Echelon next = e;
        for (unsigned i = 0; i < len; ++i) {
          Elem* v = vectors[at + i];
          std::fill(v, v + n, Elem(0));
          for (unsigned c = 0; c < m; ++c) v[freecols[c]] = s.basis()(i, c);
          Elem w[kMaxDim];
          std::copy(v, v + n, w);
          next.reduce(w);
          next.insert_reduced(w);
        }
        block(b + 1, at + len, next);
      }
    }
  };
  block(0, 0, Echelon{&field, n});
  return out;
}

FlagIndex index_flags(const std::vector<Flag>& flags) {
  FlagIndex index;
  index.reserve(flags.size() * 2);
  for (std::size_t i = 0; i < flags.size(); ++i) index.emplace(flags[i], static_cast<std::uint32_t>(i));
  return index;
}

std::optional<std::uint64_t> transitivity_constant(const std::vector<Matrix>& ys, const FlagSpec& spec,
                                                   const Budget& budget) {
  if (ys.empty()) throw Error(ErrorCode::EmptySet, "transitivity_constant needs a nonempty set");
  const Field& field = ys.front().field();
  if (spec.n() != ys.front().rows()) throw Error(ErrorCode::MixedDimensions, "spec and matrices differ in n");
  const std::vector<Flag> flags = enumerate_flags(field, spec, budget);
  budget.check(BigInt(flags.size()) * ys.size(), "transitivity_constant");
  if (ys.size() % flags.size() != 0) return std::nullopt;
  const std::uint64_t r = ys.size() / flags.size();
  if (!kernels::transitivity_rows_constant(ys, spec, flags, index_flags(flags), r)) return std::nullopt;
  return r;
}

bool fixes_some_flag(const Matrix& g, const PairType& type, const Budget& budget) {
  const FlagSpec spec = canonical_spec(normalize_type(type, g.field().q()));
  for (const Flag& f : enumerate_flags(g.field(), spec, budget)) {
    if (apply(g, spec, f) == f) return true;
  }
  return false;
}

}  // namespace glnq

#include "glnq/chartable.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "glnq/kernels.hpp"

namespace glnq {

namespace {

constexpr int kFormatVersion = 1;

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 k, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u64(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_divisors(u64 m) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Least generator of F_p^*.
u64 primitive_root(u64 p) {
  const auto divs = prime_divisors(p - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 d : divs) ok = ok && powmod(g, (p - 1) / d, p) != 1;
    if (ok) return g;
  }
}

using ModMatrix = std::vector<std::vector<u64>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_mod(ModMatrix& m, u64 p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const u64 inv = invmod(m[rank][c], p);
    for (u64& x : m[rank]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p - mulmod(f, m[rank][j], p)) % p;
    }
    pivots.push_back(c);
    ++rank;
  }
  m.resize(rank);
  return pivots;
}

// Characteristic polynomial det(xI - a) mod p, lowest degree first, by
// reduction to Hessenberg form.
std::vector<u64> char_poly_mod(ModMatrix a, u64 p) {
  const std::size_t d = a.size();
  for (std::size_t c = 0; c + 2 <= d; ++c) {
    std::size_t piv = c + 1;
    while (piv < d && a[piv][c] == 0) ++piv;
    if (piv == d) continue;
    if (piv != c + 1) {
      std::swap(a[piv], a[c + 1]);
      for (std::size_t i = 0; i < d; ++i) std::swap(a[i][piv], a[i][c + 1]);
    }
    const u64 inv = invmod(a[c + 1][c], p);
    for (std::size_t i = c + 2; i < d; ++i) {
      const u64 f = mulmod(a[i][c], inv, p);
      if (!f) continue;
      for (std::size_t j = 0; j < d; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[c + 1][j], p)) % p;
      for (std::size_t j = 0; j < d; ++j) a[j][c + 1] = (a[j][c + 1] + mulmod(f, a[j][i], p)) % p;
    }
  }
  std::vector<std::vector<u64>> polys(d + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= d; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      cur[i] = (cur[i] + p - mulmod(a[m - 1][m - 1], prev[i], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = mulmod(prod, a[i + 1][i], p);
      const u64 f = mulmod(a[i][m - 1], prod, p);
      if (!f) continue;
      for (std::size_t j = 0; j < polys[i].size(); ++j) cur[j] = (cur[j] + p - mulmod(f, polys[i][j], p)) % p;
    }
    polys[m] = std::move(cur);
  }
  return polys[d];
}

u64 eval_mod(const std::vector<u64>& poly, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = (mulmod(r, x, p) + poly[i]) % p;
  return r;
}

// Basis of {v : v a = lambda v}.
ModMatrix left_eigenspace(const ModMatrix& a, u64 lambda, u64 p) {
  const std::size_t d = a.size();
  // Transposed system (a - lambda)^T v^T = 0.
  ModMatrix m(d, std::vector<u64>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[j][i] = a[i][j];
    m[i][i] = (m[i][i] + p - lambda) % p;
  }
  const auto pivots = rref_mod(m, p);
  ModMatrix basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<u64> v(d, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

BigInt isqrt(const BigInt& v) { return boost::multiprecision::sqrt(v); }

}  // namespace

std::string default_cache_dir() {
  const char* env = std::getenv("GLNQ_CACHE_DIR");
  return env && *env ? std::string(env) : std::string("./.glnq-cache");
}

std::string cache_path(const std::string& dir, unsigned n, unsigned q) {
  return (std::filesystem::path(dir) / ("chartab_" + std::to_string(n) + "_" + std::to_string(q) + ".txt")).string();
}

std::uint64_t dixon_prime(std::uint64_t e, const BigInt& order) {
  const BigInt bound = 2 * isqrt(order) + 2;
  u64 p = 1;
  while (BigInt(p) <= bound || !is_prime_u64(p)) p += e;
  return p;
}

CharacterTable compute_character_table(const ClassTable& classes, std::ostream* log, const Budget& budget) {
  budget.check(classes.group_order(), "character_table");
  if (!classes.has_lookup()) throw Error(ErrorCode::BudgetExceeded, "character table needs the dense class table");
  const std::size_t k = classes.size();
  const u64 e = classes.exponent();
  const u64 p = dixon_prime(e, classes.group_order());
  const u64 omega = powmod(primitive_root(p), (p - 1) / e, p);
  const u64 order_mod = static_cast<u64>(classes.group_order() % p);
  if (log) *log << "computing character table of GL(" << classes.n() << "," << classes.field().q() << "): " << k
                << " classes, exponent " << e << ", prime " << p << std::endl;
  classes.build_lookup();

  std::vector<u64> size_mod(k);
  for (std::size_t t = 0; t < k; ++t) size_mod[t] = static_cast<u64>(classes.class_size(t) % p);

  // Class sums act on row vectors chi by chi M_r = omega_r chi.
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  // Small classes are cheap. Central classes go last: their sums only
  // separate characters by central character, which the others usually do.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ca = classes.class_size(a) == 1, cb = classes.class_size(b) == 1;
    if (ca != cb) return cb;
    return classes.class_size(a) < classes.class_size(b);
  });

  ModMatrix whole(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) whole[i][i] = 1;
  std::vector<ModMatrix> spaces{whole};
  auto unsplit = [&] {
    return std::any_of(spaces.begin(), spaces.end(), [](const ModMatrix& s) { return s.size() > 1; });
  };
  for (std::size_t r : order) {
    if (!unsplit()) break;
    const Tally coeff = kernels::class_coefficients(classes, classes.class_codes(r, budget));
    ModMatrix mr(k, std::vector<u64>(k));
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) mr[s][t] = coeff[s * k + t] % p;
    }
    std::vector<ModMatrix> next;
    for (ModMatrix& w : spaces) {
      if (w.size() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      const std::size_t d = w.size();
      std::vector<std::size_t> piv(d);
      for (std::size_t i = 0; i < d; ++i) {
        while (w[i][piv[i]] == 0) ++piv[i];
      }
      ModMatrix a(d, std::vector<u64>(d));
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<u64> image(k, 0);
        for (std::size_t s = 0; s < k; ++s) {
          if (!w[i][s]) continue;
          for (std::size_t t = 0; t < k; ++t) image[t] = (image[t] + mulmod(w[i][s], mr[s][t], p)) % p;
        }
        for (std::size_t j = 0; j < d; ++j) a[i][j] = image[piv[j]];
      }
      const auto poly = char_poly_mod(a, p);
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < p && found < d; ++lambda) {
        if (eval_mod(poly, lambda, p)) continue;
        ModMatrix part;
        for (const auto& coords : left_eigenspace(a, lambda, p)) {
          std::vector<u64> v(k, 0);
          for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t t = 0; t < k; ++t) v[t] = (v[t] + mulmod(coords[j], w[j][t], p)) % p;
          }
          part.push_back(std::move(v));
        }
        rref_mod(part, p);
        found += part.size();
        next.push_back(std::move(part));
      }
      if (found != d) throw Error(ErrorCode::SizeMismatch, "class sum is not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (unsplit()) throw Error(ErrorCode::SizeMismatch, "eigenspaces did not split into lines");
  if (spaces.size() != k) throw Error(ErrorCode::SizeMismatch, "wrong number of characters");

  // Power maps: class of z_t^j.
  std::vector<std::vector<std::size_t>> power(k);
  for (std::size_t t = 0; t < k; ++t) {
    const Matrix& z = classes.representative(t);
    Matrix x = Matrix::identity(classes.field(), classes.n());
    for (u64 j = 0; j < classes.element_order(t); ++j) {
      power[t].push_back(classes.classify(x));
      x = mat_mul(x, z);
    }
  }

  CharacterTable table;
  table.n = classes.n();
  table.q = classes.field().q();
  table.exponent = static_cast<std::uint32_t>(e);
  table.prime = p;
  table.group_order = classes.group_order();
  table.class_sizes = classes.class_sizes();
  for (const auto& l : classes.labels()) table.labels.push_back(to_string(l));
  const std::size_t id = classes.identity_index();
  const BigInt root = isqrt(classes.group_order());

  std::vector<std::pair<std::uint64_t, std::vector<SparseCyclo>>> rows;
  for (const ModMatrix& s : spaces) {
    std::vector<u64> x = s.front();
    const u64 scale = invmod(x[id], p);
    for (u64& v : x) v = mulmod(v, scale, p);
    u64 norm = 0;
    for (std::size_t t = 0; t < k; ++t) {
      norm = (norm + mulmod(size_mod[t], mulmod(x[t], x[classes.inverse_index(t)], p), p)) % p;
    }
    const u64 target = mulmod(order_mod, invmod(norm, p), p);
    u64 degree = 0;
    for (u64 d = 1; BigInt(d) <= root; ++d) {
      if (mulmod(d, d, p) == target) {
        degree = d;
        break;
      }
    }
    if (!degree) throw Error(ErrorCode::SizeMismatch, "no character degree matches mod p");
    std::vector<u64> chi(k);
    for (std::size_t t = 0; t < k; ++t) chi[t] = mulmod(degree, x[t], p);

    std::vector<SparseCyclo> values(k);
    for (std::size_t t = 0; t < k; ++t) {
      const u64 o = classes.element_order(t);
      const u64 w = powmod(omega, e / o, p);
      const u64 inv_o = invmod(o % p, p);
      std::int64_t total = 0;
      for (u64 l = 0; l < o; ++l) {
        // m_l = (1/o) sum_j chi(z^j) w^{-jl}
        const u64 wl = powmod(w, (o - l) % o, p);
        u64 acc = 0, wj = 1;
        for (u64 j = 0; j < o; ++j) {
          acc = (acc + mulmod(chi[power[t][j]], wj, p)) % p;
          wj = mulmod(wj, wl, p);
        }
        const u64 m = mulmod(acc, inv_o, p);
        if (m > degree) throw Error(ErrorCode::SizeMismatch, "eigenvalue multiplicity out of range");
        if (m) values[t].push_back({static_cast<std::uint32_t>(l * (e / o)), static_cast<std::int64_t>(m)});
        total += static_cast<std::int64_t>(m);
      }
      if (static_cast<u64>(total) != degree) throw Error(ErrorCode::SizeMismatch, "multiplicities do not sum to the degree");
    }
    rows.emplace_back(degree, std::move(values));
  }
  std::sort(rows.begin(), rows.end());
  BigInt squares = 0;
  for (auto& [deg, values] : rows) {
    table.degrees.push_back(deg);
    table.rows.push_back(std::move(values));
    squares += BigInt(deg) * deg;
  }
  if (squares != table.group_order) throw Error(ErrorCode::SizeMismatch, "squared degrees do not sum to |G|");
  if (!rows_orthonormal(table)) throw Error(ErrorCode::SizeMismatch, "lifted rows are not orthonormal");
  return table;
}

bool rows_orthonormal(const CharacterTable& table) {
  const std::size_t k = table.size();
  CycloAccumulator acc(table.exponent);
  const auto order = static_cast<Wide>(static_cast<std::int64_t>(table.group_order));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      acc.clear();
      for (std::size_t t = 0; t < table.class_sizes.size(); ++t) {
        acc.add_product_conj(table.rows[i][t], table.rows[j][t], static_cast<std::int64_t>(table.class_sizes[t]));
      }
      acc.reduce();
      const auto value = acc.as_integer();
      if (!value || *value != (i == j ? order : 0)) return false;
    }
  }
  return true;
}

void require_matching(const CharacterTable& table, const ClassTable& classes) {
  bool ok = table.n == classes.n() && table.q == classes.field().q() && table.labels.size() == classes.size();
  for (std::size_t i = 0; ok && i < classes.size(); ++i) {
    ok = table.labels[i] == to_string(classes.label(i)) && table.class_sizes[i] == classes.class_size(i);
  }
  if (!ok) throw Error(ErrorCode::KeyMismatch, "character table does not match the class list");
}

void write_character_table(std::ostream& out, const CharacterTable& table) {
  out << "chartab " << table.n << ' ' << table.q << ' ' << table.class_sizes.size() << ' ' << table.exponent << ' '
      << table.prime << '\n';
  out << "version " << kFormatVersion << '\n';
  out << "sizes";
  for (const auto& s : table.class_sizes) out << ' ' << s;
  out << "\nlabels";
  for (const auto& l : table.labels) out << ' ' << l;
  out << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "row " << table.degrees[i];
    for (const auto& v : table.rows[i]) out << ' ' << to_string(v);
    out << '\n';
  }
}

CharacterTable read_character_table(std::istream& in) {
  CharacterTable t;
  std::string word;
  std::size_t count = 0;
  if (!(in >> word) || word != "chartab" || !(in >> t.n >> t.q >> count >> t.exponent >> t.prime)) {
    throw Error(ErrorCode::Parse, "missing chartab header");
  }
  int version = 0;
  if (!(in >> word >> version) || word != "version" || version != kFormatVersion) {
    throw Error(ErrorCode::Parse, "unsupported character table format version");
  }
  if (!(in >> word) || word != "sizes") throw Error(ErrorCode::Parse, "missing class sizes");
  t.group_order = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s;
    if (!(in >> s)) throw Error(ErrorCode::Parse, "truncated class sizes");
    t.class_sizes.emplace_back(s);
    t.group_order += t.class_sizes.back();
  }
  if (!(in >> word) || word != "labels") throw Error(ErrorCode::Parse, "missing labels");
  t.labels.resize(count);
  for (auto& l : t.labels) {
    if (!(in >> l)) throw Error(ErrorCode::Parse, "truncated labels");
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t deg = 0;
    if (!(in >> word >> deg) || word != "row") throw Error(ErrorCode::Parse, "truncated character rows");
    t.degrees.push_back(deg);
    std::vector<SparseCyclo> values(count);
    for (auto& v : values) {
      std::string s;
      if (!(in >> s)) throw Error(ErrorCode::Parse, "truncated character row");
      v = parse_cyclo(s);
    }
    t.rows.push_back(std::move(values));
  }
  return t;
}

CharacterTable character_table(const Field& field, unsigned n, const CharTableOptions& options) {
  const ClassTable& classes = class_table(field, n);
  const std::string dir = options.cache_dir.empty() ? default_cache_dir() : options.cache_dir;
  const std::string path = cache_path(dir, n, field.q());
  if (options.read_cache && std::filesystem::exists(path)) {
    std::ifstream in(path);
    CharacterTable t = read_character_table(in);
    require_matching(t, classes);
    return t;
  }
  if (!options.allow_compute) {
    throw Error(ErrorCode::TableMissing, "no cached character table at " + path);
  }
  CharacterTable t = compute_character_table(classes, options.log, options.budget);
  if (options.write_cache) {
    std::filesystem::create_directories(dir);
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
      write_character_table(out, t);
    }
    std::filesystem::rename(tmp, path);
    if (options.log) *options.log << "cached character table at " << path << std::endl;
  }
  return t;
}

}  // namespace glnq

#include "glnq/kernels.hpp"

#include <omp.h>

#include <atomic>

#include "glnq/enumerate.hpp"

namespace glnq::kernels {

namespace {

// Adds per-thread tallies into one.
Tally merge(const std::vector<Tally>& parts, std::size_t size) {
  Tally total(size, 0);
  for (const Tally& p : parts) {
    for (std::size_t i = 0; i < size; ++i) total[i] += p[i];
  }
  return total;
}

std::int64_t first_row_count(const Field& field, unsigned n) {
  std::int64_t c = 1;
  for (unsigned i = 0; i < n; ++i) c *= field.q();
  return c;
}

// Rows of a binary matrix as bytes of one word: bit j of byte i is entry (i, j).
std::uint64_t pack_binary(const Matrix& m) {
  std::uint64_t w = 0;
  for (unsigned i = 0; i < m.rows(); ++i) {
    std::uint64_t bits = 0;
    for (unsigned j = 0; j < m.cols(); ++j) bits |= std::uint64_t(m(i, j)) << j;
    w |= bits << (8 * i);
  }
  return w;
}

// Rank over F_2 of a packed matrix with the given number of rows.
unsigned packed_rank(std::uint64_t w, unsigned rows) {
  std::uint8_t r[kMaxDim];
  for (unsigned i = 0; i < rows; ++i) r[i] = static_cast<std::uint8_t>(w >> (8 * i));
  unsigned rank = 0;
  for (unsigned i = 0; i < rows; ++i) {
    const std::uint8_t row = r[i];
    if (!row) continue;
    ++rank;
    const std::uint8_t low = row & static_cast<std::uint8_t>(-row);
    for (unsigned k = i + 1; k < rows; ++k) {
      if (r[k] & low) r[k] ^= row;
    }
  }
  return rank;
}

// Ranks of all binary matrices with at most 4 rows and columns, indexed by the
// packed word with 4-bit row stride.
const std::vector<std::uint8_t>& small_binary_ranks() {
  static const std::vector<std::uint8_t> table = [] {
    std::vector<std::uint8_t> t(1 << 16);
    for (std::uint32_t w = 0; w < t.size(); ++w) {
      std::uint64_t spread = 0;
      for (unsigned i = 0; i < 4; ++i) spread |= std::uint64_t((w >> (4 * i)) & 0xF) << (8 * i);
      t[w] = static_cast<std::uint8_t>(packed_rank(spread, 4));
    }
    return t;
  }();
  return table;
}

std::uint32_t squeeze(std::uint64_t w) {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < 4; ++i) out |= static_cast<std::uint32_t>((w >> (8 * i)) & 0xF) << (4 * i);
  return out;
}

}  // namespace

Tally class_tally(const ClassTable& table, const std::vector<Matrix>& elements) {
  table.build_lookup();
  const int threads = max_threads();
  std::vector<Tally> parts(threads, Tally(table.size(), 0));
  const auto count = static_cast<std::int64_t>(elements.size());
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::int64_t i = 0; i < count; ++i) ++parts[omp_get_thread_num()][table.classify(elements[i])];
  return merge(parts, table.size());
}

Tally gl_class_tally(const ClassTable& table) {
  const int threads = max_threads();
  std::vector<Tally> parts(threads, Tally(table.size(), 0));
  const std::int64_t rows = first_row_count(table.field(), table.n());
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (std::int64_t r = 1; r < rows; ++r) {
    Tally& mine = parts[omp_get_thread_num()];
    for_each_gl_with_first_row(table.field(), table.n(), static_cast<std::uint64_t>(r),
                               [&](const Matrix& g) { ++mine[table.index_of(jordan_type(g))]; });
  }
  return merge(parts, table.size());
}

Tally quotient_class_tally(const ClassTable& table, const std::vector<Matrix>& ys) {
  table.build_lookup();
  const int threads = max_threads();
  std::vector<Tally> parts(threads, Tally(table.size(), 0));
  const auto count = static_cast<std::int64_t>(ys.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    Tally& mine = parts[omp_get_thread_num()];
    const Matrix xi = mat_inverse(ys[i]);
    for (const Matrix& y : ys) ++mine[table.classify(mat_mul(xi, y))];
  }
  return merge(parts, table.size());
}

Tally rank_distance_tally(const std::vector<Matrix>& ys) {
  const unsigned n = ys.empty() ? 0 : ys.front().rows();
  const int threads = max_threads();
  std::vector<Tally> parts(threads, Tally(n + 1, 0));
  const auto count = static_cast<std::int64_t>(ys.size());
  // Over F_2, x - y is the XOR of packed rows.
  const bool binary = !ys.empty() && ys.front().field().q() == 2;
  std::vector<std::uint64_t> packed;
  if (binary) {
    packed.reserve(ys.size());
    for (const Matrix& y : ys) packed.push_back(pack_binary(y));
  }
  const bool small = binary && n <= 4;
  const auto& ranks = small_binary_ranks();
  if (small) {
    for (auto& w : packed) w = squeeze(w);
  }
  // rank(x - y) is symmetric: count unordered pairs twice.
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    Tally& mine = parts[omp_get_thread_num()];
    if (small) {
      const std::uint32_t a = static_cast<std::uint32_t>(packed[i]);
      for (std::int64_t j = i + 1; j < count; ++j) mine[ranks[a ^ static_cast<std::uint32_t>(packed[j])]] += 2;
    } else if (binary) {
      for (std::int64_t j = i + 1; j < count; ++j) mine[packed_rank(packed[i] ^ packed[j], n)] += 2;
    } else {
      for (std::int64_t j = i + 1; j < count; ++j) mine[rank_distance(ys[i], ys[j])] += 2;
    }
  }
  Tally total = merge(parts, n + 1);
  total[0] += ys.size();
  return total;
}

Tally gl_fixed_dim_tally(const Field& field, unsigned n) {
  const int threads = max_threads();
  std::vector<Tally> parts(threads, Tally(n + 1, 0));
  const std::int64_t rows = first_row_count(field, n);
  const Matrix id = Matrix::identity(field, n);
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (std::int64_t r = 1; r < rows; ++r) {
    Tally& mine = parts[omp_get_thread_num()];
    for_each_gl_with_first_row(field, n, static_cast<std::uint64_t>(r),
                               [&](const Matrix& g) { ++mine[n - mat_rank(mat_sub(g, id))]; });
  }
  return merge(parts, n + 1);
}

bool transitivity_rows_constant(const std::vector<Matrix>& ys, const FlagSpec& spec,
                                const std::vector<Flag>& flags, const FlagIndex& index, std::uint64_t r) {
  std::atomic<bool> ok{true};
  const auto count = static_cast<std::int64_t>(flags.size());
  const int threads = max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint64_t> row(flags.size());
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t a = 0; a < count; ++a) {
      if (!ok.load(std::memory_order_relaxed)) continue;
      std::fill(row.begin(), row.end(), 0);
      for (const Matrix& g : ys) ++row[index.at(apply(g, spec, flags[a]))];
      for (std::uint64_t c : row) {
        if (c != r) {
          ok.store(false, std::memory_order_relaxed);
          break;
        }
      }
    }
  }
  return ok.load();
}

Tally class_coefficients(const ClassTable& table, const std::vector<std::uint64_t>& ys) {
  table.build_lookup();
  const auto k = static_cast<std::int64_t>(table.size());
  const Field& field = table.field();
  const unsigned n = table.n();
  const std::uint64_t q = field.q();
  std::uint64_t row_space = 1;
  for (unsigned i = 0; i < n; ++i) row_space *= q;
  Tally m(static_cast<std::size_t>(k * k), 0);
  const int threads = max_threads();
  // Each target class t owns column t, so no reduction is needed.
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (std::int64_t t = 0; t < k; ++t) {
    const Matrix& z = table.representative(static_cast<std::size_t>(t));
    // Row code of a -> row code of a z; a product is then n table lookups.
    std::vector<std::uint64_t> image(row_space);
    for (std::uint64_t a = 0; a < row_space; ++a) {
      const Matrix row = mat_mul(Matrix::from_code(field, 1, n, a), z);
      image[a] = row.code();
    }
    for (std::uint64_t code : ys) {
      std::uint64_t rest = code, out = 0, scale = 1;
      for (unsigned i = 0; i < n; ++i) {
        out += image[rest % row_space] * scale;
        rest /= row_space;
        scale *= row_space;
      }
      ++m[table.classify_code(out) * k + t];
    }
  }
  return m;
}

}  // namespace glnq::kernels

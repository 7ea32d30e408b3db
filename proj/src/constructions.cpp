#include "glnq/constructions.hpp"

#include <algorithm>
#include <set>

#include "glnq/classes.hpp"
#include "glnq/enumerate.hpp"
#include "glnq/flags.hpp"
#include "glnq/matrix_io.hpp"
#include "glnq/qanalog.hpp"

namespace glnq {

FqPoly primitive_polynomial(const Field& field, unsigned n) {
  const std::uint64_t target = static_cast<std::uint64_t>(big_pow(field.q(), n)) - 1;
  for (const FqPoly& f : irreducibles(field, n)) {
    if (static_cast<unsigned>(f.degree()) != n) continue;
    if (mat_order(companion(f)) == target) return f;
  }
  throw Error(ErrorCode::OutOfRange, "no primitive polynomial found");
}

Matrix singer_generator(const Field& field, unsigned n) { return companion(primitive_polynomial(field, n)); }

std::vector<Matrix> singer_subgroup(const Field& field, unsigned n, unsigned step) {
  const Matrix c = mat_pow(singer_generator(field, n), step);
  const Matrix id = Matrix::identity(field, n);
  std::vector<Matrix> out;
  Matrix x = c;
  while (true) {
    out.push_back(x);
    if (x == id) break;
    x = mat_mul(x, c);
  }
  return out;
}

std::vector<Matrix> singer_cycle(const Field& field, unsigned n) { return singer_subgroup(field, n, 1); }

Matrix frobenius_matrix(const Field& field, unsigned n) {
  const Matrix c = singer_generator(field, n);
  Matrix fr(field, n, n);
  for (unsigned j = 0; j < n; ++j) {
    const Matrix p = mat_pow(c, static_cast<std::uint64_t>(j) * field.q());
    for (unsigned i = 0; i < n; ++i) fr(i, j) = p(i, 0);  // alpha^{jq} = C^{jq} e_0
  }
  return fr;
}

std::vector<Matrix> gamma_l1(const Field& field, unsigned n) {
  return group_closure({singer_generator(field, n), frobenius_matrix(field, n)});
}

SubspaceDesign full_grassmannian(const Field& field, unsigned n, unsigned k) {
  SubspaceDesign d{n, k, &field, enumerate_subspaces(field, n, k), k};
  return d;
}

SubspaceDesign field_spread(const Field& field, unsigned n, unsigned k) {
  if (k == 0 || n % k != 0) throw Error(ErrorCode::OutOfRange, "field_spread needs k | n");
  const Matrix c = singer_generator(field, k);
  Matrix a(field, 0, 0);
  for (unsigned b = 0; b < n / k; ++b) a = block_diag(a, c);
  std::set<Subspace> lines;
  const std::uint64_t total = static_cast<std::uint64_t>(big_pow(field.q(), n));
  for (std::uint64_t code = 1; code < total; ++code) {
    Matrix v = Matrix::from_code(field, 1, n, code);
    Matrix rows(field, k, n);
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = 0; j < n; ++j) rows(i, j) = v(0, j);
      v = transpose(mat_mul(a, transpose(v)));
    }
    lines.insert(Subspace::span(rows));
  }
  SubspaceDesign d{n, k, &field, std::vector<Subspace>(lines.begin(), lines.end()), 1};
  return d;
}

std::optional<BigInt> grassmannian_design_check(const SubspaceDesign& d, unsigned t, const Budget& budget) {
  if (t > d.k) return std::nullopt;
  const std::vector<Subspace> tspaces = enumerate_subspaces(*d.field, d.n, t, budget);
  budget.check(BigInt(tspaces.size()) * d.blocks.size(), "grassmannian_design_check");
  std::optional<BigInt> constant;
  for (const Subspace& s : tspaces) {
    BigInt count = 0;
    for (const Subspace& b : d.blocks) count += b.contains(s) ? 1 : 0;
    if (constant && *constant != count) return std::nullopt;
    constant = count;
  }
  return constant;
}

void verify_design(const SubspaceDesign& d) {
  std::set<Subspace> distinct(d.blocks.begin(), d.blocks.end());
  if (distinct.size() != d.blocks.size()) throw Error(ErrorCode::NotADesign, "repeated blocks");
  for (const Subspace& b : d.blocks) {
    if (b.dim() != d.k || b.ambient_dim() != d.n) throw Error(ErrorCode::NotADesign, "block of the wrong dimension");
  }
  if (d.declared_t > 0 && !grassmannian_design_check(d, d.declared_t)) {
    throw Error(ErrorCode::NotADesign, "blocks do not form a " + std::to_string(d.declared_t) + "-design");
  }
}

SubspaceDesign load_subspace_design(const std::string& path, unsigned declared_t) {
  const SubspaceSet set = load_subspace_set(path);
  SubspaceDesign d{set.n, set.k, &field_of_order(set.q), set.blocks, declared_t};
  verify_design(d);
  return d;
}

BigInt intersection_number_formula(const SubspaceDesign& d, unsigned i, unsigned j) {
  const unsigned t = d.declared_t;
  if (i + j > t) throw Error(ErrorCode::StrengthExceeded, "intersection numbers need i + j <= t");
  const unsigned q = d.field->q();
  const BigInt num = BigInt(d.blocks.size()) * big_pow(q, j * (d.k - i)) *
                     q_binomial_or_zero(d.n - i - j, d.k - i, q) * q_binomial(d.k, t, q);
  const BigInt den = q_binomial(d.n - t, d.k - t, q) * q_binomial(d.n, t, q);
  if (num % den != 0) throw Error(ErrorCode::NotADesign, "intersection number is not an integer");
  return num / den;
}

BigInt intersection_number_count(const SubspaceDesign& d, const Subspace& i_space, const Subspace& j_space) {
  BigInt count = 0;
  for (const Subspace& b : d.blocks) {
    if (b.contains(i_space) && trivially_intersecting(b, j_space)) ++count;
  }
  return count;
}

BigInt intersection_number_empirical(const SubspaceDesign& d, unsigned i, unsigned j) {
  if (i + j > d.n) throw Error(ErrorCode::OutOfRange, "i + j exceeds n");
  Matrix ib(*d.field, i, d.n), jb(*d.field, j, d.n);
  for (unsigned r = 0; r < i; ++r) ib(r, r) = 1;
  for (unsigned r = 0; r < j; ++r) jb(r, i + r) = 1;
  return intersection_number_count(d, Subspace::span(ib), Subspace::span(jb));
}

namespace {

bool is_design_in_gl(const std::vector<Matrix>& ys, unsigned t) {
  const unsigned m = ys.front().rows();
  if (t == 0 || t > m) return true;
  const PairType type{Partition{t}, m > t ? Partition{m - t} : Partition()};
  return transitivity_constant(ys, canonical_spec(normalize_type(type, ys.front().field().q()))).has_value();
}

}  // namespace

std::vector<Matrix> recursive_design(const std::vector<Matrix>& ys, const std::vector<Matrix>& zs,
                                     const SubspaceDesign& d, unsigned t, bool verify, std::mt19937_64* rng,
                                     const Budget& budget) {
  if (ys.empty() || zs.empty() || d.blocks.empty()) throw Error(ErrorCode::EmptySet, "recursive_design inputs are empty");
  const unsigned n = d.n, k = d.k;
  const Field& field = *d.field;
  if (ys.front().rows() != k || zs.front().rows() != n - k) {
    throw Error(ErrorCode::MixedDimensions, "Y must act on a k-space and Z on an (n-k)-space");
  }
  const BigInt total = BigInt(ys.size()) * zs.size() * d.blocks.size() * big_pow(field.q(), k * (n - k));
  budget.check(total, "recursive_design");
  if (verify && t > 0) {
    if (!is_design_in_gl(ys, t)) throw Error(ErrorCode::NotADesign, "Y is not a t-design");
    if (!is_design_in_gl(zs, t)) throw Error(ErrorCode::NotADesign, "Z is not a t-design");
    if (t <= k && !grassmannian_design_check(d, t, budget)) throw Error(ErrorCode::NotADesign, "D is not a t-design");
  }
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(total));
  for (const Subspace& b : d.blocks) {
    // Columns of gb: a basis of B; columns of hc: a basis of C.
    Matrix gb = transpose(b.basis());
    if (rng) gb = mat_mul(gb, random_invertible(field, k, *rng));
    for (const Subspace& c : enumerate_complements(b, budget)) {
      Matrix hc = transpose(c.basis());
      if (rng) hc = mat_mul(hc, random_invertible(field, n - k, *rng));
      Matrix frame(field, n, n);
      for (unsigned r = 0; r < n; ++r) {
        for (unsigned col = 0; col < k; ++col) frame(r, col) = gb(r, col);
        for (unsigned col = 0; col < n - k; ++col) frame(r, k + col) = hc(r, col);
      }
      for (const Matrix& y : ys) {
        for (const Matrix& z : zs) out.push_back(mat_mul(frame, block_diag(y, z)));
      }
    }
  }
  return out;
}

LinearRankCode mrd_code(const Field& field, unsigned n, unsigned d) {
  if (d < 1 || d > n) throw Error(ErrorCode::OutOfRange, "MRD distance must satisfy 1 <= d <= n");
  const Matrix c = singer_generator(field, n);
  const Matrix fr = frobenius_matrix(field, n);
  LinearRankCode code{n, d, &field, {}};
  Matrix fi = Matrix::identity(field, n);
  for (unsigned i = 0; i <= n - d; ++i) {
    Matrix cj = Matrix::identity(field, n);
    for (unsigned j = 0; j < n; ++j) {
      code.generators.push_back(mat_mul(cj, fi));
      cj = mat_mul(cj, c);
    }
    fi = mat_mul(fi, fr);
  }
  return code;
}

std::vector<Matrix> code_members(const LinearRankCode& code, const Budget& budget) {
  const Field& field = *code.field;
  const unsigned dim = static_cast<unsigned>(code.generators.size());
  budget.check(big_pow(field.q(), dim), "code_members");
  std::vector<unsigned> coeff(dim, 0);
  std::vector<Matrix> out;
  while (true) {
    Matrix m(field, code.n, code.n);
    for (unsigned g = 0; g < dim; ++g) {
      if (coeff[g]) m = mat_add(m, mat_scale(static_cast<Elem>(coeff[g]), code.generators[g]));
    }
    out.push_back(m);
    unsigned g = 0;
    while (g < dim && ++coeff[g] == field.q()) coeff[g++] = 0;
    if (g == dim) break;
  }
  return out;
}

unsigned code_min_rank(const LinearRankCode& code, const Budget& budget) {
  unsigned best = code.n;
  for (const Matrix& m : code_members(code, budget)) {
    const unsigned r = mat_rank(m);
    if (r > 0) best = std::min(best, r);
  }
  return best;
}

std::vector<Matrix> invertible_subcode(const LinearRankCode& code, const Budget& budget) {
  std::vector<Matrix> out;
  for (const Matrix& m : code_members(code, budget)) {
    if (is_invertible(m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt mrd_invertible_count(unsigned n, unsigned d, unsigned q) {
  BigInt total = 0;
  for (unsigned j = 0; j <= n - d; ++j) {
    const BigInt cj = big_pow(q, j == 0 ? 0 : j * (j - 1) / 2) * q_binomial(n, j, q) *
                      (big_pow(q, n * (n - d + 1 - j)) - 1);
    total += j % 2 ? -cj : cj;
  }
  return total;
}

std::vector<Matrix> random_subgroup_search(const Field& field, unsigned n, const BigInt& target_order,
                                           std::uint64_t seed, unsigned max_tries) {
  std::mt19937_64 rng(seed);
  const BigInt limit = gl_order(n, field.q());
  Budget budget;
  budget.max_items = static_cast<std::uint64_t>(limit);
  for (unsigned attempt = 0; attempt < max_tries; ++attempt) {
    const Matrix a = random_invertible(field, n, rng);
    const Matrix b = random_invertible(field, n, rng);
    std::vector<Matrix> group = group_closure({a, b}, budget);
    if (BigInt(group.size()) == target_order) return group;
  }
  throw Error(ErrorCode::BudgetExceeded, "no subgroup of order " + target_order.str() + " found");
}

}  // namespace glnq

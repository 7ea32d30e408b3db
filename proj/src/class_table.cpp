#include "glnq/class_table.hpp"

#include <numeric>

#include "glnq/qanalog.hpp"

namespace glnq {

namespace {

// Dense lookup is used up to this many matrix codes (one byte each).
constexpr std::uint64_t kLookupLimit = std::uint64_t(1) << 26;
constexpr std::uint8_t kUnset = 0xFF;

}  // namespace

std::vector<Matrix> gl_generators(const Field& field, unsigned n) {
  std::vector<Matrix> gens;
  Matrix d = Matrix::identity(field, n);
  d(0, 0) = field.primitive();
  if (field.q() > 2) gens.push_back(d);
  if (n >= 2) {
    Matrix t = Matrix::identity(field, n);
    t(0, 1) = 1;
    gens.push_back(t);
    Matrix swap(field, n, n);
    swap(0, 1) = swap(1, 0) = 1;
    for (unsigned i = 2; i < n; ++i) swap(i, i) = 1;
    gens.push_back(swap);
    if (n >= 3) {
      Matrix cycle(field, n, n);
      for (unsigned i = 0; i < n; ++i) cycle((i + 1) % n, i) = 1;
      gens.push_back(cycle);
    }
  }
  return gens;
}

ClassTable::ClassTable(const Field& field, unsigned n)
    : field_(&field), n_(n), order_(gl_order(n, field.q())) {
  labels_ = enumerate_lambda(field, n);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    index_.emplace(labels_[i], i);
    reps_.push_back(class_representative(field, labels_[i]));
    sizes_.push_back(class_size_closed_form(field, labels_[i]));
    types_.push_back(type_of_lambda(field, labels_[i]));
    orders_.push_back(mat_order(reps_[i]));
    exponent_ = std::lcm(exponent_, orders_[i]);
    if (reps_[i] == Matrix::identity(field, n)) identity_ = i;
  }
  BigInt codes = big_pow(field.q(), n * n);
  lookup_possible_ = codes <= BigInt(kLookupLimit) && labels_.size() < kUnset;
  for (std::size_t i = 0; i < labels_.size(); ++i) inverse_.push_back(index_of(jordan_type(mat_inverse(reps_[i]))));
}

std::size_t ClassTable::index_of(const LambdaMap& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw Error(ErrorCode::OutOfRange, "unknown class label " + to_string(m));
  return it->second;
}

void ClassTable::build_lookup() const {
  if (!lookup_possible_) return;
  std::call_once(lookup_once_, [this] {
    const std::uint64_t total = static_cast<std::uint64_t>(big_pow(field_->q(), n_ * n_));
    lookup_.assign(total, kUnset);
    const auto gens = gl_generators(*field_, n_);
    std::vector<Matrix> inv;
    for (const auto& g : gens) inv.push_back(mat_inverse(g));
    std::vector<std::uint32_t> queue;
    for (std::size_t c = 0; c < labels_.size(); ++c) {
      queue.clear();
      const std::uint64_t start = reps_[c].code();
      lookup_[start] = static_cast<std::uint8_t>(c);
      queue.push_back(static_cast<std::uint32_t>(start));
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Matrix x = Matrix::from_code(*field_, n_, n_, queue[head]);
        for (std::size_t k = 0; k < gens.size(); ++k) {
          const std::uint64_t y = mat_mul(mat_mul(gens[k], x), inv[k]).code();
          if (lookup_[y] == kUnset) {
            lookup_[y] = static_cast<std::uint8_t>(c);
            queue.push_back(static_cast<std::uint32_t>(y));
          }
        }
      }
      if (BigInt(queue.size()) != sizes_[c]) {
        throw Error(ErrorCode::SizeMismatch, "conjugation orbit of " + to_string(labels_[c]) +
                                                 " has " + std::to_string(queue.size()) +
                                                 " elements, expected " + sizes_[c].str());
      }
    }
  });
}

std::size_t ClassTable::classify(const Matrix& g) const {
  if (g.rows() != n_ || g.field_ptr() != field_) {
    throw Error(ErrorCode::MixedDimensions, "element does not belong to this group");
  }
  if (lookup_possible_) {
    build_lookup();
    const std::uint8_t c = lookup_[g.code()];
    if (c == kUnset) throw Error(ErrorCode::Singular, "classify needs an invertible matrix");
    return c;
  }
  return index_of(jordan_type(g));
}

std::vector<std::uint64_t> ClassTable::class_codes(std::size_t i, const Budget& budget) const {
  if (!lookup_possible_) throw Error(ErrorCode::BudgetExceeded, "class elements need the dense class table");
  budget.check(sizes_[i], "class_elements");
  build_lookup();
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(sizes_[i]));
  for (std::uint64_t code = 0; code < lookup_.size(); ++code) {
    if (lookup_[code] == i) out.push_back(code);
  }
  return out;
}

std::vector<Matrix> ClassTable::class_elements(std::size_t i, const Budget& budget) const {
  std::vector<Matrix> out;
  for (std::uint64_t code : class_codes(i, budget)) out.push_back(Matrix::from_code(*field_, n_, n_, code));
  return out;
}

const ClassTable& class_table(const Field& field, unsigned n) {
  static std::mutex mutex;
  static std::map<std::pair<const Field*, unsigned>, std::unique_ptr<ClassTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{&field, n}];
  if (!slot) slot = std::make_unique<ClassTable>(field, n);
  return *slot;
}

}  // namespace glnq

#include "glnq/tableaux.hpp"

#include <functional>

namespace glnq {

namespace {

using Shape = std::vector<unsigned>;

unsigned at(const Shape& s, std::size_t i) { return i < s.size() ? s[i] : 0; }

bool contains(const Partition& outer, const Partition& inner) {
  for (unsigned i = 1; i <= inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

// Calls visit(next) for every shape next with inner <= next <= bound such that
// next/inner is a horizontal strip of exactly `size` boxes.
void for_each_strip(const Shape& inner, const Shape& bound, unsigned size,
                    const std::function<void(const Shape&)>& visit) {
  Shape next(bound.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t row, unsigned left) {
    if (row == bound.size()) {
      if (left == 0) visit(next);
      return;
    }
    const unsigned lo = at(inner, row);
    unsigned hi = bound[row];
    if (row > 0) hi = std::min(hi, at(inner, row - 1));
    for (unsigned v = lo; v <= hi && v - lo <= left; ++v) {
      next[row] = v;
      rec(row + 1, left - (v - lo));
    }
    next[row] = lo;
  };
  rec(0, size);
}

}  // namespace

bool is_horizontal_strip(const Partition& nu, const Partition& mu) {
  if (!contains(mu, nu)) return false;
  for (unsigned i = 2; i <= mu.length(); ++i) {
    if (mu.part(i) > nu.part(i - 1)) return false;
  }
  return true;
}

BigInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw Error(ErrorCode::SizeMismatch, "kostka needs |lambda| = |mu|");
  const Shape target = lambda.parts;
  BigInt count = 0;
  std::function<void(const Shape&, std::size_t)> rec = [&](const Shape& cur, std::size_t step) {
    if (step == mu.parts.size()) {
      if (cur == target) ++count;
      return;
    }
    for_each_strip(cur, target, mu.parts[step], [&](const Shape& next) { rec(next, step + 1); });
  };
  rec(Shape(target.size(), 0), 0);
  return count;
}

BigInt standard_tableaux(const Partition& lambda) {
  return kostka(lambda, Partition(std::vector<unsigned>(lambda.size(), 1u)));
}

BigInt lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu) {
  if (mu.size() != lambda.size() + nu.size() || !contains(mu, lambda)) return 0;
  const Shape target = mu.parts;
  Shape start(target.size(), 0);
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) start[i] = lambda.parts[i];
  // entries[row][col] for cells of mu/lambda.
  std::vector<std::vector<unsigned>> entries(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) entries[i].assign(target[i], 0);
  BigInt count = 0;
  std::function<void(const Shape&, std::size_t)> rec = [&](const Shape& cur, std::size_t step) {
    if (step == nu.parts.size()) {
      if (cur != target) return;
      // Reading word: rows top to bottom, each right to left.
      std::vector<unsigned> seen(nu.parts.size() + 1, 0);
      for (std::size_t r = 0; r < target.size(); ++r) {
        for (std::size_t c = target[r]; c-- > at(start, r);) {
          const unsigned v = entries[r][c];
          ++seen[v];
          if (v > 1 && seen[v] > seen[v - 1]) return;
        }
      }
      ++count;
      return;
    }
    for_each_strip(cur, target, nu.parts[step], [&](const Shape& next) {
      for (std::size_t r = 0; r < next.size(); ++r) {
        for (unsigned c = at(cur, r); c < next[r]; ++c) entries[r][c] = static_cast<unsigned>(step + 1);
      }
      rec(next, step + 1);
    });
  };
  rec(start, 0);
  return count;
}

}  // namespace glnq

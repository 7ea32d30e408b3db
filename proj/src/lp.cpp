#include "glnq/lp.hpp"

namespace glnq {

LpSolution maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(ErrorCode::SizeMismatch, "constraint matrix and bounds disagree");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::SizeMismatch, "constraint row has the wrong length");
  }
  for (const auto& v : b) {
    if (v < 0) throw Error(ErrorCode::Infeasible, "right-hand sides must be nonnegative");
  }
  // Tableau columns: n originals, m slacks, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  // Reduced costs for maximization: entering columns have positive cost.
  std::vector<Rational> cost(width);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];

  LpSolution sol;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw Error(ErrorCode::Infeasible, "linear program is unbounded");
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
    ++sol.pivots;
  }
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = t[i][width - 1];
  }
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += c[j] * sol.x[j];
  return sol;
}

}  // namespace glnq

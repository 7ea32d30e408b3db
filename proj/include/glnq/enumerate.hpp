#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "glnq/common.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

/// Row code of a 1 x n (or one row of an n x n) matrix: sum a_j q^j.
std::uint64_t row_code(const Matrix& m, unsigned row);

/// Visits every element of GL(n,q) once. Rows are chosen in increasing row
/// code, skipping rows dependent on the earlier ones, so the order is
/// lexicographic in (row 0, row 1, ...) and the identity comes first.
void for_each_gl(const Field& field, unsigned n, const std::function<void(const Matrix&)>& visit);

/// Same order, restricted to elements whose first row has the given code.
void for_each_gl_with_first_row(const Field& field, unsigned n, std::uint64_t first_row,
                                const std::function<void(const Matrix&)>& visit);

/// Materialized enumeration; throws BudgetExceeded if |GL(n,q)| exceeds the budget.
std::vector<Matrix> enumerate_gl(const Field& field, unsigned n,
                                 const Budget& budget = Budget::defaults());

/// Uniform random invertible matrix (rejection sampling).
Matrix random_invertible(const Field& field, unsigned n, std::mt19937_64& rng);

/// Closure of a generating set under multiplication (the generated subgroup).
std::vector<Matrix> group_closure(const std::vector<Matrix>& generators,
                                  const Budget& budget = Budget::defaults());

/// True when the set is closed under products and inverses.
bool is_subgroup(const std::vector<Matrix>& elements);

}  // namespace glnq

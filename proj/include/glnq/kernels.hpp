#pragma once

// Hot loops of the library. `kernels` holds the OpenMP versions used in
// production; `reference` holds plain serial versions with identical
// contracts, kept for testing and benchmarking.

#include <cstdint>
#include <vector>

#include "glnq/class_table.hpp"
#include "glnq/flags.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

using Tally = std::vector<std::uint64_t>;

namespace kernels {

/// Number of elements in each class.
Tally class_tally(const ClassTable& table, const std::vector<Matrix>& elements);
/// jordan_type tallied over all of GL(n,q).
Tally gl_class_tally(const ClassTable& table);
/// Class of x^{-1} y over ordered pairs, diagonal included.
Tally quotient_class_tally(const ClassTable& table, const std::vector<Matrix>& ys);
/// rank(x - y) over ordered pairs, diagonal included; index = rank.
Tally rank_distance_tally(const std::vector<Matrix>& ys);
/// dim ker(g - I) over all of GL(n,q); index = dimension.
Tally gl_fixed_dim_tally(const Field& field, unsigned n);
/// True iff each flag is sent to each flag by exactly r elements of ys.
bool transitivity_rows_constant(const std::vector<Matrix>& ys, const FlagSpec& spec,
                                const std::vector<Flag>& flags, const FlagIndex& index, std::uint64_t r);
/// Row-major k x k matrix with entry (s,t) = #{y : class(y z_t) = s}, where y
/// runs over the given matrix codes and z_t over the class representatives.
/// Requires the dense class table.
Tally class_coefficients(const ClassTable& table, const std::vector<std::uint64_t>& ys);

}  // namespace kernels

namespace reference {

Tally class_tally(const ClassTable& table, const std::vector<Matrix>& elements);
Tally gl_class_tally(const ClassTable& table);
Tally quotient_class_tally(const ClassTable& table, const std::vector<Matrix>& ys);
Tally rank_distance_tally(const std::vector<Matrix>& ys);
Tally gl_fixed_dim_tally(const Field& field, unsigned n);
bool transitivity_rows_constant(const std::vector<Matrix>& ys, const FlagSpec& spec,
                                const std::vector<Flag>& flags, const FlagIndex& index, std::uint64_t r);
Tally class_coefficients(const ClassTable& table, const std::vector<std::uint64_t>& ys);

}  // namespace reference

}  // namespace glnq

#pragma once

#include "glnq/common.hpp"
#include "glnq/partition.hpp"

namespace glnq {

/// Number of semistandard tableaux of shape lambda and content mu; throws
/// SizeMismatch unless |lambda| = |mu|.
BigInt kostka(const Partition& lambda, const Partition& mu);

/// Number of standard tableaux of shape lambda.
BigInt standard_tableaux(const Partition& lambda);

/// Littlewood-Richardson coefficient c^mu_{lambda,nu}: skew tableaux of shape
/// mu/lambda with content nu whose reversed-row reading word is a lattice word.
BigInt lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu);

/// True iff mu/nu is a horizontal strip (nu inside mu, at most one box per column).
bool is_horizontal_strip(const Partition& nu, const Partition& mu);

}  // namespace glnq

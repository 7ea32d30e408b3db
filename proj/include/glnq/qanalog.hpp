#pragma once

#include "glnq/common.hpp"

namespace glnq {

BigInt big_pow(std::uint64_t base, unsigned exponent);

/// [m]_q = (q^m - 1)/(q - 1).
BigInt q_integer(unsigned m, unsigned q);
/// [m]_q! = [m]_q [m-1]_q ... [1]_q.
BigInt q_factorial(unsigned m, unsigned q);
/// Gaussian binomial [n k]_q; throws OutOfRange unless 0 <= k <= n.
BigInt q_binomial(unsigned n, unsigned k, unsigned q);
/// Same, but returns 0 for k > n instead of throwing.
BigInt q_binomial_or_zero(unsigned n, unsigned k, unsigned q);

/// |GL(n,q)| = prod_{i<n} (q^n - q^i); gl_order(0, q) = 1.
BigInt gl_order(unsigned n, unsigned q);
/// prod_{i<t} (q^n - q^i): the number of ordered t-tuples of independent vectors.
BigInt independent_tuples(unsigned n, unsigned t, unsigned q);

BigInt binomial(unsigned n, unsigned k);

}  // namespace glnq

#include "glnq/qanalog.hpp"

namespace glnq {

BigInt big_pow(std::uint64_t base, unsigned exponent) {
  BigInt r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt q_integer(unsigned m, unsigned q) {
  BigInt r = 0;
  for (unsigned i = 0; i < m; ++i) r += big_pow(q, i);
  return r;
}

BigInt q_factorial(unsigned m, unsigned q) {
  BigInt r = 1;
  for (unsigned i = 1; i <= m; ++i) r *= q_integer(i, q);
  return r;
}

BigInt q_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) throw Error(ErrorCode::OutOfRange, "q_binomial requires 0 <= k <= n");
  return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

BigInt q_binomial_or_zero(unsigned n, unsigned k, unsigned q) {
  return k > n ? BigInt(0) : q_binomial(n, k, q);
}

BigInt independent_tuples(unsigned n, unsigned t, unsigned q) {
  BigInt r = 1;
  const BigInt qn = big_pow(q, n);
  for (unsigned i = 0; i < t; ++i) r *= qn - big_pow(q, i);
  return r;
}

BigInt gl_order(unsigned n, unsigned q) { return independent_tuples(n, n, q); }

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace glnq

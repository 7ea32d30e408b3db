#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace glnq {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class ErrorCode {
  NotPrime,
  BudgetExceeded,
  Singular,
  OutOfRange,
  SizeMismatch,
  InvalidType,
  EmptySet,
  MixedDimensions,
  StrengthExceeded,
  NotADesign,
  TableMissing,
  Infeasible,
  KeyMismatch,
  Parse,
  Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Work limit shared by every enumerating operation. The unit is "items"
// (matrices, flags, pairs) and is deliberately coarse.
struct Budget {
  std::uint64_t max_items = 60'000'000;

  static Budget& defaults();
  void check(std::uint64_t items, const std::string& what) const;
  void check(const BigInt& items, const std::string& what) const;
};

// Caps the OpenMP worker count used by the parallel kernels (0 = runtime default).
void set_max_threads(int threads);
int max_threads();

}  // namespace glnq

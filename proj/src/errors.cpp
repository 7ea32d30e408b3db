#include "glnq/common.hpp"

#include <omp.h>

namespace glnq {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::StrengthExceeded: return "StrengthExceeded";
    case ErrorCode::NotADesign: return "NotADesign";
    case ErrorCode::TableMissing: return "TableMissing";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::KeyMismatch: return "KeyMismatch";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

Budget& Budget::defaults() {
  static Budget budget;
  return budget;
}

void Budget::check(std::uint64_t items, const std::string& what) const {
  if (items > max_items) {
    throw Error(ErrorCode::BudgetExceeded,
                what + " needs " + std::to_string(items) + " items, budget is " +
                    std::to_string(max_items));
  }
}

void Budget::check(const BigInt& items, const std::string& what) const {
  if (items > BigInt(max_items)) {
    throw Error(ErrorCode::BudgetExceeded,
                what + " needs " + items.str() + " items, budget is " + std::to_string(max_items));
  }
}

namespace {
int g_max_threads = 0;
}

void set_max_threads(int threads) {
  g_max_threads = threads;
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return g_max_threads > 0 ? g_max_threads : omp_get_max_threads(); }

}  // namespace glnq

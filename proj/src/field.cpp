#include "glnq/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "glnq/common.hpp"

namespace glnq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Polynomials over F_p as ascending coefficient vectors.
using PPoly = std::vector<unsigned>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly poly_mod(PPoly a, const PPoly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  unsigned lead_inv = 1;
  for (unsigned x = 1; x < p; ++x) {
    if ((x * m.back()) % p == 1) lead_inv = x;
  }
  while (a.size() > dm) {
    const unsigned c = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

PPoly poly_from_code(unsigned code, unsigned p, unsigned len) {
  PPoly r(len);
  for (unsigned i = 0; i < len; ++i) {
    r[i] = code % p;
    code /= p;
  }
  return r;
}

bool irreducible_over_prime(const PPoly& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      PPoly g = poly_from_code(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically least monic irreducible of degree e: lower coefficients
// read as a base-p number with the constant term least significant.
PPoly least_irreducible(unsigned p, unsigned e) {
  unsigned count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (unsigned code = 0; code < count; ++code) {
    PPoly f = poly_from_code(code, p, e);
    f.push_back(1);
    if (f[0] == 0) continue;
    if (irreducible_over_prime(f, p)) return f;
  }
  throw Error(ErrorCode::OutOfRange, "no irreducible polynomial found");
}

}  // namespace

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e; ++i) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const PPoly pa = poly_from_code(a, p, e);
    for (unsigned b = 0; b < q_; ++b) {
      const PPoly pb = poly_from_code(b, p, e);
      unsigned sum = 0, scale = 1;
      for (unsigned i = 0; i < e; ++i) {
        sum += ((pa[i] + pb[i]) % p) * scale;
        scale *= p;
      }
      add_[a * q_ + b] = static_cast<Elem>(sum);
      PPoly prod(2 * e, 0);
      for (unsigned i = 0; i < e; ++i) {
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      }
      if (e > 1) prod = poly_mod(prod, modulus_, p);
      unsigned code = 0;
      scale = 1;
      for (unsigned i = 0; i < e; ++i) {
        const unsigned c = i < prod.size() ? prod[i] % p : 0;
        code += c * scale;
        scale *= p;
      }
      mul_[a * q_ + b] = static_cast<Elem>(code);
    }
  }
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
  for (unsigned g = 1; g < q_; ++g) {
    unsigned order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = mul(x, static_cast<Elem>(g));
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = static_cast<Elem>(g);
      break;
    }
  }
}

std::string Field::describe() const {
  std::string s = "F_" + std::to_string(q_);
  if (e_ > 1) {
    s += " (modulus";
    for (std::size_t i = modulus_.size(); i-- > 0;) s += " " + std::to_string(modulus_[i]);
    s += ")";
  }
  return s;
}

const Field& field_make(unsigned p, unsigned e) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::OutOfRange, "field exponent must be positive");
  unsigned q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw Error(ErrorCode::OutOfRange, "field size exceeds " + std::to_string(kMaxFieldSize));
    }
  }
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[{p, e}];
  if (!slot) {
    PPoly modulus = e == 1 ? PPoly{0, 1} : least_irreducible(p, e);
    slot = std::make_unique<Field>(p, e, modulus);
  }
  return *slot;
}

const Field& field_of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    unsigned e = 0, x = q;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e > 0) {
      if (x != 1) break;
      return field_make(p, e);
    }
  }
  throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
}

}  // namespace glnq

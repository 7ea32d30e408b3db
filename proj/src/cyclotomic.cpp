#include "glnq/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <sstream>

namespace glnq {

SparseCyclo cyclo_integer(std::int64_t value) {
  if (value == 0) return {};
  return {CycloTerm{0, value}};
}

SparseCyclo cyclo_conj(const SparseCyclo& a, std::uint32_t e) {
  std::map<std::uint32_t, std::int64_t> terms;
  for (const CycloTerm& t : a) terms[(e - t.exp) % e] += t.mult;
  SparseCyclo out;
  for (auto [exp, mult] : terms) {
    if (mult) out.push_back({exp, mult});
  }
  return out;
}

std::string to_string(const SparseCyclo& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const CycloTerm& t : a) {
    if (!s.empty()) s += ',';
    s += std::to_string(t.exp) + ':' + std::to_string(t.mult);
  }
  return s;
}

SparseCyclo parse_cyclo(const std::string& text) {
  SparseCyclo out;
  if (text == "0") return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::Parse, "bad cyclotomic term '" + item + "'");
    try {
      out.push_back({static_cast<std::uint32_t>(std::stoul(item.substr(0, colon))),
                     static_cast<std::int64_t>(std::stoll(item.substr(colon + 1)))});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Parse, "bad cyclotomic term '" + item + "'");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycloAccumulator::CycloAccumulator(std::uint32_t e) : e_(e), c_(e, 0) {
  if (e == 0) throw Error(ErrorCode::OutOfRange, "root of unity order must be positive");
  std::uint32_t m = e;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    primes_.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) primes_.push_back(m);
}

void CycloAccumulator::clear() { std::fill(c_.begin(), c_.end(), 0); }

void CycloAccumulator::add_term(std::uint32_t exp, Wide coef) { c_[exp % e_] += coef; }

void CycloAccumulator::add(const SparseCyclo& a, Wide scale) {
  for (const CycloTerm& t : a) c_[t.exp % e_] += scale * t.mult;
}

void CycloAccumulator::add_product_conj(const SparseCyclo& a, const SparseCyclo& b, Wide scale) {
  for (const CycloTerm& x : a) {
    for (const CycloTerm& y : b) {
      c_[(x.exp + e_ - y.exp % e_) % e_] += scale * x.mult * y.mult;
    }
  }
}

void CycloAccumulator::reduce() {
  // For each prime p with p^a || e, exponents differing only in their top base-p
  // digit mod p^a form a coset {j + i e/p}; the sum of the coset vanishes.
  // Excluded top digit: 1 for p = 2, 0 for odd p.
  for (std::uint32_t p : primes_) {
    std::uint32_t pa = 1;
    while (e_ % (pa * p) == 0) pa *= p;
    const std::uint32_t low = pa / p;
    const std::uint32_t step = e_ / p;
    const std::uint32_t banned = p == 2 ? 1 : 0;
    for (std::uint32_t j = 0; j < e_; ++j) {
      if (!c_[j] || (j % pa) / low != banned) continue;
      const Wide v = c_[j];
      c_[j] = 0;
      for (std::uint32_t i = 1; i < p; ++i) c_[(j + i * step) % e_] -= v;
    }
  }
}

bool CycloAccumulator::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Wide v) { return v == 0; });
}

std::optional<Wide> CycloAccumulator::as_integer() const {
  CycloAccumulator one(e_);
  one.add_term(0, 1);
  one.reduce();
  std::size_t pivot = 0;
  while (one.c_[pivot] == 0) ++pivot;
  const Wide factor = c_[pivot] / one.c_[pivot];
  for (std::uint32_t j = 0; j < e_; ++j) {
    if (c_[j] != factor * one.c_[j]) return std::nullopt;
  }
  return factor;
}

namespace {

constexpr mpfr_prec_t kPrecision = 256;
// Each term's rounding error stays far below this per unit of multiplicity.
constexpr long kMarginExponent = -200;

Rational to_rational(mpfr_t x) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x);
  Rational r(q);
  mpq_clear(q);
  return r;
}

RationalInterval enclose(const SparseCyclo& a, std::uint32_t e, bool imaginary) {
  mpfr_t pi, angle, value, sum;
  mpfr_inits2(kPrecision, pi, angle, value, sum, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_zero(sum, 1);
  BigInt weight = 0;
  for (const CycloTerm& t : a) {
    mpfr_mul_ui(angle, pi, 2ul * t.exp, MPFR_RNDN);
    mpfr_div_ui(angle, angle, e, MPFR_RNDN);
    if (imaginary) {
      mpfr_sin(value, angle, MPFR_RNDN);
    } else {
      mpfr_cos(value, angle, MPFR_RNDN);
    }
    mpfr_mul_si(value, value, t.mult, MPFR_RNDN);
    mpfr_add(sum, sum, value, MPFR_RNDN);
    weight += t.mult < 0 ? -t.mult : t.mult;
  }
  const Rational center = to_rational(sum);
  mpfr_clears(pi, angle, value, sum, static_cast<mpfr_ptr>(nullptr));
  Rational margin(BigInt(weight + 1), BigInt(1));
  margin /= Rational(BigInt(1) << static_cast<unsigned>(-kMarginExponent));
  return {center - margin, center + margin};
}

}  // namespace

RationalInterval real_part(const SparseCyclo& a, std::uint32_t e) { return enclose(a, e, false); }
RationalInterval imag_part(const SparseCyclo& a, std::uint32_t e) { return enclose(a, e, true); }

std::string wide_to_string(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  std::string s;
  while (v != 0) {
    const int digit = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
    v /= 10;
  }
  if (negative) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace glnq

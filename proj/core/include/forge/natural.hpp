#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "forge/errors.hpp"

namespace forge {

// Arbitrary-precision nonnegative integer: the value domain of expression
// evaluation. A thin wrapper over GMP's mpz_class that stays closed under
// +, * and exponentiation by a machine-word exponent.
class Natural {
 public:
  Natural() : v_(0) {}
  template <std::unsigned_integral T>
  Natural(T n) { set_u64(n); }  // NOLINT: implicit by design
  Natural(int n) {
    if (n < 0) throw DomainError("Natural cannot be negative");
    set_u64(static_cast<unsigned long long>(n));
  }
  explicit Natural(mpz_class v) : v_(std::move(v)) {
    if (sgn(v_) < 0) throw DomainError("Natural cannot be negative");
  }

  // Decimal digits only; no sign, no whitespace.
  static Natural from_decimal(const std::string& s) {
    if (s.empty()) throw DomainError("empty decimal string");
    for (char c : s) {
      if (c < '0' || c > '9') throw DomainError("not a decimal natural: '" + s + "'");
    }
    return Natural(mpz_class(s, 10));
  }

  const mpz_class& mpz() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

  // Number of significant bits; 0 for the value 0.
  std::size_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
  }
  std::size_t popcount() const { return mpz_popcount(v_.get_mpz_t()); }
  bool bit(std::size_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }

  bool fits_u64() const { return v_.fits_ulong_p() != 0; }
  std::uint64_t to_u64() const { return static_cast<std::uint64_t>(v_.get_ui()); }

  std::string str() const { return v_.get_str(); }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

  // this ^ exp. The exponent is a machine word; callers bound it first
  // (evaluation enforces its bit cap before raising).
  Natural pow(std::uint64_t exp) const {
    Natural r;
    mpz_pow_ui(r.v_.get_mpz_t(), v_.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
  }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  void set_u64(unsigned long long n) {
    static_assert(sizeof(unsigned long) == 8, "LP64 assumed");
    v_ = static_cast<unsigned long>(n);
  }

  mpz_class v_;
};

}  // namespace forge

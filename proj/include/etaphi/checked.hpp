#pragma once

// Exact integer arithmetic used across the library. Every operation on Int
// is overflow-checked; BigInt (GMP) is used where magnitudes exceed 128 bits.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace etaphi {

using Int = __int128;
using BigInt = mpz_class;

/// Raised whenever an exact computation leaves the representable range.
/// `where` names the affected coefficient index or argument.
class OverflowError : public std::overflow_error {
 public:
  OverflowError(const std::string& what, std::int64_t where)
      : std::overflow_error(what + " (at " + std::to_string(where) + ")"), where_(where) {}
  std::int64_t where() const noexcept { return where_; }

 private:
  std::int64_t where_;
};

/// Raised when a mathematical identity that must hold does not.
class IdentityViolation : public std::runtime_error {
 public:
  IdentityViolation(const std::string& what, std::int64_t n)
      : std::runtime_error(what + " (n = " + std::to_string(n) + ")"), n_(n) {}
  std::int64_t n() const noexcept { return n_; }

 private:
  std::int64_t n_;
};

namespace checked {

inline Int add(Int a, Int b, std::int64_t where = -1) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition", where);
  return r;
}

inline Int sub(Int a, Int b, std::int64_t where = -1) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction", where);
  return r;
}

inline Int mul(Int a, Int b, std::int64_t where = -1) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication", where);
  return r;
}

inline Int pow(Int base, unsigned e, std::int64_t where = -1) {
  Int r = 1;
  while (e) {
    if (e & 1u) r = mul(r, base, where);
    e >>= 1;
    if (e) base = mul(base, base, where);
  }
  return r;
}

inline Int abs(Int a) {
  if (a < 0) return sub(0, a);
  return a;
}

// Overloads for BigInt so prime-power routines can be written once as templates.
inline BigInt add(const BigInt& a, const BigInt& b, std::int64_t = -1) { return a + b; }
inline BigInt sub(const BigInt& a, const BigInt& b, std::int64_t = -1) { return a - b; }
inline BigInt mul(const BigInt& a, const BigInt& b, std::int64_t = -1) { return a * b; }
inline BigInt pow(const BigInt& base, unsigned e, std::int64_t = -1) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}
inline BigInt abs(const BigInt& a) { return ::abs(a); }

}  // namespace checked

std::string to_string(Int v);
Int parse_int(const std::string& s);

/// Exact conversion; throws OverflowError if the value does not fit in int64.
std::int64_t narrow64(Int v, std::int64_t where = -1);

inline BigInt to_big(Int v) { return BigInt(to_string(v)); }

}  // namespace etaphi

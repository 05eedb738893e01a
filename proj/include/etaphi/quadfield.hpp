#pragma once

// Arithmetic in K = Q(sqrt(-7)). Integers of K are (u + v sqrt(-7)) / 2 with
// u = v (mod 2); the ring has class number 1 and units +-1, so ideals are
// enumerated by generators up to sign.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "etaphi/checked.hpp"

namespace etaphi {

namespace detail {
inline bool is_even(Int x) { return (x & 1) == 0; }
inline bool is_even(const BigInt& x) { return mpz_even_p(x.get_mpz_t()) != 0; }
}  // namespace detail

template <class Z>
struct BasicOKElement {
  Z u;
  Z v;

  BasicOKElement(Z u_, Z v_) : u(std::move(u_)), v(std::move(v_)) {
    if (!detail::is_even(checked::sub(u, v))) throw std::domain_error("OKElement: u and v must have equal parity");
  }

  /// (u^2 + 7 v^2) / 4
  Z norm() const {
    const Z four_n = checked::add(checked::mul(u, u), checked::mul(Z(7), checked::mul(v, v)));
    return Z(four_n / 4);
  }

  /// Twice the real part, i.e. the rational integer a + conj(a).
  const Z& trace() const { return u; }

  BasicOKElement conj() const { return {u, checked::sub(Z(0), v)}; }
  BasicOKElement operator-() const { return {checked::sub(Z(0), u), checked::sub(Z(0), v)}; }
  bool operator==(const BasicOKElement&) const = default;
};

using OKElement = BasicOKElement<Int>;
using BigOKElement = BasicOKElement<BigInt>;

template <class Z>
BasicOKElement<Z> ok_add(const BasicOKElement<Z>& a, const BasicOKElement<Z>& b) {
  return {checked::add(a.u, b.u), checked::add(a.v, b.v)};
}

template <class Z>
BasicOKElement<Z> ok_mul(const BasicOKElement<Z>& a, const BasicOKElement<Z>& b) {
  const Z re = checked::sub(checked::mul(a.u, b.u), checked::mul(Z(7), checked::mul(a.v, b.v)));
  const Z im = checked::add(checked::mul(a.u, b.v), checked::mul(a.v, b.u));
  return {Z(re / 2), Z(im / 2)};
}

template <class Z>
BasicOKElement<Z> ok_pow(BasicOKElement<Z> base, unsigned e) {
  BasicOKElement<Z> r{Z(2), Z(0)};
  while (e) {
    if (e & 1u) r = ok_mul(r, base);
    e >>= 1;
    if (e) base = ok_mul(base, base);
  }
  return r;
}

/// Representation p = x^2 + 7 y^2 of an odd split prime, x, y > 0.
struct SplitRep {
  std::int64_t p;
  std::int64_t x;
  std::int64_t y;
  bool operator==(const SplitRep&) const = default;
};

/// P_p(X) = 1 + c1 X + c2 X^2 = (1 - pi^2 X)(1 - conj(pi)^2 X).
struct PpPoly {
  std::int64_t p;
  Int c1;
  Int c2;
  bool operator==(const PpPoly&) const = default;
};

/// Raised when the splitting theory is contradicted (an internal bug, not bad input).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

SplitRep split_rep(std::int64_t p);

/// Distinguished prime element above a split p: (1 + sqrt(-7))/2 for p = 2,
/// x_p + y_p sqrt(-7) otherwise.
OKElement split_prime_element(std::int64_t p);

/// pi_p^2 + conj(pi_p)^2: -3 for p = 2, 2(x^2 - 7y^2) for odd split p.
Int split_trace(std::int64_t p);

PpPoly pp_poly(std::int64_t p);

/// xi((a)) N((a)) = a^2 as an exact element of O_K.
OKElement hecke_xi_times_norm(const OKElement& alpha);

/// Generators of all ideals of norm n, one per {+-1} orbit, canonical
/// (v > 0, or v = 0 and u > 0), sorted by v ascending then u descending.
std::vector<OKElement> ideals_of_norm(std::int64_t n);

}  // namespace etaphi

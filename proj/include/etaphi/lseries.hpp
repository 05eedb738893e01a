#pragma once

// Dirichlet coefficients of L(s, eps) L(s-2, 1) (a), of the Hecke L-function
// L(s-1, xi) on Q(sqrt(-7)) (b), and of the eta-product eta(7t)^7/eta(t)
// (c = (a - b) / 8).
//
// The "1" in L(s-2, 1) is the constant function, so a(7^k) = 49^k.

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "etaphi/arith.hpp"
#include "etaphi/checked.hpp"
#include "etaphi/quadfield.hpp"

namespace etaphi {

enum class CoeffKind { A, B, C };

struct CoeffTable {
  CoeffKind kind;
  std::vector<Int> values;  // values[0] unused, values[n] for 1 <= n <= n_max

  std::int64_t n_max() const { return static_cast<std::int64_t>(values.size()) - 1; }
  Int at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n)); }
};

namespace detail {
template <class Z>
Z from_int(Int v) {
  if constexpr (std::is_same_v<Z, BigInt>) return to_big(v);
  else return v;
}
}  // namespace detail

/// a(p^k): 49^k at 7; (p^(2k+2) - 1)/(p^2 - 1) for split p;
/// (q^(2k+2) - (-1)^(k+1))/(q^2 + 1) for inert q. Divisions are exact.
template <class Z>
Z a_prime_power(std::uint64_t p, int k) {
  const Z pz = detail::from_int<Z>(static_cast<Int>(p));
  if (k == 0) return Z(1);
  const auto where = static_cast<std::int64_t>(p);
  if (p == 7) return checked::pow(Z(49), static_cast<unsigned>(k), where);
  const Z p2 = checked::mul(pz, pz, where);
  const Z top = checked::pow(p2, static_cast<unsigned>(k + 1), where);
  Z num, den;
  if (epsilon(p) == 1) {
    num = checked::sub(top, Z(1), where);
    den = checked::sub(p2, Z(1), where);
  } else {
    num = (k % 2 == 0) ? checked::add(top, Z(1), where) : checked::sub(top, Z(1), where);
    den = checked::add(p2, Z(1), where);
  }
  if (num % den != 0) throw InconsistencyError("a(p^k): inexact division at p = " + std::to_string(p));
  return Z(num / den);
}

/// b(p^k): (-7)^k at 7; the recurrence s_l = T s_(l-1) - p^2 s_(l-2) with
/// T = pi_p^2 + conj(pi_p)^2 for split p; q^k or 0 (k even/odd) for inert q.
template <class Z>
Z b_prime_power(std::uint64_t p, int k) {
  if (k == 0) return Z(1);
  const auto where = static_cast<std::int64_t>(p);
  const Z pz = detail::from_int<Z>(static_cast<Int>(p));
  if (p == 7) return checked::pow(Z(-7), static_cast<unsigned>(k), where);
  if (epsilon(p) == -1) return (k % 2 == 0) ? checked::pow(pz, static_cast<unsigned>(k), where) : Z(0);
  const Z trace = detail::from_int<Z>(split_trace(static_cast<std::int64_t>(p)));
  const Z p2 = checked::mul(pz, pz, where);
  Z prev(1), cur = trace;
  for (int l = 2; l <= k; ++l) {
    Z next = checked::sub(checked::mul(trace, cur, where), checked::mul(p2, prev, where), where);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int a_coeff(std::uint64_t n);
Int b_coeff(std::uint64_t n);

/// b(n) as the sum of alpha^2 over generators of ideals of norm n.
Int b_oracle(std::int64_t n);

CoeffTable a_table(std::uint64_t n_max, unsigned workers = 1);
CoeffTable b_table(std::uint64_t n_max, unsigned workers = 1);

/// Dirichlet coefficients through n_max of the Euler product of L(s-1, xi)
/// over primes <= p_range, expanded factor by factor from its local
/// polynomials (1 + 7X, 1 - q^2 X^2, P_p(X)).
CoeffTable euler_truncate(std::uint64_t p_range, std::uint64_t n_max);

/// c(n) = (a(n) - b(n)) / 8; throws IdentityViolation if 8 does not divide.
CoeffTable c_table(std::uint64_t n_max, unsigned workers = 1);

/// c(n) read off the q-expansion of eta(7t)^7/eta(t).
CoeffTable c_from_expansion(std::uint64_t n_max);

}  // namespace etaphi

#pragma once

// Rational-prime arithmetic: the character mod 7, factorization, and a
// least-prime-factor sieve for multiplicative functions.

#include <cstdint>
#include <functional>
#include <vector>

#include "etaphi/checked.hpp"

namespace etaphi {

struct PrimePower {
  std::uint64_t p;
  int k;
  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing
};

/// The residue symbol (n/7) = (-7/n): +1, -1, or 0 when 7 | n.
int epsilon(std::uint64_t n);

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);

/// Least prime factor for every n <= n_max (lpf[0] = lpf[1] = 0).
class LpfTable {
 public:
  explicit LpfTable(std::uint64_t n_max);
  std::uint64_t n_max() const noexcept { return lpf_.size() - 1; }
  std::uint32_t lpf(std::uint64_t n) const { return lpf_[n]; }
  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }
  Factorization factorize(std::uint64_t n) const;

 private:
  std::vector<std::uint32_t> lpf_;
  std::vector<std::uint32_t> primes_;
};

using PrimePowerRule = std::function<Int(std::uint64_t p, int k)>;

/// table[n] = prod rule(p, k) over n's factorization, table[1] = 1, table[0] = 0.
/// `workers` > 1 splits the range; the result does not depend on it.
std::vector<Int> sieve_multiplicative(const PrimePowerRule& rule, std::uint64_t n_max, unsigned workers = 1);

}  // namespace etaphi

#include "etaphi/lseries.hpp"

#include <array>
#include <stdexcept>

#include "etaphi/etaprod.hpp"

namespace etaphi {

Int a_coeff(std::uint64_t n) {
  Int v = 1;
  for (const auto& pk : factorize(n).factors)
    v = checked::mul(v, a_prime_power<Int>(pk.p, pk.k), static_cast<std::int64_t>(n));
  return v;
}

Int b_coeff(std::uint64_t n) {
  Int v = 1;
  for (const auto& pk : factorize(n).factors)
    v = checked::mul(v, b_prime_power<Int>(pk.p, pk.k), static_cast<std::int64_t>(n));
  return v;
}

Int b_oracle(std::int64_t n) {
  Int trace_sum = 0;
  Int im_sum = 0;
  for (const auto& alpha : ideals_of_norm(n)) {
    const OKElement sq = hecke_xi_times_norm(alpha);
    trace_sum = checked::add(trace_sum, sq.u, n);
    im_sum = checked::add(im_sum, sq.v, n);
  }
  if (im_sum != 0) throw InconsistencyError("b_oracle: imaginary parts do not cancel at n = " + std::to_string(n));
  // (u + v sqrt(-7)) / 2 summed; v cancels, so the value is sum(u) / 2
  if (trace_sum % 2 != 0) throw InconsistencyError("b_oracle: half-integral sum at n = " + std::to_string(n));
  return trace_sum / 2;
}

CoeffTable a_table(std::uint64_t n_max, unsigned workers) {
  return {CoeffKind::A, sieve_multiplicative([](std::uint64_t p, int k) { return a_prime_power<Int>(p, k); }, n_max, workers)};
}

CoeffTable b_table(std::uint64_t n_max, unsigned workers) {
  return {CoeffKind::B, sieve_multiplicative([](std::uint64_t p, int k) { return b_prime_power<Int>(p, k); }, n_max, workers)};
}

namespace {

// 1 + l1 X + l2 X^2 as the Euler factor denominator at p.
std::array<Int, 2> local_polynomial(std::uint64_t p) {
  if (p == 7) return {7, 0};
  if (epsilon(p) == -1) return {0, -static_cast<Int>(p) * static_cast<Int>(p)};
  const PpPoly poly = pp_poly(static_cast<std::int64_t>(p));
  return {poly.c1, poly.c2};
}

}  // namespace

CoeffTable euler_truncate(std::uint64_t p_range, std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("euler_truncate: n_max must be at least 1");
  std::vector<Int> d(n_max + 1, 0);
  d[1] = 1;
  const LpfTable lpf(n_max);
  for (const std::uint64_t p : lpf.primes()) {
    if (p > p_range) break;
    const auto [l1, l2] = local_polynomial(p);
    // power series inverse of the local polynomial, one entry per p^k <= n_max
    std::vector<Int> f{1};
    for (std::uint64_t pk = p; pk <= n_max; pk *= p) {
      const std::size_t k = f.size();
      Int next = checked::mul(-l1, f[k - 1], static_cast<std::int64_t>(pk));
      if (k >= 2) next = checked::sub(next, checked::mul(l2, f[k - 2], static_cast<std::int64_t>(pk)), static_cast<std::int64_t>(pk));
      f.push_back(next);
    }
    for (std::uint64_t n = n_max / p; n >= 1; --n) {
      if (d[n] == 0 || n % p == 0) continue;
      std::uint64_t idx = n;
      for (std::size_t k = 1; k < f.size(); ++k) {
        idx *= p;
        if (idx > n_max) break;
        d[idx] = checked::add(d[idx], checked::mul(d[n], f[k], static_cast<std::int64_t>(idx)), static_cast<std::int64_t>(idx));
      }
    }
  }
  return {CoeffKind::B, std::move(d)};
}

CoeffTable c_table(std::uint64_t n_max, unsigned workers) {
  const CoeffTable a = a_table(n_max, workers);
  const CoeffTable b = b_table(n_max, workers);
  std::vector<Int> c(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Int diff = checked::sub(a.values[n], b.values[n], static_cast<std::int64_t>(n));
    if (diff % 8 != 0) throw IdentityViolation("a(n) - b(n) is not divisible by 8", static_cast<std::int64_t>(n));
    c[n] = diff / 8;
  }
  return {CoeffKind::C, std::move(c)};
}

CoeffTable c_from_expansion(std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("c_from_expansion: n_max must be at least 1");
  const QSeries s = expand(phi_spec(7), static_cast<std::int64_t>(n_max));
  std::vector<Int> c(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) c[n] = s.coefficient(static_cast<std::int64_t>(n));
  return {CoeffKind::C, std::move(c)};
}

}  // namespace etaphi

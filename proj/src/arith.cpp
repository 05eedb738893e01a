#include "etaphi/arith.hpp"

#include <stdexcept>
#include <thread>

namespace etaphi {

int epsilon(std::uint64_t n) {
  switch (n % 7) {
    case 1:
    case 2:
    case 4:
      return 1;
    case 3:
    case 5:
    case 6:
      return -1;
    default:
      return 0;
  }
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  Factorization f;
  f.n = n;
  auto strip = [&](std::uint64_t p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) f.factors.push_back({p, k});
    return k > 0;
  };
  strip(2);
  strip(3);
  bool done = n == 1 || is_prime(n);
  for (std::uint64_t p = 5; !done && p <= n / p; p += 6) {
    const bool hit = strip(p);
    if (strip(p + 2) || hit) done = n == 1 || is_prime(n);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

LpfTable::LpfTable(std::uint64_t n_max) : lpf_(n_max + 1, 0) {
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (lpf_[i] == 0) {
      lpf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes_) {
      if (p > lpf_[i] || p * i > n_max) break;
      lpf_[p * i] = p;
    }
  }
}

Factorization LpfTable::factorize(std::uint64_t n) const {
  if (n == 0 || n > n_max()) throw std::out_of_range("LpfTable::factorize: n outside table");
  Factorization f;
  f.n = n;
  while (n > 1) {
    const std::uint64_t p = lpf_[n];
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    f.factors.push_back({p, k});
  }
  return f;
}

std::vector<Int> sieve_multiplicative(const PrimePowerRule& rule, std::uint64_t n_max, unsigned workers) {
  if (n_max < 1) throw std::invalid_argument("sieve_multiplicative: n_max must be at least 1");
  const LpfTable lpf(n_max);
  std::vector<Int> table(n_max + 1, 0);
  table[1] = 1;

  auto fill = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n < hi; ++n) {
      Int v = 1;
      for (const auto& pk : lpf.factorize(n).factors)
        v = checked::mul(v, rule(pk.p, pk.k), static_cast<std::int64_t>(n));
      table[n] = v;
    }
  };

  if (workers <= 1 || n_max < 1024) {
    // Sequential path reuses table[n / p^k], which is already final.
    for (std::uint64_t n = 2; n <= n_max; ++n) {
      const std::uint64_t p = lpf.lpf(n);
      std::uint64_t rest = n;
      int k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      table[n] = checked::mul(table[rest], rule(p, k), static_cast<std::int64_t>(n));
    }
    return table;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = (n_max - 1 + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = 2 + w * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(n_max + 1, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      try {
        fill(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  // Report the lowest failing range first so errors are deterministic too.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return table;
}

}  // namespace etaphi

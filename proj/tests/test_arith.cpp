#include "test_main.hpp"

#include "etaphi/arith.hpp"
#include "oracles.hpp"

using namespace etaphi;

TEST_CASE("epsilon values") {
  CHECK(epsilon(1) == 1);
  CHECK(epsilon(2) == 1);
  CHECK(epsilon(3) == -1);
  CHECK(epsilon(14) == 0);
  for (std::uint64_t n = 1; n <= 700; ++n) CHECK(epsilon(n) == oracle::residue_symbol_7(n));
}

TEST_CASE("epsilon is completely multiplicative on [1, 10^4]") {
  bool ok = true;
  for (std::uint64_t m = 1; m <= 10000 && ok; ++m)
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      if (epsilon(m * n) != epsilon(m) * epsilon(n)) {
        ok = false;
        break;
      }
    }
  CHECK(ok);
}

TEST_CASE("factorize") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(343).factors == std::vector<PrimePower>{{7, 3}});
  CHECK(factorize(9991).factors == std::vector<PrimePower>{{97, 1}, {103, 1}});
  CHECK(factorize(18446744073709551557ull).factors == std::vector<PrimePower>{{18446744073709551557ull, 1}});
  CHECK(factorize(4294967291ull * 4294967279ull).factors ==
        std::vector<PrimePower>{{4294967279ull, 1}, {4294967291ull, 1}});
  CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize round-trips and agrees with the lpf table") {
  const LpfTable lpf(20000);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const Factorization f = factorize(n);
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const auto& [p, k] : f.factors) {
      CHECK(p > last);
      CHECK(is_prime(p));
      last = p;
      for (int i = 0; i < k; ++i) prod *= p;
    }
    CHECK(prod == n);
    CHECK(lpf.factorize(n).factors == f.factors);
  }
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK(is_prime(1000000007));
}

TEST_CASE("sieve_multiplicative trivial rules") {
  const auto ones = sieve_multiplicative([](std::uint64_t, int) { return Int(1); }, 500);
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(ones[n] == 1);
  const auto id = sieve_multiplicative([](std::uint64_t p, int k) { return checked::pow(Int(p), k); }, 500);
  for (std::uint64_t n = 1; n <= 500; ++n) CHECK(id[n] == Int(n));
}

TEST_CASE("sieve with the a-coefficient rule matches the divisor sum") {
  auto rule = [](std::uint64_t p, int k) -> Int {
    // sum_{j<=k} eps(p^j) p^(2(k-j))
    Int s = 0;
    Int eps_pow = 1;
    for (int j = 0; j <= k; ++j) {
      s += eps_pow * checked::pow(Int(p), 2 * (k - j));
      eps_pow *= epsilon(p);
    }
    return s;
  };
  const auto t = sieve_multiplicative(rule, 2000);
  CHECK(t[12] == 168);
  for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(to_big(t[n]) == oracle::a_divisor_sum(n));
}

TEST_CASE("sieve agrees with per-n factorization for n <= 10^5 and is partition independent") {
  auto rule = [](std::uint64_t p, int k) -> Int { return Int(p % 13 + 2 * k) - 7; };
  const std::uint64_t n_max = 100000;
  const auto seq = sieve_multiplicative(rule, n_max);
  bool direct_ok = true;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    Int v = 1;
    for (const auto& [p, k] : factorize(n).factors) v *= rule(p, k);
    direct_ok &= v == seq[n];
  }
  CHECK(direct_ok);
  for (unsigned workers : {2u, 3u, 8u}) CHECK(sieve_multiplicative(rule, n_max, workers) == seq);
}

TEST_CASE("sieve overflow names n") {
  auto rule = [](std::uint64_t, int) -> Int { return Int(1) << 100; };
  try {
    (void)sieve_multiplicative(rule, 100);
    FAIL("expected overflow");
  } catch (const OverflowError& e) {
    CHECK(e.where() == 6);  // first n with two prime factors: 2^200
  }
}

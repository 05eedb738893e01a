#include "test_main.hpp"

#include <numeric>

#include "etaphi/lseries.hpp"
#include "oracles.hpp"

using namespace etaphi;

TEST_CASE("a_coeff examples") {
  CHECK(a_coeff(1) == 1);
  CHECK(a_coeff(7) == 49);
  CHECK(a_coeff(11) == 122);
  CHECK(a_coeff(12) == 168);
  CHECK(a_coeff(41) == 41 * 41 - 1);
  CHECK(a_coeff(9) == 73);
}

TEST_CASE("b_coeff examples") {
  CHECK(b_coeff(1) == 1);
  CHECK(b_coeff(2) == -3);
  CHECK(b_coeff(3) == 0);
  CHECK(b_coeff(9) == 9);
  CHECK(b_coeff(7) == -7);
  CHECK(b_coeff(4) == 5);
  CHECK(b_coeff(11) == -6);
  CHECK(b_coeff(41) == 0);
}

TEST_CASE("b_oracle examples") {
  CHECK(b_oracle(1) == 1);
  CHECK(b_oracle(2) == -3);
  CHECK(b_oracle(4) == 5);
  CHECK(b_oracle(3) == 0);
}

TEST_CASE("a against the divisor-sum oracle for n <= 10^5") {
  const std::uint64_t n_max = 100000;
  const CoeffTable a = a_table(n_max);
  const auto oracle_table = oracle::a_divisor_sum_table(n_max);
  std::uint64_t bad = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) bad += to_big(a.values[n]) != oracle_table[n];
  CHECK(bad == 0);
  for (std::uint64_t n = 1; n <= 300; ++n) CHECK(to_big(a_coeff(n)) == oracle::a_divisor_sum(n));
}

TEST_CASE("b against the ideal-enumeration oracle and the Euler product for n <= 10^4") {
  const std::uint64_t n_max = 10000;
  const CoeffTable b = b_table(n_max);
  const CoeffTable euler = euler_truncate(n_max, n_max);
  std::uint64_t bad_oracle = 0, bad_euler = 0, bad_pointwise = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    bad_oracle += b.values[n] != b_oracle(static_cast<std::int64_t>(n));
    bad_euler += b.values[n] != euler.values[n];
    if (n <= 2000) bad_pointwise += b.values[n] != b_coeff(n);
  }
  CHECK(bad_oracle == 0);
  CHECK(bad_euler == 0);
  CHECK(bad_pointwise == 0);
}

TEST_CASE("euler_truncate local factors") {
  const CoeffTable only7 = euler_truncate(7, 3000);
  // primes <= 7 only: at 7 the factor 1/(1 + 7^(1-s)) alone
  CHECK(only7.at(7) == -7);
  CHECK(only7.at(49) == 49);
  CHECK(only7.at(343) == -343);
  CHECK(only7.at(2401) == 2401);
  CHECK(only7.at(9) == 9);
  CHECK(only7.at(27) == 0);
  CHECK(only7.at(81) == 81);
  CHECK(only7.at(11) == 0);  // 11 not yet included
  const CoeffTable full = euler_truncate(50, 50);
  for (std::uint64_t n = 1; n <= 50; ++n) CHECK(full.at(n) == b_coeff(n));
}

TEST_CASE("multiplicativity on coprime pairs with product <= 10^4") {
  const std::uint64_t n_max = 10000;
  const CoeffTable a = a_table(n_max);
  const CoeffTable b = b_table(n_max);
  std::uint64_t pairs = 0, bad = 0;
  for (std::uint64_t m = 1; m <= n_max; ++m)
    for (std::uint64_t n = 1; m * n <= n_max; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      bad += a.values[m * n] != a.values[m] * a.values[n];
      bad += b.values[m * n] != b.values[m] * b.values[n];
    }
  CHECK(pairs > 50000);
  CHECK(bad == 0);
}

TEST_CASE("c_table examples and divisibility") {
  const CoeffTable c = c_table(100);
  CHECK(c.kind == CoeffKind::C);
  CHECK(c.at(1) == 0);
  CHECK(c.at(2) == 1);
  CHECK(c.at(3) == 1);
  CHECK(c.at(8) == 11);
  CHECK(c.at(11) == 16);
  CHECK(c.at(41) == 210);
  CHECK(a_table(10).at(1) == 1);
  CHECK(b_table(10).at(1) == 1);
}

TEST_CASE("c from the closed formulas equals the q-expansion for n <= 10^5") {
  const std::uint64_t n_max = 100000;
  CHECK(c_table(n_max).values == c_from_expansion(n_max).values);
}

TEST_CASE("recurrence equals the literal sum over O_K for split p <= 1000, l <= 30") {
  for (std::uint64_t p = 2; p <= 1000; ++p) {
    if (!is_prime(p) || epsilon(p) != 1) continue;
    const OKElement pi = split_prime_element(static_cast<std::int64_t>(p));
    const oracle::Elt big_pi{oracle::Big(std::to_string(static_cast<long long>(pi.u))),
                             oracle::Big(std::to_string(static_cast<long long>(pi.v)))};
    // pi for p = 2 is (1 + sqrt(-7))/2; for odd p it is x + y sqrt(-7), norm p
    for (int l = 0; l <= 30; ++l) {
      const oracle::Elt s = oracle::literal_b_sum(big_pi, l);
      CHECK(s.v == 0);
      CHECK(b_prime_power<BigInt>(p, l) == s.u / 2);
    }
  }
}

TEST_CASE("a prime-power closed forms in both integer types agree") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 29u, 97u})
    for (int k = 0; k <= 8; ++k) {
      CHECK(to_big(a_prime_power<Int>(p, k)) == a_prime_power<BigInt>(p, k));
      CHECK(to_big(b_prime_power<Int>(p, k)) == b_prime_power<BigInt>(p, k));
    }
}

#include "etaphi/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "etaphi/arith.hpp"

namespace etaphi {

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void require_split(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || epsilon(static_cast<std::uint64_t>(p)) != 1)
    throw std::domain_error("prime " + std::to_string(p) + " does not split in Q(sqrt(-7))");
}

}  // namespace

SplitRep split_rep(std::int64_t p) {
  require_split(p);
  if (p == 2) throw std::domain_error("split_rep: p = 2 has no x^2 + 7y^2 representation; use split_prime_element");
  for (std::int64_t y = 1; 7 * y * y < p; ++y) {
    const std::int64_t rest = p - 7 * y * y;
    const std::int64_t x = isqrt(rest);
    if (x > 0 && x * x == rest) return {p, x, y};
  }
  throw InconsistencyError("no representation x^2 + 7y^2 = " + std::to_string(p));
}

OKElement split_prime_element(std::int64_t p) {
  require_split(p);
  if (p == 2) return {1, 1};
  const SplitRep r = split_rep(p);
  return {2 * static_cast<Int>(r.x), 2 * static_cast<Int>(r.y)};
}

Int split_trace(std::int64_t p) {
  require_split(p);
  if (p == 2) return -3;
  const SplitRep r = split_rep(p);
  return 2 * (static_cast<Int>(r.x) * r.x - 7 * static_cast<Int>(r.y) * r.y);
}

PpPoly pp_poly(std::int64_t p) {
  return {p, -split_trace(p), static_cast<Int>(p) * p};
}

OKElement hecke_xi_times_norm(const OKElement& alpha) {
  if (alpha.u == 0 && alpha.v == 0) throw std::domain_error("hecke character is undefined at 0");
  return ok_mul(alpha, alpha);
}

std::vector<OKElement> ideals_of_norm(std::int64_t n) {
  if (n < 1) throw std::domain_error("ideals_of_norm: n must be positive");
  std::vector<OKElement> out;
  for (std::int64_t v = 0; 7 * v * v <= 4 * n; ++v) {
    const std::int64_t rest = 4 * n - 7 * v * v;
    const std::int64_t u = isqrt(rest);
    if (u * u != rest || (u - v) % 2 != 0) continue;
    if (v > 0) {
      out.emplace_back(u, v);
      if (u > 0) out.emplace_back(-u, v);
    } else if (u > 0) {
      out.emplace_back(u, 0);
    }
  }
  std::sort(out.begin(), out.end(), [](const OKElement& a, const OKElement& b) {
    return a.v != b.v ? a.v < b.v : a.u > b.u;
  });
  return out;
}

}  // namespace etaphi

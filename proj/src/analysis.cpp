#include "etaphi/analysis.hpp"

#include <future>
#include <numeric>
#include <stdexcept>

namespace etaphi {

CoeffTable coefficients_of(const EtaQuotientSpec& spec, std::int64_t n_max) {
  const QSeries s = expand(spec, n_max);
  std::vector<Int> c(static_cast<std::size_t>(n_max + 1), 0);
  for (std::int64_t n = 1; n <= n_max; ++n) c[n] = s.coefficient(n);
  return {CoeffKind::C, std::move(c)};
}

IdentityReport verify_identity(std::int64_t n_max, unsigned workers) {
  if (n_max < 1) throw std::invalid_argument("verify_identity: n_max must be at least 1");
  const auto n = static_cast<std::uint64_t>(n_max);
  const CoeffTable expansion = c_from_expansion(n);
  const CoeffTable a = a_table(n, workers);
  const CoeffTable b = b_table(n, workers);
  IdentityReport report;
  report.n_max = n_max;
  for (std::int64_t i = 1; i <= n_max; ++i) {
    const Int lhs = checked::mul(8, expansion.values[i], i);
    const Int rhs = checked::sub(a.values[i], b.values[i], i);
    if (lhs == rhs) continue;
    if (!report.first_mismatch) report.first_mismatch = i;
    ++report.mismatch_count;
  }
  report.holds = report.mismatch_count == 0;
  return report;
}

const char* to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::Ramified:
      return "ramified";
    case PrimeClass::Split:
      return "split";
    case PrimeClass::Inert:
      return "inert";
  }
  return "?";
}

PrimeClass prime_class_from_string(const std::string& s) {
  if (s == "ramified") return PrimeClass::Ramified;
  if (s == "split") return PrimeClass::Split;
  if (s == "inert") return PrimeClass::Inert;
  throw std::invalid_argument("unknown prime class '" + s + "'");
}

namespace {

BigInt big(const Int& v) { return to_big(v); }
const BigInt& big(const BigInt& v) { return v; }

}  // namespace

template <class Z>
PrimePowerMargin prime_power_margin(std::uint64_t p, int k) {
  if (k < 1) throw std::invalid_argument("prime_power_margin: k must be at least 1");
  const auto where = static_cast<std::int64_t>(p);
  const auto ku = static_cast<unsigned>(k);
  const Z a = a_prime_power<Z>(p, k);
  const Z abs_b = checked::abs(b_prime_power<Z>(p, k));
  const Z pz = detail::from_int<Z>(static_cast<Int>(p));
  const Z pk = checked::pow(pz, ku, where);

  PrimePowerMargin m;
  m.p = p;
  m.k = k;
  m.a = big(a);
  m.abs_b = big(abs_b);
  if (p == 7) {
    m.cls = PrimeClass::Ramified;
    m.holds = a == checked::mul(pk, pk, where) && a > pk && pk == abs_b;
  } else if (epsilon(p) == 1) {
    m.cls = PrimeClass::Split;
    const Z p2k = checked::mul(pk, pk, where);
    const Z k1pk = checked::mul(Z(k + 1), pk, where);
    m.holds = a > p2k && p2k >= k1pk && k1pk >= abs_b;
  } else {
    m.cls = PrimeClass::Inert;
    const Z q2p1 = checked::add(checked::mul(pz, pz, where), Z(1), where);
    const Z top = checked::sub(checked::pow(pz, 2 * ku + 2, where), Z(1), where);
    const Z lhs = checked::mul(checked::sub(a, abs_b, where), q2p1, where);
    const Z rhs = checked::sub(checked::mul(checked::sub(checked::pow(pz, ku + 2, where), Z(1), where),
                                            checked::sub(pk, Z(1), where), where),
                               Z(2), where);
    m.holds = checked::mul(a, q2p1, where) >= top && abs_b <= pk && lhs >= rhs && rhs > 0;
  }
  return m;
}

template PrimePowerMargin prime_power_margin<Int>(std::uint64_t, int);
template PrimePowerMargin prime_power_margin<BigInt>(std::uint64_t, int);

bool PositivityReport::verified() const {
  if (!failures.empty()) return false;
  for (const auto& m : casewise)
    if (!m.holds) return false;
  return true;
}

PositivityReport check_positivity(std::int64_t n_max) {
  if (n_max < 2) throw std::invalid_argument("check_positivity: n_max must be at least 2");
  PositivityReport report;
  report.n_max = n_max;
  const CoeffTable c = c_from_expansion(static_cast<std::uint64_t>(n_max));
  for (std::int64_t n = 2; n <= n_max; ++n)
    if (c.values[n] <= 0) report.failures.push_back(n);
  const LpfTable lpf(static_cast<std::uint64_t>(n_max));
  for (const std::uint64_t p : lpf.primes()) {
    int k = 1;
    for (std::uint64_t pk = p; pk <= static_cast<std::uint64_t>(n_max); pk *= p, ++k)
      report.casewise.push_back(prime_power_margin<Int>(p, k));
  }
  return report;
}

std::vector<PrimePowerMargin> check_positivity_big(std::uint64_t p_bound, int k_max) {
  std::vector<PrimePowerMargin> out;
  if (p_bound < 3) return out;
  const LpfTable lpf(p_bound - 1);
  for (const std::uint64_t p : lpf.primes())
    for (int k = 1; k <= k_max; ++k) out.push_back(prime_power_margin<BigInt>(p, k));
  return out;
}

namespace {

bool coprime_to_all(std::int64_t n, const std::vector<std::int64_t>& chosen) {
  for (const std::int64_t m : chosen)
    if (std::gcd(n, m) != 1) return false;
  return true;
}

}  // namespace

UniquenessWitness uniqueness_hypotheses(const CoeffTable& c, std::int64_t search_bound) {
  UniquenessWitness w;
  w.search_bound = (search_bound <= 0 || search_bound > c.n_max()) ? c.n_max() : search_bound;
  w.c1_zero = c.n_max() >= 1 && c.at(1) == 0;
  for (std::int64_t n = 1; n <= w.search_bound && w.indices.size() < 5; ++n) {
    if (c.at(n) == 0 || !coprime_to_all(n, w.indices)) continue;
    w.indices.push_back(n);
    w.coeffs.push_back(c.at(n));
  }
  return w;
}

bool validate_uniqueness_witness(const CoeffTable& c, const std::vector<std::int64_t>& indices) {
  if (indices.size() != 5 || c.n_max() < 1 || c.at(1) != 0) return false;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > c.n_max() || c.at(indices[i]) == 0) return false;
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (std::gcd(indices[i], indices[j]) != 1) return false;
  }
  return true;
}

NondecompWitness nondecomp_witness(std::int64_t p, const CoeffTable& table) {
  if (p < 11 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("nondecomp_witness: p must be a prime >= 11, got " + std::to_string(p));
  NondecompWitness w;
  w.p = p;
  w.bound = (p * p - 1) / 24;
  const std::int64_t window_end = w.bound + p;  // exclusive
  if (table.n_max() < window_end - 1)
    throw std::out_of_range("nondecomp_witness: table reaches " + std::to_string(table.n_max()) + ", need " +
                            std::to_string(window_end - 1));

  auto fail = [&](const std::string& what, std::int64_t n) {
    if (w.failed_condition.empty()) {
      w.failed_condition = what;
      w.first_violation = n;
    }
  };

  w.zero_range_ok = true;
  for (std::int64_t n = 1; n < w.bound; ++n) {
    if (table.at(n) != 0) {
      w.zero_range_ok = false;
      fail("zero_range", n);
      break;
    }
  }
  w.nonzero_range_ok = true;
  for (std::int64_t n = w.bound; n < window_end; ++n) {
    if (table.at(n) == 0) {
      w.nonzero_range_ok = false;
      fail("nonzero_range", n);
      break;
    }
  }
  for (std::int64_t m = 3; m < w.bound; m += 2) {
    if (2 * m >= w.bound && 2 * m < window_end) {
      w.m = m;
      break;
    }
  }
  if (!w.m) fail("no_odd_m", w.bound);
  w.c2_zero = table.at(2) == 0;
  if (!w.c2_zero) fail("c2_nonzero", 2);
  if (w.m) {
    w.c2m_nonzero = table.at(2 * *w.m) != 0;
    if (!w.c2m_nonzero) fail("c2m_zero", 2 * *w.m);
  }
  return w;
}

NondecompWitness nondecomp_witness(std::int64_t p) {
  if (p < 11 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::domain_error("nondecomp_witness: p must be a prime >= 11, got " + std::to_string(p));
  const std::int64_t bound = (p * p - 1) / 24;
  return nondecomp_witness(p, coefficients_of(phi_spec(p), bound + p - 1));
}

std::vector<ScanEntry> conjecture_scan(std::int64_t h_max, std::int64_t n_max, unsigned workers) {
  if (h_max < 2) throw std::invalid_argument("conjecture_scan: h_max must be at least 2");
  if (n_max < 1) throw std::invalid_argument("conjecture_scan: n_max must be at least 1");
  auto scan_one = [n_max](std::int64_t h) {
    const QSeries s = expand(phi_spec(h), n_max);
    ScanEntry e;
    e.h = h;
    e.n_max = n_max;
    e.order24 = s.order24();
    const auto coeffs = s.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] < 0) {
        e.first_negative_index = static_cast<std::int64_t>(k);
        break;
      }
    }
    return e;
  };

  std::vector<ScanEntry> out;
  if (workers <= 1) {
    for (std::int64_t h = 2; h <= h_max; ++h) out.push_back(scan_one(h));
    return out;
  }
  std::vector<std::future<ScanEntry>> pending;
  for (std::int64_t h = 2; h <= h_max; ++h) {
    pending.push_back(std::async(std::launch::async, scan_one, h));
    if (pending.size() >= workers) {
      for (auto& f : pending) out.push_back(f.get());
      pending.clear();
    }
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace etaphi

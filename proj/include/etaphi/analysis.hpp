#pragma once

// Executable checks on the coefficient tables: the dual-pipeline identity,
// positivity with its prime-power case bounds, the hypotheses of the
// uniqueness lemma, non-decomposability witnesses for eta(p t)^p / eta(t),
// and evidence scans of the eta_{Phi_h} non-negativity conjecture.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etaphi/checked.hpp"
#include "etaphi/etaprod.hpp"
#include "etaphi/lseries.hpp"

namespace etaphi {

/// Integer-indexed coefficients c(1..n_max) of an eta-quotient expansion.
/// std::domain_error if the leading exponent is fractional.
CoeffTable coefficients_of(const EtaQuotientSpec& spec, std::int64_t n_max);

struct IdentityReport {
  std::int64_t n_max = 0;
  bool holds = false;
  std::optional<std::int64_t> first_mismatch;
  std::int64_t mismatch_count = 0;
  bool operator==(const IdentityReport&) const = default;
};

/// c from the q-expansion against (a - b) / 8 from the closed formulas.
IdentityReport verify_identity(std::int64_t n_max, unsigned workers = 1);

enum class PrimeClass { Ramified, Split, Inert };
const char* to_string(PrimeClass c);
PrimeClass prime_class_from_string(const std::string& s);

struct PrimePowerMargin {
  std::uint64_t p = 0;
  int k = 0;
  PrimeClass cls = PrimeClass::Ramified;
  BigInt a;
  BigInt abs_b;
  bool holds = false;
  bool operator==(const PrimePowerMargin&) const = default;
};

/// The case inequality for a(p^k) > |b(p^k)|, each algebraic step asserted:
///   p = 7:  a = 7^(2k) > 7^k = |b|
///   split:  a > p^(2k) >= (k+1) p^k >= |b|
///   inert:  a (q^2+1) >= q^(2k+2) - 1,  |b| <= q^k,
///           (a - |b|)(q^2+1) >= (q^(k+2) - 1)(q^k - 1) - 2 > 0
template <class Z>
PrimePowerMargin prime_power_margin(std::uint64_t p, int k);

struct PositivityReport {
  std::int64_t n_max = 0;
  std::vector<std::int64_t> failures;  // n >= 2 with c(n) <= 0
  std::vector<PrimePowerMargin> casewise;
  bool verified() const;
  bool operator==(const PositivityReport&) const = default;
};

PositivityReport check_positivity(std::int64_t n_max);

/// Case inequalities in arbitrary precision for all primes < p_bound, 1 <= k <= k_max.
std::vector<PrimePowerMargin> check_positivity_big(std::uint64_t p_bound, int k_max);

struct UniquenessWitness {
  bool c1_zero = false;                 // hypothesis i)
  std::vector<std::int64_t> indices;    // hypothesis ii), pairwise coprime
  std::vector<Int> coeffs;
  std::int64_t search_bound = 0;
  bool found() const { return indices.size() == 5; }
  bool operator==(const UniquenessWitness&) const = default;
};

/// Greedy ascending search for five pairwise coprime indices with c != 0.
/// search_bound <= 0 means the whole table.
UniquenessWitness uniqueness_hypotheses(const CoeffTable& c, std::int64_t search_bound = 0);

/// Checks a proposed witness: pairwise coprime, all c nonzero, c(1) = 0.
bool validate_uniqueness_witness(const CoeffTable& c, const std::vector<std::int64_t>& indices);

struct NondecompWitness {
  std::int64_t p = 0;
  std::int64_t bound = 0;  // (p^2 - 1) / 24
  std::optional<std::int64_t> m;
  bool zero_range_ok = false;
  bool nonzero_range_ok = false;
  bool c2_zero = false;
  bool c2m_nonzero = false;
  std::optional<std::int64_t> first_violation;
  std::string failed_condition;  // empty when valid
  bool valid() const { return failed_condition.empty(); }
  bool operator==(const NondecompWitness&) const = default;
};

/// p must be a prime >= 11 (std::domain_error); table must reach bound + p - 1
/// (std::out_of_range).
NondecompWitness nondecomp_witness(std::int64_t p, const CoeffTable& table);
NondecompWitness nondecomp_witness(std::int64_t p);

/// first_negative_index counts from the leading term, whose exponent is
/// order24 / 24 (fractional for some h, e.g. h = 2).
struct ScanEntry {
  std::int64_t h = 0;
  std::int64_t n_max = 0;
  std::int64_t order24 = 0;
  std::optional<std::int64_t> first_negative_index;
  bool truncation_limited = true;  // absence of negatives is evidence only
  bool operator==(const ScanEntry&) const = default;
};

std::vector<ScanEntry> conjecture_scan(std::int64_t h_max, std::int64_t n_max, unsigned workers = 1);

}  // namespace etaphi

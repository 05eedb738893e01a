#pragma once

// Eta-quotients prod_i eta(i tau)^e(i) and their q-expansions, including the
// cyclotomic family eta_{Phi_h} = eta(h tau)^phi(h) / prod_{d|h} eta(d tau)^mu(d).

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etaphi/qseries.hpp"

namespace etaphi {

/// Canonical eta-quotient: scale -> nonzero exponent, scales positive.
class EtaQuotientSpec {
 public:
  EtaQuotientSpec() = default;
  explicit EtaQuotientSpec(const std::map<std::int64_t, std::int64_t>& terms);
  EtaQuotientSpec(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
    for (const auto& [scale, exponent] : terms) add(scale, exponent);
  }

  const std::map<std::int64_t, std::int64_t>& terms() const noexcept { return terms_; }

  /// Adds `exponent` at `scale`, dropping the entry if it cancels.
  void add(std::int64_t scale, std::int64_t exponent);

  /// Sum of i * e(i): the leading exponent in units of 1/24.
  std::int64_t order24() const;
  /// Sum of e(i), i.e. twice the weight.
  std::int64_t weight_twice() const;

  /// eta(k tau) substitution: every scale multiplied by `factor`.
  EtaQuotientSpec rescaled(std::int64_t factor) const;

  /// Union of two quotients (exponents add at equal scales).
  EtaQuotientSpec combined(const EtaQuotientSpec& other) const;

  /// "7:7,1:-1" style rendering, scales descending.
  std::string to_string() const;
  static EtaQuotientSpec parse(const std::string& text);

  bool operator==(const EtaQuotientSpec&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> terms_;
};

std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Spec of eta_{Phi_h}; h >= 2 (std::domain_error otherwise).
EtaQuotientSpec phi_spec(std::int64_t h);

/// Expansion through degree n_max. The returned series keeps order24 in 1/24
/// units; callers check is_integral() before reading integer-indexed
/// coefficients.
QSeries expand(const EtaQuotientSpec& spec, std::int64_t n_max);

/// Checks prod_{d|h} Phi_d(l^(h/d)) == (1 - l^h)^h / (1 - l) through degree n_max,
/// with each Phi_d built from the explicit phi/mu formula.
bool cyclotomic_check(std::int64_t h, std::int64_t n_max);

/// Named eta-quotients used as fixtures.
struct CorpusEntry {
  std::string name;
  EtaQuotientSpec spec;
};
const std::vector<CorpusEntry>& corpus();
std::optional<EtaQuotientSpec> corpus_lookup(const std::string& name);

}  // namespace etaphi

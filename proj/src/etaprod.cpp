#include "etaphi/etaprod.hpp"

#include <sstream>
#include <stdexcept>

namespace etaphi {

EtaQuotientSpec::EtaQuotientSpec(const std::map<std::int64_t, std::int64_t>& terms) {
  for (const auto& [scale, exponent] : terms) add(scale, exponent);
}

void EtaQuotientSpec::add(std::int64_t scale, std::int64_t exponent) {
  if (scale < 1) throw std::invalid_argument("eta-quotient scales must be positive");
  if (exponent == 0) return;
  const std::int64_t merged = (terms_[scale] += exponent);
  if (merged == 0) terms_.erase(scale);
}

std::int64_t EtaQuotientSpec::order24() const {
  std::int64_t s = 0;
  for (const auto& [scale, exponent] : terms_) s += scale * exponent;
  return s;
}

std::int64_t EtaQuotientSpec::weight_twice() const {
  std::int64_t s = 0;
  for (const auto& [scale, exponent] : terms_) s += exponent;
  return s;
}

EtaQuotientSpec EtaQuotientSpec::rescaled(std::int64_t factor) const {
  if (factor < 1) throw std::invalid_argument("rescale factor must be positive");
  EtaQuotientSpec out;
  for (const auto& [scale, exponent] : terms_) out.add(scale * factor, exponent);
  return out;
}

EtaQuotientSpec EtaQuotientSpec::combined(const EtaQuotientSpec& other) const {
  EtaQuotientSpec out = *this;
  for (const auto& [scale, exponent] : other.terms_) out.add(scale, exponent);
  return out;
}

std::string EtaQuotientSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << ',';
    os << it->first << ':' << it->second;
    first = false;
  }
  return os.str();
}

EtaQuotientSpec EtaQuotientSpec::parse(const std::string& text) {
  EtaQuotientSpec out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed eta term '" + item + "', expected scale:exponent");
    std::size_t used_scale = 0, used_exp = 0;
    const std::string scale_text = item.substr(0, colon);
    const std::string exp_text = item.substr(colon + 1);
    std::int64_t scale = 0, exponent = 0;
    try {
      scale = std::stoll(scale_text, &used_scale);
      exponent = std::stoll(exp_text, &used_exp);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed eta term '" + item + "'");
    }
    if (used_scale != scale_text.size() || used_exp != exp_text.size())
      throw std::invalid_argument("malformed eta term '" + item + "'");
    out.add(scale, exponent);
  }
  if (out.terms().empty()) throw std::invalid_argument("empty eta-quotient");
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::domain_error("euler_phi: n must be positive");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(std::int64_t n) {
  if (n < 1) throw std::domain_error("moebius: n must be positive");
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

EtaQuotientSpec phi_spec(std::int64_t h) {
  if (h < 2) throw std::domain_error("phi_spec: h must be at least 2");
  EtaQuotientSpec spec;
  spec.add(h, euler_phi(h));
  for (const std::int64_t d : divisors(h)) spec.add(d, -moebius(d));
  return spec;
}

namespace {

// Applies prod (factor)^exponent in place: multiplications before divisions.
template <class TailFn>
void apply_factors(std::vector<Int>& coeffs, const std::map<std::int64_t, std::int64_t>& terms, TailFn tail_for) {
  const auto max_degree = static_cast<std::int64_t>(coeffs.size()) - 1;
  for (const auto& [scale, exponent] : terms) {
    if (exponent <= 0) continue;
    const auto tail = tail_for(scale, max_degree);
    for (std::int64_t i = 0; i < exponent; ++i) mul_unit_sparse(coeffs, tail);
  }
  for (const auto& [scale, exponent] : terms) {
    if (exponent >= 0) continue;
    const auto tail = tail_for(scale, max_degree);
    for (std::int64_t i = 0; i < -exponent; ++i) div_unit_sparse(coeffs, tail);
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

QSeries expand(const EtaQuotientSpec& spec, std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("expand: n_max must be at least 1");
  const std::int64_t order24 = spec.order24();
  const std::int64_t last = floor_div(24 * n_max - order24, 24);
  const std::int64_t trunc = std::max<std::int64_t>(last + 1, 1);
  std::vector<Int> coeffs(static_cast<std::size_t>(trunc), 0);
  coeffs[0] = 1;
  apply_factors(coeffs, spec.terms(),
                [](std::int64_t scale, std::int64_t max_degree) { return pentagonal_terms(max_degree, scale); });
  return QSeries(order24, std::move(coeffs));
}

namespace {

// (1 - l^m) exponents describing Phi_d(l^stretch) via the explicit formula.
std::map<std::int64_t, std::int64_t> cyclotomic_binomials(std::int64_t d, std::int64_t stretch) {
  std::map<std::int64_t, std::int64_t> b;
  b[d * stretch] += euler_phi(d);
  for (const std::int64_t e : divisors(d)) b[e * stretch] -= moebius(e);
  return b;
}

QSeries binomial_product(const std::map<std::int64_t, std::int64_t>& binomials, std::int64_t n_max) {
  std::vector<Int> coeffs(static_cast<std::size_t>(n_max + 1), 0);
  coeffs[0] = 1;
  apply_factors(coeffs, binomials, [](std::int64_t degree, std::int64_t) { return binomial_terms(degree); });
  return QSeries(0, std::move(coeffs));
}

}  // namespace

bool cyclotomic_check(std::int64_t h, std::int64_t n_max) {
  if (h < 2) throw std::domain_error("cyclotomic_check: h must be at least 2");
  if (n_max < 0) throw std::invalid_argument("cyclotomic_check: n_max must be nonnegative");
  QSeries lhs = QSeries::one(n_max + 1);
  for (const std::int64_t d : divisors(h)) lhs = mul(lhs, binomial_product(cyclotomic_binomials(d, h / d), n_max));
  const QSeries rhs = binomial_product({{h, h}, {1, -1}}, n_max);
  return lhs == rhs;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"phi7", phi_spec(7)},
      {"eta48_cubed_over_eta24", EtaQuotientSpec({{48, 3}, {24, -1}})},
      {"phi4_at_8tau", phi_spec(4).rescaled(8)},
      {"phi6_at_12tau", phi_spec(6).rescaled(12)},
  };
  return entries;
}

std::optional<EtaQuotientSpec> corpus_lookup(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e.spec;
  return std::nullopt;
}

}  // namespace etaphi

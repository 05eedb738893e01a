#include "etaphi/qseries.hpp"

#include <algorithm>
#include <string>

namespace etaphi {

std::vector<SparseTerm> pentagonal_terms(std::int64_t max_degree, std::int64_t scale) {
  if (scale < 1) throw std::invalid_argument("pentagonal_terms: scale must be positive");
  std::vector<SparseTerm> out;
  for (std::int64_t k = 1;; ++k) {
    // generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2, sign (-1)^k
    const std::int64_t lo = k * (3 * k - 1) / 2 * scale;
    const std::int64_t hi = k * (3 * k + 1) / 2 * scale;
    if (lo > max_degree) break;
    const Int sign = (k % 2) ? -1 : 1;
    out.push_back({lo, sign});
    if (hi <= max_degree) out.push_back({hi, sign});
  }
  return out;
}

namespace {

inline Int fma_checked(Int acc, Int coeff, Int x, std::int64_t where) {
  if (coeff == 1) return checked::add(acc, x, where);
  if (coeff == -1) return checked::sub(acc, x, where);
  return checked::add(acc, checked::mul(coeff, x, where), where);
}

}  // namespace

void mul_unit_sparse(std::span<Int> coeffs, std::span<const SparseTerm> tail) {
  const auto n_terms = static_cast<std::int64_t>(coeffs.size());
  // Descending so every read sees an unmodified lower coefficient.
  for (std::int64_t n = n_terms - 1; n >= 0; --n) {
    Int acc = coeffs[n];
    for (const auto& t : tail) {
      if (t.degree > n) break;
      acc = fma_checked(acc, t.coeff, coeffs[n - t.degree], n);
    }
    coeffs[n] = acc;
  }
}

void div_unit_sparse(std::span<Int> coeffs, std::span<const SparseTerm> tail) {
  const auto n_terms = static_cast<std::int64_t>(coeffs.size());
  for (std::int64_t n = 0; n < n_terms; ++n) {
    Int acc = coeffs[n];
    for (const auto& t : tail) {
      if (t.degree > n) break;
      acc = fma_checked(acc, -t.coeff, coeffs[n - t.degree], n);
    }
    coeffs[n] = acc;
  }
}

QSeries::QSeries(std::int64_t order24, std::vector<Int> coeffs)
    : order24_(order24), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("QSeries: trunc must be at least 1");
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Int c) { return c != 0; });
  if (first != coeffs_.end() && first != coeffs_.begin()) {
    const auto shift = first - coeffs_.begin();
    order24_ += 24 * shift;
    coeffs_.erase(coeffs_.begin(), first);
  }
}

QSeries QSeries::one(std::int64_t trunc) { return monomial(0, 1, trunc); }

QSeries QSeries::monomial(std::int64_t exponent, Int coeff, std::int64_t trunc) {
  if (trunc < 1) throw std::invalid_argument("QSeries: trunc must be at least 1");
  std::vector<Int> c(static_cast<std::size_t>(trunc), 0);
  c[0] = coeff;
  return QSeries(24 * exponent, std::move(c));
}

bool QSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

std::int64_t QSeries::leading_exponent() const {
  if (!is_integral())
    throw std::domain_error("QSeries: leading exponent " + std::to_string(order24_) + "/24 is fractional");
  return order24_ / 24;
}

std::int64_t QSeries::max_degree() const { return leading_exponent() + trunc() - 1; }

Int QSeries::coefficient(std::int64_t n) const {
  const std::int64_t lead = leading_exponent();
  if (n >= lead + trunc()) throw std::out_of_range("QSeries: degree " + std::to_string(n) + " beyond truncation");
  if (n < lead) return 0;
  return coeffs_[static_cast<std::size_t>(n - lead)];
}

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::int64_t trunc = std::min(a.trunc(), b.trunc());
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Int> out(static_cast<std::size_t>(trunc), 0);
  for (std::int64_t i = 0; i < trunc; ++i) {
    if (ac[i] == 0) continue;
    for (std::int64_t j = 0; i + j < trunc; ++j) {
      if (bc[j] == 0) continue;
      out[i + j] = checked::add(out[i + j], checked::mul(ac[i], bc[j], i + j), i + j);
    }
  }
  return QSeries(a.order24() + b.order24(), std::move(out));
}

QSeries inverse(const QSeries& a) {
  const auto ac = a.coeffs();
  const Int lead = ac[0];
  if (lead != 1 && lead != -1)
    throw NotInvertible("QSeries: leading coefficient " + to_string(lead) + " is not a unit");
  const std::int64_t trunc = a.trunc();
  std::vector<Int> out(static_cast<std::size_t>(trunc), 0);
  out[0] = lead;
  for (std::int64_t k = 1; k < trunc; ++k) {
    Int acc = 0;
    for (std::int64_t j = 1; j <= k; ++j) {
      if (ac[j] == 0) continue;
      acc = checked::add(acc, checked::mul(ac[j], out[k - j], k), k);
    }
    out[k] = checked::mul(-lead, acc, k);
  }
  return QSeries(-a.order24(), std::move(out));
}

QSeries pow(const QSeries& a, std::int64_t e) {
  if (e == 0) return QSeries::one(a.trunc());
  QSeries base = e < 0 ? inverse(a) : a;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  QSeries result = QSeries::one(a.trunc());
  while (k) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

QSeries euler_series(std::int64_t trunc) {
  if (trunc < 1) throw std::invalid_argument("euler_series: trunc must be at least 1");
  std::vector<Int> c(static_cast<std::size_t>(trunc), 0);
  c[0] = 1;
  for (const auto& t : pentagonal_terms(trunc - 1)) c[static_cast<std::size_t>(t.degree)] = t.coeff;
  return QSeries(0, std::move(c));
}

bool agree_on_overlap(const QSeries& a, const QSeries& b) {
  if (a.is_zero() || b.is_zero()) {
    // a zero window says nothing about the leading exponent; compare values only
    const std::int64_t lo = std::min(a.order24(), b.order24());
    const std::int64_t hi = std::min(a.precision24(), b.precision24());
    for (std::int64_t e24 = lo; e24 < hi; e24 += 24) {
      auto at = [&](const QSeries& s) -> Int {
        if (e24 < s.order24() || (e24 - s.order24()) % 24 != 0) return 0;
        return s.coeffs()[static_cast<std::size_t>((e24 - s.order24()) / 24)];
      };
      if (at(a) != at(b)) return false;
    }
    return true;
  }
  if (a.order24() != b.order24()) {
    // a nonzero leading term of one must fall beyond the other's window
    return false;
  }
  const std::int64_t n = std::min(a.trunc(), b.trunc());
  return std::equal(a.coeffs().begin(), a.coeffs().begin() + n, b.coeffs().begin());
}

}  // namespace etaphi

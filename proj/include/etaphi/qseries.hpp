#pragma once

// Truncated Laurent series in q with exact integer coefficients.
//
// A series is stored relative to its leading exponent, which is kept in
// units of 1/24 so that every eta-quotient shares one representation:
// coefficient k multiplies q^((order24 + 24 k) / 24). The series is known
// modulo q^(precision24 / 24) with precision24 = order24 + 24 * trunc.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "etaphi/checked.hpp"

namespace etaphi {

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One nonconstant term of a sparse series with constant term 1.
struct SparseTerm {
  std::int64_t degree;
  Int coeff;
  bool operator==(const SparseTerm&) const = default;
};

/// Nonconstant terms of prod_{n >= 1} (1 - q^(scale n)) up to degree `max_degree`,
/// from the pentagonal number theorem, sorted by degree.
std::vector<SparseTerm> pentagonal_terms(std::int64_t max_degree, std::int64_t scale = 1);

/// Nonconstant term of the binomial (1 - q^degree).
inline std::vector<SparseTerm> binomial_terms(std::int64_t degree) { return {{degree, -1}}; }

/// In-place multiply of a dense coefficient window by (1 + sum tail).
void mul_unit_sparse(std::span<Int> coeffs, std::span<const SparseTerm> tail);

/// In-place divide of a dense coefficient window by (1 + sum tail).
void div_unit_sparse(std::span<Int> coeffs, std::span<const SparseTerm> tail);

class QSeries {
 public:
  /// Leading zeros are stripped (moving order24 up); trunc = coeffs.size().
  QSeries(std::int64_t order24, std::vector<Int> coeffs);

  static QSeries one(std::int64_t trunc);
  static QSeries monomial(std::int64_t exponent, Int coeff, std::int64_t trunc);

  std::int64_t order24() const noexcept { return order24_; }
  std::int64_t trunc() const noexcept { return static_cast<std::int64_t>(coeffs_.size()); }
  std::int64_t precision24() const noexcept { return order24_ + 24 * trunc(); }
  std::span<const Int> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_integral() const noexcept { return order24_ % 24 == 0; }

  /// Leading exponent as an integer; throws std::domain_error if fractional.
  std::int64_t leading_exponent() const;

  /// Coefficient of q^n for integral series. Zero below the leading term;
  /// std::out_of_range at or beyond the precision.
  Int coefficient(std::int64_t n) const;

  /// Largest n with a known coefficient (integral series only).
  std::int64_t max_degree() const;

  bool operator==(const QSeries&) const = default;

 private:
  std::int64_t order24_;
  std::vector<Int> coeffs_;
};

QSeries mul(const QSeries& a, const QSeries& b);
QSeries inverse(const QSeries& a);
QSeries pow(const QSeries& a, std::int64_t e);

/// prod_{n >= 1} (1 - q^n) with `trunc` coefficients (degrees 0..trunc-1).
QSeries euler_series(std::int64_t trunc);

/// Same leading exponent and equal coefficients on the common window.
bool agree_on_overlap(const QSeries& a, const QSeries& b);

}  // namespace etaphi

#pragma once

#include "qtheta/qpoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qtheta {

/// Raised when two series of different truncation orders meet in one operation.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Truncated formal power series in x with QPoly coefficients, i.e. an element
 * of Z[q][[x]] / (x^N).
 *
 * The order N is explicit and never changes silently: coefficients() always
 * has exactly N entries, trailing zeros included, and binary operations
 * require equal orders.
 */
class QSeries {
 public:
  /// Zero series of the given order (order >= 1).
  explicit QSeries(std::size_t order);
  explicit QSeries(std::vector<QPoly> coeffs);

  /// 1 + 0*x + ... at the given order.
  static QSeries identity(std::size_t order);

  /// f(x) = sum_{n>=0} q^{n(n+1)/2} x^n truncated to `order` terms.
  static QSeries partial_theta(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<QPoly>& coefficients() const noexcept { return coeffs_; }

  /// [x^n]; throws std::out_of_range for n >= order().
  const QPoly& coeff(std::size_t n) const;

  /// Keeps the first `order` coefficients; `order` must not exceed order().
  QSeries truncated(std::size_t order) const;

  /// Multiplication by x: coefficients move up by one, the top one falls off.
  QSeries shifted_x() const;

  /// Coefficient-wise multiplication by a polynomial in q.
  QSeries scaled(const QPoly& factor) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

  QSeries& operator+=(const QSeries& rhs);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }

 private:
  std::vector<QPoly> coeffs_;
};

/// Truncated Cauchy product; orders must match.
QSeries mul(const QSeries& a, const QSeries& b);

/// a^k by binary exponentiation; a^0 is the identity series.
QSeries pow(const QSeries& a, unsigned k);

/// Multiplicative inverse. Requires a's constant term to be exactly 1.
QSeries invert(const QSeries& a);

/// x -> q*x: [x^n] of the result is q^n * a_n.
QSeries substitute_qx(const QSeries& a);

inline const QPoly& coeff(const QSeries& a, std::size_t n) { return a.coeff(n); }

}  // namespace qtheta

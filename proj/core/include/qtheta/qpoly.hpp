#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtheta {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown by QPoly::parse; carries the byte offset where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/**
 * Polynomial in the formal variable q with arbitrary-precision integer
 * coefficients.
 *
 * Storage is dense: coeffs()[e] is the coefficient of q^e. The sequence is
 * always normalized, i.e. either empty (the zero polynomial) or ending in a
 * nonzero coefficient, so structural equality is polynomial equality.
 */
class QPoly {
 public:
  QPoly() = default;
  QPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  QPoly(int constant) : QPoly(BigInt(constant)) {}  // NOLINT
  explicit QPoly(std::vector<BigInt> coeffs);

  /// c * q^e
  static QPoly monomial(const BigInt& c, std::size_t exponent);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of q^e; zero past the degree.
  BigInt coefficient(std::size_t e) const;

  std::optional<std::size_t> degree() const;
  std::optional<BigInt> leading_coeff() const;

  /// Value at q = 1 (sum of coefficients).
  BigInt eval_at_one() const;

  /// Canonical text, terms in increasing exponent: "q^2 - q^3".
  std::string render() const;
  static QPoly parse(std::string_view text);

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(QPoly a);

  /// Multiplies by q^shift without a full convolution.
  QPoly shifted(std::size_t shift) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

inline QPoly add(const QPoly& a, const QPoly& b) { return a + b; }
inline QPoly sub(const QPoly& a, const QPoly& b) { return a - b; }
inline QPoly neg(const QPoly& a) { return -a; }
inline QPoly mul(const QPoly& a, const QPoly& b) { return a * b; }

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace qtheta

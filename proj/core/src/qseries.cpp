#include "qtheta/qseries.hpp"

#include <string>
#include <utility>

namespace qtheta {

namespace {

void require_same_order(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order()) {
    throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
  }
}

}  // namespace

QSeries::QSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) throw std::invalid_argument("series order must be at least 1");
}

QSeries::QSeries(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series order must be at least 1");
}

QSeries QSeries::identity(std::size_t order) {
  QSeries s(order);
  s.coeffs_[0] = QPoly(1);
  return s;
}

QSeries QSeries::partial_theta(std::size_t order) {
  QSeries s(order);
  for (std::size_t n = 0; n < order; ++n) s.coeffs_[n] = QPoly::monomial(1, n * (n + 1) / 2);
  return s;
}

const QPoly& QSeries::coeff(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw std::out_of_range("coefficient index " + std::to_string(n) +
                            " outside series of order " + std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

QSeries QSeries::truncated(std::size_t order) const {
  if (order == 0 || order > coeffs_.size()) {
    throw std::invalid_argument("cannot truncate series of order " +
                                std::to_string(coeffs_.size()) + " to order " +
                                std::to_string(order));
  }
  return QSeries(std::vector<QPoly>(coeffs_.begin(), coeffs_.begin() + order));
}

QSeries QSeries::shifted_x() const {
  QSeries s(order());
  for (std::size_t n = 1; n < order(); ++n) s.coeffs_[n] = coeffs_[n - 1];
  return s;
}

QSeries QSeries::scaled(const QPoly& factor) const {
  QSeries s(order());
  for (std::size_t n = 0; n < order(); ++n) s.coeffs_[n] = coeffs_[n] * factor;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t n = 0; n < order(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

QSeries mul(const QSeries& a, const QSeries& b) {
  require_same_order(a, b);
  const std::size_t order = a.order();
  std::vector<QPoly> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    const QPoly& ai = a.coeff(i);
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; i + j < order; ++j) out[i + j] += ai * b.coeff(j);
  }
  return QSeries(std::move(out));
}

QSeries pow(const QSeries& a, unsigned k) {
  QSeries result = QSeries::identity(a.order());
  QSeries base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

QSeries invert(const QSeries& a) {
  if (a.coeff(0) != QPoly(1)) {
    throw std::invalid_argument("series inversion needs constant term 1, got " +
                                a.coeff(0).render());
  }
  const std::size_t order = a.order();
  std::vector<QPoly> b(order);
  b[0] = QPoly(1);
  // b_n = -sum_{j=1}^{n} a_j b_{n-j}
  for (std::size_t n = 1; n < order; ++n) {
    QPoly acc;
    for (std::size_t j = 1; j <= n; ++j) {
      if (!a.coeff(j).is_zero()) acc += a.coeff(j) * b[n - j];
    }
    b[n] = -acc;
  }
  return QSeries(std::move(b));
}

QSeries substitute_qx(const QSeries& a) {
  std::vector<QPoly> out(a.order());
  for (std::size_t n = 0; n < a.order(); ++n) out[n] = a.coeff(n).shifted(n);
  return QSeries(std::move(out));
}

}  // namespace qtheta

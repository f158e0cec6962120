#pragma once

#include "qtheta/binomial.hpp"
#include "qtheta/qpoly.hpp"
#include "qtheta/qseries.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qtheta {

/// Which route computes <n k>_q, the coefficient of x^{n-k} in f(x)^{k+1}.
enum class Method {
  series,        // power of the truncated partial theta series
  rec4,          // convolution recursion from f^{k+1} = f * f^k
  rec5,          // recursion from f(x) = 1 + q x f(qx)
  partitions,    // weighted sum over partitions with first part k+1
  compositions,  // multinomial expansion over multiplicity vectors
};

inline constexpr Method kAllMethods[] = {Method::series, Method::rec4, Method::rec5,
                                         Method::partitions, Method::compositions};

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Enumeration-based engines refuse n + 1 above this.
inline constexpr unsigned kEnumerationLimit = 40;

/**
 * Computes <n k>_q for 0 <= k <= n.
 *
 * Engines never share state with one another. Memo tables live inside the
 * instance and are not synchronized: use one instance per thread.
 */
class QBinomialEngine {
 public:
  virtual ~QBinomialEngine() = default;

  virtual Method method() const noexcept = 0;

  /// Throws std::invalid_argument unless 0 <= k <= n.
  QPoly operator()(long n, long k);

 protected:
  virtual QPoly compute(unsigned n, unsigned k) = 0;
};

class SeriesEngine final : public QBinomialEngine {
 public:
  Method method() const noexcept override { return Method::series; }

 protected:
  QPoly compute(unsigned n, unsigned k) override;

 private:
  // f^{k+1} per k, at the largest order requested so far.
  std::map<unsigned, QSeries> powers_;
};

class Rec4Engine final : public QBinomialEngine {
 public:
  Method method() const noexcept override { return Method::rec4; }

 protected:
  QPoly compute(unsigned n, unsigned k) override;

 private:
  std::map<std::pair<unsigned, unsigned>, QPoly> memo_;
};

class Rec5Engine final : public QBinomialEngine {
 public:
  Method method() const noexcept override { return Method::rec5; }

  /// <m r>_q extended to m, r >= -1 by the boundary rules
  /// <-1 -1> = 1, <-1 j> = 0, <m -1> = 0 (m >= 0) and <m r> = 0 for r > m.
  QPoly extended(long m, long r);

 protected:
  QPoly compute(unsigned n, unsigned k) override;

 private:
  std::map<std::pair<unsigned, unsigned>, QPoly> memo_;
  PascalTable pascal_;
};

class PartitionEngine final : public QBinomialEngine {
 public:
  Method method() const noexcept override { return Method::partitions; }

 protected:
  QPoly compute(unsigned n, unsigned k) override;
};

class CompositionEngine final : public QBinomialEngine {
 public:
  Method method() const noexcept override { return Method::compositions; }

 protected:
  QPoly compute(unsigned n, unsigned k) override;
};

std::unique_ptr<QBinomialEngine> make_engine(Method m);

/// One-shot conveniences; each builds a fresh engine.
QPoly qbinom_series(long n, long k);
QPoly qbinom_rec4(long n, long k);
QPoly qbinom_rec5(long n, long k);
QPoly qbinom_partitions(long n, long k);
QPoly qbinom_compositions(long n, long k);

/// u_k(n, q) = [x^n] f(x)^{-k} from the closed sum over <n-1 j>_q,
/// with u_k(0, q) = 1. Requires k >= 1.
QPoly u_formula(long k, long n, QBinomialEngine& engine);
QPoly u_formula(long k, long n);

/// [x^0..x^{order-1}] of 1/f^k by direct series inversion.
std::vector<QPoly> u_series(long k, std::size_t order);

/// Lower-triangular table of <n k>_q for 0 <= k <= n < rows.
struct Triangle {
  Method method = Method::rec4;
  std::vector<std::vector<QPoly>> rows;

  std::size_t size() const noexcept { return rows.size(); }
  /// Zero above the diagonal.
  QPoly at(std::size_t n, std::size_t k) const;

  friend bool operator==(const Triangle& a, const Triangle& b) { return a.rows == b.rows; }
};

Triangle triangle(std::size_t rows, Method method);
Triangle triangle(std::size_t rows, QBinomialEngine& engine);

/// The six-row table of first terms, expanded, hand-entered.
const std::vector<std::vector<QPoly>>& reference_rows();

/// <n k>_q has nonnegative coefficients and top term (k+1) q^{C(n-k+1,2)}.
/// Requires 0 <= k < n.
bool highest_term_check(const QPoly& value, long n, long k);
bool highest_term_check(long n, long k, QBinomialEngine& engine);
bool highest_term_check(long n, long k);

}  // namespace qtheta

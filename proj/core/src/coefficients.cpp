#include "qtheta/coefficients.hpp"

#include "qtheta/partitions.hpp"

#include <stdexcept>
#include <string>

namespace qtheta {

namespace {

std::size_t triangular(std::size_t m) { return m * (m + 1) / 2; }

void require_enumerable(unsigned n) {
  if (n + 1 > kEnumerationLimit) {
    throw std::invalid_argument("enumeration engines are limited to n + 1 <= " +
                                std::to_string(kEnumerationLimit) + ", got n = " +
                                std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::rec4: return "rec4";
    case Method::rec5: return "rec5";
    case Method::partitions: return "partitions";
    case Method::compositions: return "compositions";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

QPoly QBinomialEngine::operator()(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("need 0 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
  return compute(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

QPoly SeriesEngine::compute(unsigned n, unsigned k) {
  const std::size_t needed = n - k + 1;
  auto it = powers_.find(k);
  if (it == powers_.end() || it->second.order() < needed) {
    // Growing geometrically keeps row-by-row triangle builds from recomputing
    // the power once per row; a longer truncation has the same prefix.
    std::size_t order = needed;
    if (it != powers_.end()) order = std::max(needed, 2 * it->second.order());
    QSeries power = pow(QSeries::partial_theta(order), k + 1);
    it = powers_.insert_or_assign(k, std::move(power)).first;
  }
  return it->second.coeff(n - k);
}

QPoly Rec4Engine::compute(unsigned n, unsigned k) {
  if (k == 0) return QPoly::monomial(1, triangular(n));
  // n >= k >= 1 here, so the <0 k> = [k=0] base case is reached through k = 0.
  if (auto it = memo_.find({n, k}); it != memo_.end()) return it->second;
  QPoly sum;
  for (unsigned j = 0; j <= n - k; ++j) sum += compute(n - j - 1, k - 1).shifted(triangular(j));
  memo_.emplace(std::pair{n, k}, sum);
  return sum;
}

QPoly Rec5Engine::extended(long m, long r) {
  if (m == -1) return r == -1 ? QPoly(1) : QPoly();
  if (r == -1 || r > m) return {};
  return compute(static_cast<unsigned>(m), static_cast<unsigned>(r));
}

QPoly Rec5Engine::compute(unsigned n, unsigned k) {
  if (auto it = memo_.find({n, k}); it != memo_.end()) return it->second;
  const long m = static_cast<long>(n) - static_cast<long>(k) - 1;
  QPoly sum;
  for (unsigned j = 0; j <= k + 1; ++j) {
    QPoly inner = extended(m, static_cast<long>(j) - 1);
    if (!inner.is_zero()) sum += QPoly(pascal_(k + 1, j)) * inner;
  }
  QPoly value = sum.shifted(n - k);
  memo_.emplace(std::pair{n, k}, value);
  return value;
}

QPoly PartitionEngine::compute(unsigned n, unsigned k) {
  require_enumerable(n);
  QPoly sum;
  for (const auto& lambda : enumerate_p(n + 1, k + 1)) sum += weight(lambda);
  return sum;
}

QPoly CompositionEngine::compute(unsigned n, unsigned k) {
  require_enumerable(n);
  QPoly sum;
  for (const auto& i : enumerate_compositions(n + 1, k + 1)) {
    sum += weight_via_multiplicities(i, k + 1);
  }
  return sum;
}

std::unique_ptr<QBinomialEngine> make_engine(Method m) {
  switch (m) {
    case Method::series: return std::make_unique<SeriesEngine>();
    case Method::rec4: return std::make_unique<Rec4Engine>();
    case Method::rec5: return std::make_unique<Rec5Engine>();
    case Method::partitions: return std::make_unique<PartitionEngine>();
    case Method::compositions: return std::make_unique<CompositionEngine>();
  }
  throw std::invalid_argument("unknown method");
}

QPoly qbinom_series(long n, long k) { return SeriesEngine{}(n, k); }
QPoly qbinom_rec4(long n, long k) { return Rec4Engine{}(n, k); }
QPoly qbinom_rec5(long n, long k) { return Rec5Engine{}(n, k); }
QPoly qbinom_partitions(long n, long k) { return PartitionEngine{}(n, k); }
QPoly qbinom_compositions(long n, long k) { return CompositionEngine{}(n, k); }

QPoly u_formula(long k, long n, QBinomialEngine& engine) {
  if (k < 1) throw std::invalid_argument("u_k(n, q) needs k >= 1, got " + std::to_string(k));
  if (n < 0) throw std::invalid_argument("u_k(n, q) needs n >= 0, got " + std::to_string(n));
  if (n == 0) return QPoly(1);
  QPoly sum;
  for (long j = 0; j <= n - 1; ++j) {
    QPoly term = engine(n - 1, j) *
                 QPoly(binomial(static_cast<unsigned>(k + j), static_cast<unsigned>(k - 1)));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return (-sum).shifted(static_cast<std::size_t>(n));
}

QPoly u_formula(long k, long n) {
  Rec4Engine engine;
  return u_formula(k, n, engine);
}

std::vector<QPoly> u_series(long k, std::size_t order) {
  if (k < 1) throw std::invalid_argument("1/f^k needs k >= 1, got " + std::to_string(k));
  if (order < 1) throw std::invalid_argument("series order must be at least 1");
  return invert(pow(QSeries::partial_theta(order), static_cast<unsigned>(k))).coefficients();
}

QPoly Triangle::at(std::size_t n, std::size_t k) const {
  if (n >= rows.size()) throw std::out_of_range("row " + std::to_string(n) + " not in triangle");
  return k <= n ? rows[n][k] : QPoly();
}

Triangle triangle(std::size_t rows, QBinomialEngine& engine) {
  if (rows < 1) throw std::invalid_argument("triangle needs at least one row");
  Triangle t;
  t.method = engine.method();
  t.rows.resize(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    t.rows[n].reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      t.rows[n].push_back(engine(static_cast<long>(n), static_cast<long>(k)));
    }
  }
  return t;
}

Triangle triangle(std::size_t rows, Method method) {
  auto engine = make_engine(method);
  return triangle(rows, *engine);
}

const std::vector<std::vector<QPoly>>& reference_rows() {
  static const std::vector<std::vector<QPoly>> rows = [] {
    const std::vector<std::vector<const char*>> text = {
        {"1"},
        {"q", "1"},
        {"q^3", "2*q", "1"},
        {"q^6", "q^2 + 2*q^3", "3*q", "1"},
        {"q^10", "2*q^4 + 2*q^6", "3*q^2 + 3*q^3", "4*q", "1"},
        {"q^15", "q^6 + 2*q^7 + 2*q^10", "q^3 + 6*q^4 + 3*q^6", "6*q^2 + 4*q^3", "5*q", "1"},
    };
    std::vector<std::vector<QPoly>> out;
    for (const auto& row : text) {
      auto& parsed = out.emplace_back();
      for (const char* cell : row) parsed.push_back(QPoly::parse(cell));
    }
    return out;
  }();
  return rows;
}

bool highest_term_check(const QPoly& value, long n, long k) {
  if (k < 0 || k >= n) {
    throw std::invalid_argument("highest-term law covers 0 <= k < n, got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  }
  for (const auto& c : value.coeffs()) {
    if (c < 0) return false;
  }
  const auto degree = value.degree();
  const auto lead = value.leading_coeff();
  return degree && *degree == triangular(static_cast<std::size_t>(n - k)) && *lead == k + 1;
}

bool highest_term_check(long n, long k, QBinomialEngine& engine) {
  if (k < 0 || k >= n) return highest_term_check(QPoly(), n, k);  // throws
  return highest_term_check(engine(n, k), n, k);
}

bool highest_term_check(long n, long k) {
  Rec4Engine engine;
  return highest_term_check(n, k, engine);
}

}  // namespace qtheta

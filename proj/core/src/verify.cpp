#include "qtheta/verify.hpp"

#include "qtheta/binomial.hpp"
#include "qtheta/coefficients.hpp"
#include "qtheta/partitions.hpp"
#include "qtheta/qseries.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace qtheta {

namespace {

std::string cell(std::size_t n, std::size_t k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

SuiteResult golden_suite(const VerifyOptions& opt) {
  SuiteResult r{"golden table", 0, 0, {}};
  const auto& reference = reference_rows();
  if (opt.rows < reference.size()) return r;
  for (Method m : kAllMethods) {
    const Triangle t = triangle(reference.size(), m);
    for (std::size_t n = 0; n < reference.size(); ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        r.record(t.at(n, k) == reference[n][k], cell(n, k) + " " + std::string(to_string(m)));
      }
    }
  }
  return r;
}

SuiteResult agreement_suite(const VerifyOptions& opt) {
  SuiteResult r{"five-way agreement", 0, 0, {}};
  SeriesEngine series;
  Rec4Engine rec4;
  Rec5Engine rec5;
  PartitionEngine parts;
  CompositionEngine comps;
  for (unsigned n = 0; n < opt.rows; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const QPoly base = rec4(n, k);
      r.record(series(n, k) == base, cell(n, k) + " series");
      r.record(rec5(n, k) == base, cell(n, k) + " rec5");
      if (n <= opt.enumeration_cap) {
        r.record(parts(n, k) == base, cell(n, k) + " partitions");
        r.record(comps(n, k) == base, cell(n, k) + " compositions");
      }
    }
  }
  return r;
}

SuiteResult specialization_suite(const VerifyOptions& opt) {
  SuiteResult r{"q=1 specialization", 0, 0, {}};
  Rec5Engine engine;
  for (unsigned n = 0; n < opt.rows; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      r.record(engine(n, k).eval_at_one() == binomial(n, k), cell(n, k));
    }
  }
  return r;
}

SuiteResult highest_term_suite(const VerifyOptions& opt) {
  SuiteResult r{"highest-term law", 0, 0, {}};
  Rec4Engine engine;
  for (unsigned n = 1; n < opt.rows; ++n) {
    for (unsigned k = 0; k < n; ++k) r.record(highest_term_check(n, k, engine), cell(n, k));
  }
  return r;
}

SuiteResult luschny_suite(const VerifyOptions& opt) {
  SuiteResult r{"Luschny identity", 0, 0, {}};
  const unsigned top = std::min(opt.rows, opt.luschny_cap);
  for (unsigned n = 1; n <= top; ++n) {
    for (unsigned k = 1; k <= n; ++k) r.record(luschny_sum(n, k) == binomial(n - 1, k - 1), cell(n, k));
  }
  return r;
}

SuiteResult bijection_suite(const VerifyOptions& opt) {
  SuiteResult r{"partition bijection", 0, 0, {}};
  const unsigned top = std::min(opt.rows, opt.luschny_cap);
  for (unsigned n = 1; n <= top; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      const auto partitions = enumerate_p(n, k);
      const auto compositions = enumerate_compositions(n, k);
      r.record(partitions.size() == compositions.size(), cell(n, k) + " cardinality");
      for (const auto& lambda : partitions) {
        const auto i = to_multiplicities(lambda, n);
        r.record(from_multiplicities(i) == lambda && weight(lambda) == weight_via_multiplicities(i, k),
                 cell(n, k) + " lambda");
      }
    }
  }
  return r;
}

SuiteResult functional_equation_suite(const VerifyOptions& opt) {
  SuiteResult r{"functional equation", 0, 0, {}};
  for (unsigned order = 1; order <= std::max(opt.rows, 1U); ++order) {
    const QSeries f = QSeries::partial_theta(order);
    const QSeries rhs = QSeries::identity(order) + substitute_qx(f).shifted_x().scaled(QPoly::monomial(1, 1));
    r.record(rhs == f, "order " + std::to_string(order));
  }
  return r;
}

SuiteResult inverse_suite(const VerifyOptions& opt) {
  SuiteResult r{"inverse powers", 0, 0, {}};
  const std::size_t order = std::max(opt.rows, 1U);
  Rec4Engine engine;
  const QSeries f = QSeries::partial_theta(order);
  for (unsigned k = 1; k <= opt.max_inverse_k; ++k) {
    const QSeries fk = pow(f, k);
    const QSeries inverse(u_series(k, order));
    r.record(mul(fk, inverse) == QSeries::identity(order), "k=" + std::to_string(k) + " convolution");
    for (std::size_t n = 0; n < order; ++n) {
      const std::string label = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      r.record(u_formula(k, static_cast<long>(n), engine) == inverse.coeff(n), label + " formula");
      BigInt expected = n <= k ? binomial(k, static_cast<unsigned>(n)) : BigInt(0);
      if (n % 2 == 1) expected = -expected;
      r.record(inverse.coeff(n).eval_at_one() == expected, label + " q=1");
    }
  }
  return r;
}

}  // namespace

void SuiteResult::record(bool pass, const std::string& label) {
  if (pass) {
    ++passed;
  } else {
    ++failed;
    failures.push_back(label);
  }
}

bool VerifyReport::ok() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

VerifyReport run_verification(const VerifyOptions& options) {
  using Suite = SuiteResult (*)(const VerifyOptions&);
  const std::vector<Suite> suites = {golden_suite,       agreement_suite,  specialization_suite,
                                     highest_term_suite, luschny_suite,    bijection_suite,
                                     functional_equation_suite, inverse_suite};

  VerifyReport report;
  report.suites.resize(suites.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suites.size(); i = next++) report.suites[i] = suites[i](options);
  };

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(suites.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return report;
}

}  // namespace qtheta

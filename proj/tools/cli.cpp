#include "cli.hpp"

#include "format.hpp"
#include "qtheta/coefficients.hpp"
#include "qtheta/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qtheta::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned parse_count(const std::string& name, const std::string& text) {
  unsigned value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(name + " must be a decimal nonnegative integer, got '" + text + "'");
  }
  return value;
}

OutputFormat format_option(const std::string& text) {
  if (auto f = parse_format(text)) return *f;
  throw UsageError("unknown format '" + text + "' (expected plain, csv, json or latex)");
}

Method method_option(const std::string& text) {
  if (auto m = parse_method(text)) return *m;
  throw UsageError("unknown method '" + text +
                   "' (expected series, rec4, rec5, partitions or compositions)");
}

std::string verify_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& suite : report.suites) {
    out << (suite.ok() ? "PASS " : "FAIL ") << suite.name << ": " << suite.passed << " passed, "
        << suite.failed << " failed\n";
    for (const auto& f : suite.failures) out << "  failing " << f << '\n';
  }
  out << (report.ok() ? "all suites passed\n" : "verification FAILED\n");
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-binomial coefficients from powers of the partial theta function"};
  app.require_subcommand(1);

  std::string method = "rec4";
  std::string format = "plain";

  std::string coeff_n, coeff_k;
  auto* coeff = app.add_subcommand("coeff", "print <n k>_q");
  coeff->add_option("N", coeff_n, "row index n")->required();
  coeff->add_option("K", coeff_k, "column index k")->required();
  coeff->add_option("--method", method, "series, rec4, rec5, partitions or compositions");
  coeff->add_option("--format", format, "plain, csv, json or latex");

  std::string tri_rows;
  auto* tri = app.add_subcommand("triangle", "print rows 0..N-1 of the triangle");
  tri->add_option("N", tri_rows, "number of rows")->required();
  tri->add_option("--method", method, "series, rec4, rec5, partitions or compositions");
  tri->add_option("--format", format, "plain, csv, json or latex");

  std::string inv_k, inv_terms;
  std::string inv_method = "formula";
  auto* inv = app.add_subcommand("inverse", "print u_k(0..N-1, q), the coefficients of 1/f(x)^k");
  inv->add_option("K", inv_k, "power k >= 1")->required();
  inv->add_option("N", inv_terms, "number of terms")->required();
  inv->add_option("--method", inv_method, "formula or series");
  inv->add_option("--format", format, "plain, csv, json or latex");

  std::string max_n = "12", max_k = "5";
  auto* ver = app.add_subcommand("verify", "run every identity check");
  ver->add_option("--max-n", max_n, "triangle rows to check");
  ver->add_option("--max-k", max_k, "largest inverse power to check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    std::string output;
    int status = 0;
    if (*coeff) {
      const unsigned n = parse_count("N", coeff_n);
      const unsigned k = parse_count("K", coeff_k);
      const OutputFormat f = format_option(format);
      auto engine = make_engine(method_option(method));
      output = format_poly((*engine)(n, k), f);
    } else if (*tri) {
      const unsigned rows = parse_count("N", tri_rows);
      if (rows < 1) throw UsageError("triangle needs at least one row");
      const OutputFormat f = format_option(format);
      output = format_triangle(triangle(rows, method_option(method)), f);
    } else if (*inv) {
      const unsigned k = parse_count("K", inv_k);
      const unsigned terms = parse_count("N", inv_terms);
      if (k < 1) throw UsageError("K must be at least 1");
      if (terms < 1) throw UsageError("N must be at least 1");
      const OutputFormat f = format_option(format);
      std::vector<QPoly> u;
      if (inv_method == "series") {
        u = u_series(k, terms);
      } else if (inv_method == "formula") {
        Rec4Engine engine;
        for (unsigned n = 0; n < terms; ++n) u.push_back(u_formula(k, n, engine));
      } else {
        throw UsageError("unknown inverse method '" + inv_method + "' (expected formula or series)");
      }
      output = format_sequence(u, f);
    } else if (*ver) {
      VerifyOptions options;
      options.rows = parse_count("--max-n", max_n);
      options.max_inverse_k = parse_count("--max-k", max_k);
      if (options.rows < 1) throw UsageError("--max-n must be at least 1");
      const VerifyReport report = run_verification(options);
      output = verify_report(report);
      status = report.ok() ? 0 : 1;
    }
    out << output;
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qtheta::cli

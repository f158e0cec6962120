#include "format.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qtheta::cli {

namespace {

using nlohmann::json;

json to_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

std::string join(const std::vector<std::string>& cells, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += sep;
    out += cells[i];
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  return std::nullopt;
}

std::string render_latex(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& coeffs = p.coeffs();
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    const bool negative = coeffs[e] < 0;
    const BigInt magnitude = negative ? BigInt(-coeffs[e]) : coeffs[e];
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str();
    out += e == 1 ? std::string("q") : "q^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string render_json(const QPoly& p) { return to_json(p).dump(); }

QPoly parse_json(std::string_view text) {
  const json arr = json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of coefficients");
  std::vector<BigInt> coeffs;
  for (const auto& c : arr) {
    if (!c.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
    coeffs.emplace_back(c.get<std::string>());
  }
  return QPoly(std::move(coeffs));
}

std::string format_poly(const QPoly& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::plain:
    case OutputFormat::csv: return p.render() + "\n";
    case OutputFormat::json: return render_json(p) + "\n";
    case OutputFormat::latex: return render_latex(p) + "\n";
  }
  return {};
}

std::string format_triangle(const Triangle& t, OutputFormat format) {
  const std::size_t rows = t.size();
  std::ostringstream out;
  switch (format) {
    case OutputFormat::plain:
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& p : row) cells.push_back(p.render());
        out << join(cells, "; ") << '\n';
      }
      break;
    case OutputFormat::csv:
      for (std::size_t n = 0; n < rows; ++n) {
        std::vector<std::string> cells(rows);
        for (std::size_t k = 0; k <= n; ++k) cells[k] = t.rows[n][k].render();
        out << join(cells, ",") << '\n';
      }
      break;
    case OutputFormat::json: {
      json table = json::array();
      for (const auto& row : t.rows) {
        json jrow = json::array();
        for (const auto& p : row) jrow.push_back(to_json(p));
        table.push_back(std::move(jrow));
      }
      out << table.dump() << '\n';
      break;
    }
    case OutputFormat::latex:
      out << "\\begin{pmatrix}\n";
      for (std::size_t n = 0; n < rows; ++n) {
        std::vector<std::string> cells;
        for (std::size_t k = 0; k < rows; ++k) cells.push_back(render_latex(t.at(n, k)));
        out << join(cells, " & ") << (n + 1 < rows ? " \\\\\n" : "\n");
      }
      out << "\\end{pmatrix}\n";
      break;
  }
  return out.str();
}

std::string format_sequence(const std::vector<QPoly>& terms, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::json) {
    json arr = json::array();
    for (const auto& p : terms) arr.push_back(to_json(p));
    out << arr.dump() << '\n';
    return out.str();
  }
  for (const auto& p : terms) out << format_poly(p, format);
  return out.str();
}

}  // namespace qtheta::cli

#pragma once

#include "qtheta/coefficients.hpp"
#include "qtheta/qpoly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qtheta::cli {

enum class OutputFormat { plain, csv, json, latex };

std::optional<OutputFormat> parse_format(std::string_view name);

/// LaTeX term list, e.g. "q^{3} + 6q^{4} + 3q^{6}".
std::string render_latex(const QPoly& p);

/// Decimal coefficient strings indexed by exponent; zero is the empty array.
std::string render_json(const QPoly& p);

/// Inverse of render_json for a single coefficient array.
QPoly parse_json(std::string_view text);

std::string format_poly(const QPoly& p, OutputFormat format);
std::string format_triangle(const Triangle& t, OutputFormat format);
std::string format_sequence(const std::vector<QPoly>& terms, OutputFormat format);

}  // namespace qtheta::cli

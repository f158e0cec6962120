#include "qtheta/qpoly.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace qtheta {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

QPoly::QPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

QPoly QPoly::monomial(const BigInt& c, std::size_t exponent) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(exponent + 1, BigInt(0));
    p.coeffs_[exponent] = c;
  }
  return p;
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coefficient(std::size_t e) const {
  return e < coeffs_.size() ? coeffs_[e] : BigInt(0);
}

std::optional<std::size_t> QPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::optional<BigInt> QPoly::leading_coeff() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.back();
}

BigInt QPoly::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly operator-(QPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

QPoly QPoly::shifted(std::size_t shift) const {
  if (is_zero() || shift == 0) return *this;
  QPoly p;
  p.coeffs_.reserve(coeffs_.size() + shift);
  p.coeffs_.assign(shift, BigInt(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

namespace {

// Renders |c| * q^e without sign.
std::string render_magnitude(const BigInt& magnitude, std::size_t e) {
  if (e == 0) return magnitude.str();
  std::string var = e == 1 ? "q" : "q^" + std::to_string(e);
  if (magnitude == 1) return var;
  return magnitude.str() + "*" + var;
}

}  // namespace

std::string QPoly::render() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_magnitude(negative ? BigInt(-c) : c, e);
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  QPoly run() {
    skip_space();
    if (at_end()) fail("empty input");
    std::vector<BigInt> acc;
    accumulate(acc, term());
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_space();
      auto [c, e] = term();
      if (op == '-') c = -c;
      accumulate(acc, {std::move(c), e});
    }
    return QPoly(std::move(acc));
  }

 private:
  struct Term {
    BigInt coeff;
    std::size_t exponent;
  };

  static void accumulate(std::vector<BigInt>& acc, const Term& t) {
    if (acc.size() <= t.exponent) acc.resize(t.exponent + 1);
    acc[t.exponent] += t.coeff;
  }

  // term := [-] (int | int "*q" | "q" | int "*q^" int | "q^" int)
  Term term() {
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    BigInt coeff = 1;
    bool have_number = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_number = true;
      skip_space();
      if (at_end() || peek() != '*') {
        return {negative ? BigInt(-coeff) : coeff, 0};
      }
      ++pos_;
      skip_space();
    }
    if (at_end() || peek() != 'q') {
      fail(have_number ? "expected 'q' after '*'" : "expected a number or 'q'");
    }
    ++pos_;
    std::size_t exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected exponent after '^'");
      }
      const std::size_t start = pos_;
      BigInt e = number();
      if (e > 1'000'000) {
        pos_ = start;
        fail("exponent too large");
      }
      exponent = e.convert_to<std::size_t>();
    }
    return {negative ? BigInt(-coeff) : coeff, exponent};
  }

  BigInt number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly QPoly::parse(std::string_view text) { return PolyParser(text).run(); }

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.render(); }

}  // namespace qtheta

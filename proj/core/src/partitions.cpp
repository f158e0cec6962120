#include "qtheta/partitions.hpp"

#include "qtheta/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace qtheta {

namespace {

void require_bounds(unsigned n, unsigned k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("need 1 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
}

// Appends every completion of `prefix` whose parts are <= max_part and sum to
// `remaining`, largest next part first.
void extend_partitions(std::vector<unsigned>& prefix, unsigned remaining, unsigned max_part,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    extend_partitions(prefix, remaining - part, part, out);
    prefix.pop_back();
  }
}

// Fills positions j..n (1-based) of `vec` with `count` parts summing to `sum`.
void extend_compositions(MultiplicityVector& vec, unsigned j, unsigned count, unsigned sum,
                         std::vector<MultiplicityVector>& out) {
  const auto n = static_cast<unsigned>(vec.size());
  if (count == 0) {
    if (sum == 0) out.push_back(vec);
    return;
  }
  if (j > n) return;
  // Every remaining part has size in [j, n].
  if (static_cast<unsigned long>(count) * j > sum) return;
  if (static_cast<unsigned long>(count) * n < sum) return;
  for (unsigned take = 0; take <= count && take * j <= sum; ++take) {
    vec[j - 1] = take;
    extend_compositions(vec, j + 1, count - take, sum - take * j, out);
  }
  vec[j - 1] = 0;
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

unsigned Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0U);
}

std::vector<Partition> enumerate_p(unsigned n, unsigned k) {
  require_bounds(n, k);
  std::vector<Partition> out;
  std::vector<unsigned> prefix{k};
  extend_partitions(prefix, n - k, k, out);
  return out;
}

BigInt partition_coef(const Partition& lambda) {
  const auto& p = lambda.parts();
  BigInt coef = 1;
  // C(lambda_l, 0) = 1 closes the product, so the last factor is omitted.
  for (std::size_t i = 0; i + 1 < p.size(); ++i) coef *= binomial(p[i], p[i + 1]);
  return coef;
}

std::size_t partition_exponent(const Partition& lambda) {
  const auto& p = lambda.parts();
  std::size_t ex = 0;
  for (std::size_t i = 0; i < p.size(); ++i) ex += i * p[i];
  return ex;
}

QPoly weight(const Partition& lambda) {
  return QPoly::monomial(partition_coef(lambda), partition_exponent(lambda));
}

MultiplicityVector to_multiplicities(const Partition& lambda, unsigned ambient) {
  if (lambda.size() != ambient) {
    throw std::invalid_argument("partition of " + std::to_string(lambda.size()) +
                                " does not live in ambient " + std::to_string(ambient));
  }
  const auto& p = lambda.parts();
  MultiplicityVector i(ambient, 0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    i[j] = p[j] - (j + 1 < p.size() ? p[j + 1] : 0U);
  }
  return i;
}

Partition from_multiplicities(const MultiplicityVector& i) {
  std::size_t last = i.size();
  while (last > 0 && i[last - 1] == 0) --last;
  if (last == 0) throw std::invalid_argument("multiplicity vector is all zero");
  std::vector<unsigned> parts(last);
  unsigned running = 0;
  for (std::size_t j = last; j-- > 0;) {
    running += i[j];
    parts[j] = running;
  }
  return Partition(std::move(parts));
}

QPoly weight_via_multiplicities(const MultiplicityVector& i, unsigned k) {
  const unsigned total = std::accumulate(i.begin(), i.end(), 0U);
  if (total != k) {
    throw std::invalid_argument("multiplicities sum to " + std::to_string(total) +
                                ", expected " + std::to_string(k));
  }
  BigInt denominator = 1;
  std::size_t exponent = 0;
  for (std::size_t j = 1; j <= i.size(); ++j) {
    denominator *= factorial(i[j - 1]);
    exponent += j * (j - 1) / 2 * i[j - 1];
  }
  return QPoly::monomial(factorial(k) / denominator, exponent);
}

std::vector<MultiplicityVector> enumerate_compositions(unsigned n, unsigned k) {
  require_bounds(n, k);
  std::vector<MultiplicityVector> out;
  MultiplicityVector vec(n, 0);
  extend_compositions(vec, 1, k, n, out);
  return out;
}

BigInt luschny_sum(unsigned n, unsigned k) {
  BigInt sum = 0;
  for (const auto& lambda : enumerate_p(n, k)) sum += partition_coef(lambda);
  return sum;
}

}  // namespace qtheta

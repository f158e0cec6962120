#pragma once

#include "qtheta/qpoly.hpp"

#include <cstddef>
#include <vector>

namespace qtheta {

/**
 * Integer partition lambda_1 >= lambda_2 >= ... >= lambda_l >= 1.
 *
 * Construction validates the shape; a Partition is never empty.
 */
class Partition {
 public:
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned first() const noexcept { return parts_.front(); }
  unsigned size() const noexcept;  // sum of parts

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// (i_1, ..., i_n): i_j = lambda_j - lambda_{j+1}, with lambda_{l+1} = 0.
/// Length is the ambient n; trailing zeros are kept.
using MultiplicityVector = std::vector<unsigned>;

/// Partitions of n with first part k, lexicographically decreasing.
std::vector<Partition> enumerate_p(unsigned n, unsigned k);

/// prod_i C(lambda_i, lambda_{i+1})
BigInt partition_coef(const Partition& lambda);

/// sum_i (i-1) lambda_i
std::size_t partition_exponent(const Partition& lambda);

/// coef(lambda) * q^{ex(lambda)}
QPoly weight(const Partition& lambda);

MultiplicityVector to_multiplicities(const Partition& lambda, unsigned ambient);
Partition from_multiplicities(const MultiplicityVector& i);

/// k! / prod_j i_j! * q^{sum_j C(j,2) i_j}; requires sum_j i_j == k.
QPoly weight_via_multiplicities(const MultiplicityVector& i, unsigned k);

/// Length-n vectors with sum_j i_j = k and sum_j j*i_j = n, lexicographically
/// increasing.
std::vector<MultiplicityVector> enumerate_compositions(unsigned n, unsigned k);

/// sum of coef(lambda) over P_{n,k}
BigInt luschny_sum(unsigned n, unsigned k);

}  // namespace qtheta

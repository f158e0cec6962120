#pragma once

#include "qtheta/qpoly.hpp"

#include <vector>

namespace qtheta {

/// Exact C(n, k) from a Pascal triangle that grows on demand.
/// An instance is not synchronized; binomial() uses a per-thread instance.
class PascalTable {
 public:
  const BigInt& operator()(unsigned n, unsigned k);

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// C(n, k), zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// n!
BigInt factorial(unsigned n);

}  // namespace qtheta

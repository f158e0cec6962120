#include "qtheta/binomial.hpp"

namespace qtheta {

const BigInt& PascalTable::operator()(unsigned n, unsigned k) {
  static const BigInt zero = 0;
  if (k > n) return zero;
  while (rows_.size() <= n) {
    const std::size_t m = rows_.size();
    std::vector<BigInt> row(m + 1, BigInt(1));
    for (std::size_t j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
    rows_.push_back(std::move(row));
  }
  return rows_[n][k];
}

BigInt binomial(unsigned n, unsigned k) {
  thread_local PascalTable table;
  return table(n, k);
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace qtheta

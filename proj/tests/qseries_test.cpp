#include "qtheta/qseries.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

#include <random>

namespace qtheta {
namespace {

QPoly P(const char* text) { return QPoly::parse(text); }

QSeries S(std::initializer_list<const char*> terms) {
  std::vector<QPoly> c;
  for (const char* t : terms) c.push_back(P(t));
  return QSeries(std::move(c));
}

TEST(QSeriesTest, PartialTheta) {
  EXPECT_EQ(QSeries::partial_theta(4), S({"1", "q", "q^3", "q^6"}));
  EXPECT_EQ(QSeries::partial_theta(1), S({"1"}));
  EXPECT_EQ(QSeries::partial_theta(6).coeff(5), P("q^15"));
  EXPECT_THROW(QSeries::partial_theta(0), std::invalid_argument);
}

TEST(QSeriesTest, OrderIsExplicit) {
  const QSeries id = QSeries::identity(5);
  EXPECT_EQ(id.order(), 5u);
  EXPECT_EQ(id.coefficients().size(), 5u);
  EXPECT_NE(QSeries::identity(4), QSeries::identity(5));
}

TEST(QSeriesTest, Mul) {
  const QSeries f3 = QSeries::partial_theta(3);
  EXPECT_EQ(mul(f3, f3), S({"1", "2*q", "q^2 + 2*q^3"}));
  const QSeries a = S({"1 + q", "0", "-3*q^2", "q^7"});
  EXPECT_EQ(mul(a, QSeries::identity(4)), a);
  const QSeries f6 = QSeries::partial_theta(6);
  EXPECT_EQ(mul(f6, f6).coeff(3), P("2*q^4 + 2*q^6"));
  EXPECT_THROW(mul(f3, f6), OrderMismatch);
}

TEST(QSeriesTest, Pow) {
  const QSeries f = QSeries::partial_theta(6);
  EXPECT_EQ(pow(f, 1), f);
  EXPECT_EQ(pow(f, 3).coeff(3), P("q^3 + 6*q^4 + 3*q^6"));
  EXPECT_EQ(pow(f, 0), QSeries::identity(6));
}

TEST(QSeriesTest, Invert) {
  EXPECT_EQ(invert(QSeries::partial_theta(4)), S({"1", "-q", "q^2 - q^3", "-q^3 + 2*q^4 - q^6"}));
  EXPECT_EQ(invert(QSeries::identity(7)), QSeries::identity(7));
  const QSeries f2 = pow(QSeries::partial_theta(4), 2);
  EXPECT_EQ(invert(f2).coeff(2), P("3*q^2 - 2*q^3"));
  EXPECT_EQ(invert(f2).coeff(3), P("-4*q^3 + 6*q^4 - 2*q^6"));
}

TEST(QSeriesTest, InvertRejectsNonUnitConstant) {
  EXPECT_THROW(invert(S({"2", "q"})), std::invalid_argument);
  EXPECT_THROW(invert(S({"-1", "q"})), std::invalid_argument);
  EXPECT_THROW(invert(S({"1 + q", "q"})), std::invalid_argument);
  EXPECT_THROW(invert(QSeries(3)), std::invalid_argument);
}

TEST(QSeriesTest, SubstituteQx) {
  EXPECT_EQ(substitute_qx(QSeries::partial_theta(3)), S({"1", "q^2", "q^5"}));
  EXPECT_EQ(substitute_qx(QSeries::identity(4)), QSeries::identity(4));
}

TEST(QSeriesTest, Coeff) {
  const QSeries f = QSeries::partial_theta(6);
  EXPECT_EQ(coeff(f, 0), QPoly(1));
  EXPECT_EQ(coeff(pow(f, 3), 3), P("q^3 + 6*q^4 + 3*q^6"));
  EXPECT_EQ(coeff(f, 5), P("q^15"));
  EXPECT_THROW(coeff(f, 6), std::out_of_range);
}

TEST(QSeriesTest, FunctionalEquation) {
  for (std::size_t order = 1; order <= 30; ++order) {
    const QSeries f = QSeries::partial_theta(order);
    const QSeries rhs =
        QSeries::identity(order) + substitute_qx(f).shifted_x().scaled(QPoly::monomial(1, 1));
    EXPECT_EQ(rhs, f) << "order " << order;
  }
}

TEST(QSeriesTest, InverseOfPowersAtOrder30) {
  const QSeries f = QSeries::partial_theta(30);
  for (unsigned k = 1; k <= 5; ++k) {
    const QSeries fk = pow(f, k);
    EXPECT_EQ(mul(fk, invert(fk)), QSeries::identity(30)) << "k=" << k;
  }
}

TEST(QSeriesTest, PowMatchesTupleExpansion) {
  // [x^m] f^{j} against the term-by-term product expansion.
  const QSeries f = QSeries::partial_theta(8);
  for (unsigned j = 1; j <= 5; ++j) {
    const QSeries fj = pow(f, j);
    for (unsigned m = 0; m < 8; ++m) {
      EXPECT_EQ(fj.coeff(m), oracle::qbinom_by_tuples(m + j - 1, j - 1)) << j << "," << m;
    }
  }
}

class QSeriesProperties : public ::testing::Test {
 protected:
  QSeries random_series(std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<int> degree(-1, 6), coeff(-9, 9);
    std::vector<QPoly> c;
    for (std::size_t n = 0; n < order; ++n) {
      std::vector<BigInt> p;
      const int d = degree(rng_);
      for (int e = 0; e <= d; ++e) p.emplace_back(coeff(rng_));
      c.emplace_back(std::move(p));
    }
    if (unit_constant) c[0] = QPoly(1);
    return QSeries(std::move(c));
  }
  std::mt19937 rng_{7};
};

TEST_F(QSeriesProperties, PowAddsExponents) {
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = random_series(6, false);
    for (unsigned j = 0; j <= 3; ++j) {
      for (unsigned k = 0; k <= 3; ++k) EXPECT_EQ(pow(a, j + k), mul(pow(a, j), pow(a, k)));
    }
  }
}

TEST_F(QSeriesProperties, TruncationConsistency) {
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = random_series(9, true), b = random_series(9, false);
    for (std::size_t m = 1; m < 9; ++m) {
      const QSeries am = a.truncated(m), bm = b.truncated(m);
      EXPECT_EQ(mul(a, b).truncated(m), mul(am, bm));
      EXPECT_EQ(pow(a, 3).truncated(m), pow(am, 3));
      EXPECT_EQ(invert(a).truncated(m), invert(am));
      EXPECT_EQ(substitute_qx(b).truncated(m), substitute_qx(bm));
      EXPECT_EQ(QSeries::partial_theta(9).truncated(m), QSeries::partial_theta(m));
    }
  }
}

TEST_F(QSeriesProperties, InverseIsTwoSided) {
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = random_series(8, true);
    const QSeries b = invert(a);
    EXPECT_EQ(mul(a, b), QSeries::identity(8));
    EXPECT_EQ(mul(b, a), QSeries::identity(8));
    EXPECT_EQ(invert(b), a);
  }
}

}  // namespace
}  // namespace qtheta

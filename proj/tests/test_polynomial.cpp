#include <gtest/gtest.h>

#include <stdexcept>

#include "parkfact/polynomial.hpp"
#include "parkfact/tree.hpp"

using namespace parkfact;

namespace {

BivariatePoly P(const char* s) { return BivariatePoly::parse(s); }

// Pascal's triangle, independent of binomial()
BigInt pascal(unsigned n, unsigned k) {
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

}  // namespace

TEST(Polynomial, ZeroPolynomial) {
  BivariatePoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_EQ(P("0"), z);
  EXPECT_THROW(z.total_degree(), std::domain_error);
  EXPECT_THROW(z.min_total_degree(), std::domain_error);
}

TEST(Polynomial, CanonicalPrinting) {
  EXPECT_EQ(P("q*t^2 + t^3 + t^2").to_string(), "t^2 + t^3 + q*t^2");
  EXPECT_EQ(P("3 - q").to_string(), "3 - q");
  EXPECT_EQ(P("-t").to_string(), "-t");
  EXPECT_EQ(P("2*t^5*q").to_string(), "2*q*t^5");
  EXPECT_EQ(P("t q").to_string(), "q*t");
}

TEST(Polynomial, ParseRoundTrip) {
  for (const char* s : {"1", "t", "t^2 + t^3 + q*t^2", "5*q^3*t - 7 + 2*q^10"}) {
    const auto p = P(s);
    EXPECT_EQ(P(p.to_string().c_str()), p) << s;
  }
}

TEST(Polynomial, ParseErrors) {
  EXPECT_THROW(P(""), std::invalid_argument);
  EXPECT_THROW(P("q +"), std::invalid_argument);
  EXPECT_THROW(P("x"), std::invalid_argument);
  EXPECT_THROW(P("q^"), std::invalid_argument);
}

TEST(Polynomial, ZerosArePruned) {
  const auto p = P("q + t") - P("q");
  EXPECT_EQ(p, BivariatePoly::t());
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_TRUE((P("q") - P("q")).is_zero());
}

TEST(Polynomial, Arithmetic) {
  const auto s = BivariatePoly::q() + BivariatePoly::t();
  EXPECT_EQ(s * s, P("q^2 + 2*q*t + t^2"));
  EXPECT_EQ(mul(s, s), s * s);
  EXPECT_EQ(add(s, -s), BivariatePoly());
  EXPECT_EQ(s * BigInt(3), P("3*q + 3*t"));
}

TEST(Polynomial, BigCoefficientsMatchPascal) {
  auto p = BivariatePoly::constant(1);
  const auto one_plus_q = P("1 + q");
  for (int i = 0; i < 100; ++i) p *= one_plus_q;
  EXPECT_EQ(p.coefficient(50, 0), pascal(100, 50));
  EXPECT_EQ(binomial(100, 50), pascal(100, 50));
  EXPECT_EQ(p.evaluate(1, 1), BigInt(1) << 100);
}

TEST(Polynomial, Degrees) {
  const auto p = P("t^2 + t^3 + q*t^2");
  EXPECT_EQ(p.total_degree(), 3u);
  EXPECT_EQ(p.min_total_degree(), 2u);
}

TEST(Polynomial, Substitutions) {
  const auto p = P("t^2 + t^3 + q*t^2");
  EXPECT_EQ(p.substitute_t_one(), P("2 + q"));
  EXPECT_EQ(p.substitute_q_zero(), P("t^2 + t^3"));
  EXPECT_EQ(p.diagonal(), P("q^2 + 2*q^3"));
  EXPECT_EQ(p.swap_variables(), P("q^2 + q^3 + t*q^2"));
  EXPECT_EQ(p.evaluate(2, 3), BigInt(9 + 27 + 18));
}

TEST(Polynomial, DivideByTPower) {
  const auto p = P("t^2 + t^3 + q*t^2");
  EXPECT_EQ(p.divide_by_t_power(2), P("1 + t + q"));
  EXPECT_THROW(p.divide_by_t_power(3), std::domain_error);
  EXPECT_EQ(p.divide_by_t_power(2).multiply_by_monomial(0, 2), p);
}

TEST(Polynomial, Tally) {
  PolyTally a, b;
  a.add(1, 2);
  a.add(1, 2);
  b.add(0, 3, 5);
  a.merge(b);
  EXPECT_EQ(a.total(), 7u);
  EXPECT_EQ(a.to_poly(), P("2*q*t^2 + 5*t^3"));
}

TEST(Polynomial, QtBracket) {
  EXPECT_EQ(qt_bracket(1), P("1"));
  EXPECT_EQ(qt_bracket(3), P("t^2 + q*t + q^2"));
  EXPECT_THROW(qt_bracket(0), std::invalid_argument);
}

TEST(Polynomial, FactorialProduct) {
  EXPECT_EQ(qt_factorial_product(0), P("1"));
  EXPECT_EQ(qt_factorial_product(2), P("t^3 + q*t^2"));
  // at q = t = 1 the product counts n!
  BigInt fact = 1;
  for (unsigned n = 1; n <= 8; ++n) {
    fact *= n;
    EXPECT_EQ(qt_factorial_product(n).evaluate(1, 1), fact);
  }
}

TEST(Polynomial, CatalanQt) {
  EXPECT_EQ(catalan_qt(0), P("1"));
  EXPECT_EQ(catalan_qt(1), P("1"));
  EXPECT_EQ(catalan_qt(2), P("q + t"));
  EXPECT_EQ(catalan_qt(3), P("t^3 + q*t^2 + q*t + q^2*t + q^3"));
  const auto seq = catalan_qt_sequence(10);
  ASSERT_EQ(seq.size(), 11u);
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(seq[n].evaluate(1, 1), pascal(2 * n, n) / (n + 1)) << n;
  }
}

TEST(Polynomial, TreeRecursionMatchesBruteForce) {
  const auto rec = tree_recursion_I(6);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(rec[static_cast<std::size_t>(n)], inversion_enumerator(n)) << n;
}

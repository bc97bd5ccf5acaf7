#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkfact {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair of a monomial q^q t^t. Ordered by q first, then t; this is
/// the canonical term order used for iteration and serialization.
struct Exponent {
  unsigned q = 0;
  unsigned t = 0;

  auto operator<=>(const Exponent&) const = default;
};

/// Sparse polynomial in q and t with arbitrary-precision integer
/// coefficients. No stored coefficient is ever zero; the zero polynomial has
/// no terms.
class BivariatePoly {
 public:
  using Terms = std::map<Exponent, BigInt>;

  BivariatePoly() = default;

  static BivariatePoly constant(const BigInt& c);
  static BivariatePoly monomial(unsigned q_exp, unsigned t_exp, const BigInt& c = 1);
  static BivariatePoly q() { return monomial(1, 0); }
  static BivariatePoly t() { return monomial(0, 1); }

  /// Parses the human-readable form, e.g. "t^6 + 2*t^5*q - q^3". Factors of a
  /// term may appear in any order; "0" is the zero polynomial.
  static BivariatePoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  BigInt coefficient(unsigned q_exp, unsigned t_exp) const;

  /// Largest q-exponent + t-exponent over all terms. Throws std::domain_error
  /// on the zero polynomial.
  unsigned total_degree() const;
  unsigned min_total_degree() const;

  BigInt evaluate(const BigInt& q_value, const BigInt& t_value) const;

  BivariatePoly substitute_t_one() const;
  BivariatePoly substitute_q_zero() const;
  /// t := q; the result is univariate in q.
  BivariatePoly diagonal() const;
  BivariatePoly swap_variables() const;
  /// Exact division by t^k; throws std::domain_error if some term has a
  /// smaller t-exponent.
  BivariatePoly divide_by_t_power(unsigned k) const;
  BivariatePoly multiply_by_monomial(unsigned q_exp, unsigned t_exp) const;

  BivariatePoly& operator+=(const BivariatePoly& rhs);
  BivariatePoly& operator-=(const BivariatePoly& rhs);
  BivariatePoly& operator*=(const BivariatePoly& rhs);
  BivariatePoly& operator*=(const BigInt& scalar);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const BigInt& s) { return a *= s; }
  friend BivariatePoly operator-(const BivariatePoly& a);

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  /// "c*q^a*t^b + ..." in canonical term order, unit coefficients and zero
  /// exponents elided.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const BigInt& c);

  Terms terms_;
};

BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly mul(const BivariatePoly& a, const BivariatePoly& b);

/// Accumulates monomial counts with machine integers, for enumerators that
/// tally millions of objects before producing a single polynomial.
class PolyTally {
 public:
  void add(unsigned q_exp, unsigned t_exp, std::uint64_t count = 1) {
    counts_[Exponent{q_exp, t_exp}] += count;
  }
  void merge(const PolyTally& other);
  std::uint64_t total() const;
  BivariatePoly to_poly() const;

 private:
  std::map<Exponent, std::uint64_t> counts_;
};

BigInt binomial(unsigned n, unsigned k);

/// t^{n-1} + t^{n-2} q + ... + q^{n-1}. Requires n >= 1.
BivariatePoly qt_bracket(unsigned n);

/// t^n * prod_{i=1..n} qt_bracket(i); the maximum-difference enumerator.
BivariatePoly qt_factorial_product(unsigned n);

/// C_0 = 1, C_n = sum_k q^k t^{n-k-1} C_k C_{n-k-1}.
BivariatePoly catalan_qt(unsigned n);
std::vector<BivariatePoly> catalan_qt_sequence(unsigned n_max);

/// I_0..I_{n_max} from the tree-deletion recursion
///   I_{n+1} = sum_i binom(n,i) t (t^i + ... + q^i) I_i I_{n-i}.
std::vector<BivariatePoly> tree_recursion_I(unsigned n_max);

}  // namespace parkfact

#include "parkfact/polynomial.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace parkfact {

BivariatePoly BivariatePoly::constant(const BigInt& c) { return monomial(0, 0, c); }

BivariatePoly BivariatePoly::monomial(unsigned q_exp, unsigned t_exp, const BigInt& c) {
  BivariatePoly p;
  p.add_term(Exponent{q_exp, t_exp}, c);
  return p;
}

void BivariatePoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BivariatePoly::coefficient(unsigned q_exp, unsigned t_exp) const {
  auto it = terms_.find(Exponent{q_exp, t_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned BivariatePoly::total_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.q + e.t);
  return d;
}

unsigned BivariatePoly::min_total_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e.q + e.t);
  return d;
}

BigInt BivariatePoly::evaluate(const BigInt& q_value, const BigInt& t_value) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c * boost::multiprecision::pow(q_value, e.q) * boost::multiprecision::pow(t_value, e.t);
  }
  return sum;
}

BivariatePoly BivariatePoly::substitute_t_one() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.add_term(Exponent{e.q, 0}, c);
  return r;
}

BivariatePoly BivariatePoly::substitute_q_zero() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) {
    if (e.q == 0) r.add_term(e, c);
  }
  return r;
}

BivariatePoly BivariatePoly::diagonal() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.add_term(Exponent{e.q + e.t, 0}, c);
  return r;
}

BivariatePoly BivariatePoly::swap_variables() const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.add_term(Exponent{e.t, e.q}, c);
  return r;
}

BivariatePoly BivariatePoly::divide_by_t_power(unsigned k) const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) {
    if (e.t < k) throw std::domain_error("polynomial is not divisible by t^" + std::to_string(k));
    r.add_term(Exponent{e.q, e.t - k}, c);
  }
  return r;
}

BivariatePoly BivariatePoly::multiply_by_monomial(unsigned q_exp, unsigned t_exp) const {
  BivariatePoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.q + q_exp, e.t + t_exp}, c);
  return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(Exponent{ea.q + eb.q, ea.t + eb.t}, ca * cb);
    }
  }
  return r;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BivariatePoly operator-(const BivariatePoly& a) {
  BivariatePoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

void append_monomial(std::ostringstream& out, const Exponent& e) {
  bool first = true;
  auto factor = [&](char var, unsigned exp) {
    if (exp == 0) return;
    if (!first) out << '*';
    out << var;
    if (exp > 1) out << '^' << exp;
    first = false;
  };
  factor('q', e.q);
  factor('t', e.t);
}

}  // namespace

std::string BivariatePoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = e.q == 0 && e.t == 0;
    if (mag != 1 || unit_monomial) {
      out << mag;
      if (!unit_monomial) out << '*';
    }
    append_monomial(out, e);
  }
  return out.str();
}

BivariatePoly BivariatePoly::parse(std::string_view text) {
  BivariatePoly result;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw std::invalid_argument("expected digits at offset " + std::to_string(start) +
                                  " in polynomial \"" + std::string(text) + "\"");
    }
    return std::string(text.substr(start, pos - start));
  };

  skip_space();
  if (pos == text.size()) throw std::invalid_argument("empty polynomial text");
  bool first_term = true;
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first_term) {
      throw std::invalid_argument("expected '+' or '-' between terms in \"" + std::string(text) + "\"");
    }
    first_term = false;

    BigInt coeff = sign;
    Exponent e;
    bool saw_factor = false;
    while (true) {
      skip_space();
      if (pos == text.size() || text[pos] == '+' || text[pos] == '-') break;
      char ch = text[pos];
      if (ch == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= BigInt(read_uint());
      } else if (ch == 'q' || ch == 't') {
        ++pos;
        unsigned exp = 1;
        skip_space();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_space();
          exp = static_cast<unsigned>(std::stoul(read_uint()));
        }
        (ch == 'q' ? e.q : e.t) += exp;
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + ch +
                                    "' in polynomial \"" + std::string(text) + "\"");
      }
      saw_factor = true;
    }
    if (!saw_factor) throw std::invalid_argument("dangling sign in \"" + std::string(text) + "\"");
    result.add_term(e, coeff);
  }
  return result;
}

BivariatePoly add(const BivariatePoly& a, const BivariatePoly& b) { return a + b; }
BivariatePoly mul(const BivariatePoly& a, const BivariatePoly& b) { return a * b; }

void PolyTally::merge(const PolyTally& other) {
  for (const auto& [e, c] : other.counts_) counts_[e] += c;
}

std::uint64_t PolyTally::total() const {
  std::uint64_t sum = 0;
  for (const auto& [e, c] : counts_) sum += c;
  return sum;
}

BivariatePoly PolyTally::to_poly() const {
  BivariatePoly p;
  for (const auto& [e, c] : counts_) p += BivariatePoly::monomial(e.q, e.t, BigInt(c));
  return p;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BivariatePoly qt_bracket(unsigned n) {
  if (n == 0) throw std::invalid_argument("qt_bracket requires n >= 1");
  BivariatePoly p;
  for (unsigned j = 0; j < n; ++j) p += BivariatePoly::monomial(j, n - 1 - j);
  return p;
}

BivariatePoly qt_factorial_product(unsigned n) {
  BivariatePoly p = BivariatePoly::monomial(0, n);
  for (unsigned i = 1; i <= n; ++i) p *= qt_bracket(i);
  return p;
}

std::vector<BivariatePoly> catalan_qt_sequence(unsigned n_max) {
  std::vector<BivariatePoly> c;
  c.reserve(n_max + 1);
  c.push_back(BivariatePoly::constant(1));
  for (unsigned n = 1; n <= n_max; ++n) {
    BivariatePoly sum;
    for (unsigned k = 0; k < n; ++k) {
      sum += (c[k] * c[n - k - 1]).multiply_by_monomial(k, n - k - 1);
    }
    c.push_back(std::move(sum));
  }
  return c;
}

BivariatePoly catalan_qt(unsigned n) { return catalan_qt_sequence(n).back(); }

std::vector<BivariatePoly> tree_recursion_I(unsigned n_max) {
  std::vector<BivariatePoly> seq;
  seq.reserve(n_max + 1);
  seq.push_back(BivariatePoly::constant(1));
  for (unsigned m = 0; m < n_max; ++m) {
    // builds I_{m+1}
    BivariatePoly next;
    for (unsigned i = 0; i <= m; ++i) {
      BivariatePoly term = (qt_bracket(i + 1) * seq[i] * seq[m - i]).multiply_by_monomial(0, 1);
      next += term * binomial(m, i);
    }
    seq.push_back(std::move(next));
  }
  return seq;
}

}  // namespace parkfact

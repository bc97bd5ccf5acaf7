#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parkfact/parking.hpp"
#include "parkfact/permutation.hpp"
#include "parkfact/polynomial.hpp"

namespace parkfact {

/// An ordered sequence of transpositions acting on [n].
class Factorization {
 public:
  explicit Factorization(int n = 0) : n_(n) {}
  /// Throws if a factor moves a point outside [n].
  Factorization(int n, std::vector<Transposition> factors);
  /// Parses "(1 2)(3 5)(1 3)" on [n].
  static Factorization parse(std::string_view text, int n);

  int n() const { return n_; }
  std::size_t size() const { return factors_.size(); }
  std::span<const Transposition> factors() const { return factors_; }
  const Transposition& operator[](std::size_t i) const { return factors_[i]; }
  /// "(a b)(c d)..."; the empty factorization prints as "()".
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;

 private:
  int n_;
  std::vector<Transposition> factors_;
};

/// tau_1 tau_2 ... tau_m, left to right.
Permutation product(const Factorization& f);

/// The graph criterion: G(f) is a forest with one tree per cycle of pi, each
/// tree spanning that cycle's support. Independent of the product.
bool graph_is_cycle_forest(const Factorization& f, const Permutation& pi);

/// f multiplies to pi and is as short as possible. Checks the product, the
/// graph criterion, and the length n+1-c(pi); throws std::logic_error if the
/// latter two disagree.
bool is_minimal_for(const Factorization& f, const Permutation& pi);

using FactorizationVisitor = std::function<void(const Factorization&)>;

/// Every minimal factorization of sigma, exactly once, in lexicographic
/// factor order. Each factor must join two cycles of the partial product,
/// and the partial product must remain on a geodesic to sigma.
void for_each_factorization(const FullCycle& sigma, const FactorizationVisitor& visit);
std::vector<Factorization> enumerate_factorizations(const FullCycle& sigma);

/// Lower and upper sequences (a_i) and (b_i) of the factors (a_i b_i).
std::vector<int> lower(const Factorization& f);
std::vector<int> upper(const Factorization& f);

struct AreaPair {
  int lower = 0;
  int upper = 0;
  int difference() const { return lower + upper; }
};

/// Throws std::invalid_argument unless f is a minimal factorization of some
/// full cycle of [n].
AreaPair areas(const Factorization& f);
int area_lower(const Factorization& f);
int area_upper(const Factorization& f);
int total_difference(const Factorization& f);

/// sum over F_sigma of q^area_L t^area_U.
BivariatePoly factorization_enumerator(const FullCycle& sigma);

struct RestrictedEnumerators {
  /// factorizations containing (0 n)
  BivariatePoly simple;
  /// non-decreasing lower sequence
  BivariatePoly increasing;
  /// non-increasing lower sequence
  BivariatePoly decreasing;
  /// maximum total difference
  BivariatePoly max_difference;
  /// lower sequence is a permutation of [0, n-1]
  BivariatePoly permutation_lower;
  int max_difference_value = 0;
};

/// One pass over F_n with the five filters.
RestrictedEnumerators restricted_enumerators(int n);

/// Conjugate tau by a rotation of [n]: (a b) -> (a-1 b-1) or (a+1 b+1) mod n+1.
Transposition rotate_down(const Transposition& tau, int n);
Transposition rotate_up(const Transposition& tau, int n);

/// 1-based position k with tau_k == (0 n). Throws unless exactly one exists.
std::size_t simple_index(const Factorization& f);
bool is_simple(const Factorization& f);

/// (tau_{k+1}^-, ..., tau_n^-, tau_1, ..., tau_{k-1}) with tau^- the conjugate
/// by sigma_n; maps simple factorizations with (0 n) in position k onto
/// F_{n-1}.
Factorization phi_k(const Factorization& f, std::size_t k);
/// Inverse of phi_k for g in F_{n-1}, producing a factorization in F_n.
Factorization phi_k_inverse(const Factorization& g, std::size_t k, int n);

/// Same factors conjugated by gamma(i) = n - i, same order. Maps F_sigma to
/// F_{gamma sigma gamma}.
Factorization reflect_conjugate(const Factorization& f);
/// Conjugated by gamma and reversed. Maps F_n onto F_n.
Factorization reflect_reverse(const Factorization& f);

}  // namespace parkfact

#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parkfact {

using Vertex = int;

/// A permutation of [n] = {0, ..., n} in one-line form: images()[i] is the
/// image of i. Products are taken left to right: (a * b)(i) = b(a(i)).
class Permutation {
 public:
  /// The identity on [n].
  explicit Permutation(int n = 0);
  /// Throws std::invalid_argument unless `images` is a bijection on [0, size).
  static Permutation from_images(std::vector<Vertex> images);
  /// Builds from disjoint cycles; unmentioned points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles);
  /// Parses "(0 2)(5 6 4)" on [n]; "()" or "" is the identity.
  static Permutation parse(std::string_view text, int n);

  int n() const { return static_cast<int>(images_.size()) - 1; }
  std::span<const Vertex> images() const { return images_; }
  Vertex operator()(Vertex x) const { return images_[static_cast<std::size_t>(x)]; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycles in normal form: each rotated to start at its minimum, sorted by
  /// minimum. Fixed points are included as 1-cycles.
  std::vector<std::vector<Vertex>> cycles() const;
  int cycle_count() const;
  bool is_full_cycle() const { return cycle_count() == 1; }

  /// Cycle notation with fixed points suppressed, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// Left-to-right product: i -> b(a(i)). Throws on ground-set mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// A transposition (lo hi) with lo < hi.
class Transposition {
 public:
  /// Accepts the endpoints in either order; throws if they coincide or one
  /// is negative.
  Transposition(Vertex a, Vertex b);

  Vertex lo() const { return lo_; }
  Vertex hi() const { return hi_; }
  bool moves(Vertex x) const { return x == lo_ || x == hi_; }
  Vertex apply(Vertex x) const { return x == lo_ ? hi_ : x == hi_ ? lo_ : x; }
  Permutation as_permutation(int n) const;
  std::string to_string() const;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;

 private:
  Vertex lo_;
  Vertex hi_;
};

/// A full cycle (0 s_1 ... s_n) of [n] kept in visit-word form, so that
/// properties of the word (unimodality, contiguity) are directly available.
class FullCycle {
 public:
  /// Throws unless `word` is a permutation of [n] with word[0] == 0.
  explicit FullCycle(std::vector<Vertex> word);
  /// sigma_n = (0 1 ... n).
  static FullCycle canonical(int n);
  /// Rotates the unique cycle of `pi` to start at 0; throws unless `pi` is a
  /// full cycle.
  static FullCycle from_permutation(const Permutation& pi);
  /// Accepts "0 2 3 5 6 4 1" or "(0 2 3 5 6 4 1)"; the leading 0 is required.
  static FullCycle parse(std::string_view text);

  int n() const { return static_cast<int>(word_.size()) - 1; }
  std::span<const Vertex> word() const { return word_; }
  Vertex at(int position) const { return word_[static_cast<std::size_t>(position)]; }
  /// Index i with s_i == v.
  int position_of(Vertex v) const { return positions_[static_cast<std::size_t>(v)]; }
  /// s_i -> s_{i+1 mod n+1}.
  Permutation to_permutation() const;
  std::string to_string() const;

  friend bool operator==(const FullCycle& a, const FullCycle& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const FullCycle& a, const FullCycle& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<Vertex> word_;
  std::vector<int> positions_;
};

/// Word rises strictly from 0 to n and then falls strictly.
bool is_unimodal(const FullCycle& sigma);

/// All 2^{n-1} unimodal full cycles of [n], ordered by the bitmask of the
/// ascent set {s_1..s_{N-1}} as a subset of [1, n-1].
std::vector<FullCycle> unimodal_cycles(int n);
void for_each_unimodal_cycle(int n, const std::function<void(const FullCycle&)>& visit);

/// All n! full cycles of [n], in lexicographic order of their words.
std::vector<FullCycle> all_full_cycles(int n);

/// Every cycle of `pi` is a window (s_i s_{i+1} ... s_j) of sigma's word,
/// traversed in word order.
bool is_sigma_contiguous(const Permutation& pi, const FullCycle& sigma);

/// gamma(i) = n - i.
Transposition reflect_conjugate(const Transposition& tau, int n);
/// gamma sigma gamma, re-rotated to start at 0.
FullCycle reflect_conjugate(const FullCycle& sigma);

enum class FactorKind { Cut, Join };

/// Join iff tau's endpoints lie on distinct cycles of rho.
FactorKind classify_factor(const Permutation& rho, const Transposition& tau);

/// Parses a factor sequence "(1 2)(3 5)(1 3)"; each group must hold exactly
/// two distinct points.
std::vector<Transposition> parse_transpositions(std::string_view text);

}  // namespace parkfact

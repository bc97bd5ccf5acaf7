#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parkfact/permutation.hpp"
#include "parkfact/polynomial.hpp"

namespace parkfact {

/// A tree on [n] rooted at 0, stored as a parent map. parent(0) == 0 is a
/// sentinel.
class LabelledTree {
 public:
  /// Single root, n = 0.
  LabelledTree();
  /// `parents` has length n+1; parents[0] is ignored and normalized to 0.
  /// Throws unless every vertex reaches 0.
  explicit LabelledTree(std::vector<Vertex> parents);
  /// children[v] lists the children of v; must describe a tree rooted at 0.
  static LabelledTree from_children(const std::vector<std::vector<Vertex>>& children);
  /// Parses "0:-,1:0,2:1"; the "0:-" entry is optional.
  static LabelledTree parse(std::string_view text);

  int n() const { return static_cast<int>(parent_.size()) - 1; }
  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> parents() const { return parent_; }
  /// Children of each vertex in increasing order.
  std::vector<std::vector<Vertex>> children() const;
  /// Descendants of v (excluding v), sorted.
  std::vector<Vertex> descendants(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
  friend auto operator<=>(const LabelledTree&, const LabelledTree&) = default;

 private:
  std::vector<Vertex> parent_;
};

struct TreeStats {
  int inv = 0;
  int coinv = 0;
  int depth = 0;
};

/// One pass over the tree: every (ancestor, descendant) pair is an inversion
/// when ancestor > descendant, a coinversion otherwise.
TreeStats tree_stats(const LabelledTree& tree);
int inv(const LabelledTree& tree);
int coinv(const LabelledTree& tree);
int depth(const LabelledTree& tree);

/// (n+1)^{n-1}, with the n = 0 case equal to 1.
std::uint64_t cayley_count(int n);

/// Decodes rank in [0, (n+1)^{n-1}) as the Pruefer sequence of its base-(n+1)
/// digits and roots the result at 0.
LabelledTree unrank_tree(int n, std::uint64_t rank);

using TreeVisitor = std::function<void(const LabelledTree&)>;

/// Enumerates trees by iterating all parent vectors and keeping the acyclic
/// ones. Cost (n+1)^n; intended for small n and as a cross-check.
void for_each_tree_by_parent_vectors(int n, const TreeVisitor& visit);
/// Enumerates trees with rank in [begin, end) via Pruefer unranking.
void for_each_tree_by_pruefer(int n, const TreeVisitor& visit, std::uint64_t begin, std::uint64_t end);
/// Every tree on [n] exactly once: parent-vector iteration for n <= 4,
/// Pruefer unranking beyond.
void for_each_tree(int n, const TreeVisitor& visit);
std::vector<LabelledTree> enumerate_trees(int n);

/// sum over trees of q^inv t^coinv.
BivariatePoly inversion_enumerator(int n);
/// sum over trees of q^depth.
BivariatePoly depth_enumerator(int n);

}  // namespace parkfact

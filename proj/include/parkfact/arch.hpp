#pragma once

#include <string>
#include <vector>

#include "parkfact/factorization.hpp"
#include "parkfact/permutation.hpp"

namespace parkfact {

struct Arc {
  int left = 0;
  int right = 0;
  int label = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Labelled arcs over the axis positions 0..n. Arcs are kept sorted by label.
class ArchDiagram {
 public:
  explicit ArchDiagram(int n = 0) : n_(n) {}
  /// Throws if an arc is degenerate or leaves [0, n]. Does not test validity.
  ArchDiagram(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Arc carrying `label`; throws if absent.
  const Arc& arc(int label) const;
  /// "(l,r,label)(l,r,label)..." in label order.
  std::string to_string() const;

  friend bool operator==(const ArchDiagram&, const ArchDiagram&) = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

struct Rotator {
  int position = 0;
  std::vector<int> labels;
};

/// Arcs leaving to the right by increasing right endpoint, then arcs leaving
/// to the left by increasing left endpoint.
Rotator rotator(const ArchDiagram& a, int position);

/// Vertex s_i at position i; factor k becomes the arc labelled k.
ArchDiagram sigma_diagram(const Factorization& f, const FullCycle& sigma);
inline ArchDiagram factorization_to_arch(const Factorization& f, const FullCycle& sigma) {
  return sigma_diagram(f, sigma);
}

bool arcs_cross(const Arc& x, const Arc& y);
/// Labels 1..n once each, spanning tree, noncrossing, increasing rotators.
bool is_valid_arch(const ArchDiagram& a);

/// Factor k joins the sigma-labels of arc k's endpoints. Throws
/// std::invalid_argument on an invalid diagram.
Factorization arch_to_factorization(const ArchDiagram& a, const FullCycle& sigma);

/// Arcs nested under no other arc, left to right.
std::vector<Arc> caps(const ArchDiagram& a);
inline bool is_simple(const ArchDiagram& a) { return caps(a).size() == 1; }

struct ArchPart {
  /// Simple diagram with labels 1..|labels|.
  ArchDiagram diagram;
  /// Original labels, increasing; the i-th smallest became label i.
  std::vector<int> labels;
};

/// One part per cap, left to right.
std::vector<ArchPart> decompose_simple(const ArchDiagram& a);
/// Concatenates parts in decreasing order of their original cap labels.
ArchDiagram recompose(const std::vector<ArchPart>& parts);

}  // namespace parkfact

#include "parkfact/arch.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parkfact {

ArchDiagram::ArchDiagram(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw std::invalid_argument("arch diagram needs n >= 0");
  for (auto& arc : arcs_) {
    if (arc.left > arc.right) std::swap(arc.left, arc.right);
    if (arc.left == arc.right || arc.left < 0 || arc.right > n) {
      throw std::invalid_argument("arc (" + std::to_string(arc.left) + "," + std::to_string(arc.right) + ") outside [0," +
                                  std::to_string(n) + "]");
    }
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) {
    return std::tie(x.label, x.left, x.right) < std::tie(y.label, y.left, y.right);
  });
}

const Arc& ArchDiagram::arc(int label) const {
  for (const auto& a : arcs_) {
    if (a.label == label) return a;
  }
  throw std::invalid_argument("no arc labelled " + std::to_string(label));
}

std::string ArchDiagram::to_string() const {
  std::string out;
  for (const auto& a : arcs_) {
    out += "(" + std::to_string(a.left) + "," + std::to_string(a.right) + "," + std::to_string(a.label) + ")";
  }
  return out.empty() ? "()" : out;
}

Rotator rotator(const ArchDiagram& a, int position) {
  std::vector<const Arc*> right, left;
  for (const auto& arc : a.arcs()) {
    if (arc.left == position) right.push_back(&arc);
    if (arc.right == position) left.push_back(&arc);
  }
  std::sort(right.begin(), right.end(), [](const Arc* x, const Arc* y) { return x->right < y->right; });
  std::sort(left.begin(), left.end(), [](const Arc* x, const Arc* y) { return x->left < y->left; });
  Rotator r{position, {}};
  for (const Arc* arc : right) r.labels.push_back(arc->label);
  for (const Arc* arc : left) r.labels.push_back(arc->label);
  return r;
}

ArchDiagram sigma_diagram(const Factorization& f, const FullCycle& sigma) {
  if (f.n() != sigma.n()) throw std::invalid_argument("factorization and cycle act on different ground sets");
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const int x = sigma.position_of(f[k].lo());
    const int y = sigma.position_of(f[k].hi());
    arcs.push_back(Arc{std::min(x, y), std::max(x, y), static_cast<int>(k) + 1});
  }
  return ArchDiagram(f.n(), std::move(arcs));
}

bool arcs_cross(const Arc& x, const Arc& y) {
  return (x.left < y.left && y.left < x.right && x.right < y.right) ||
         (y.left < x.left && x.left < y.right && y.right < x.right);
}

bool is_valid_arch(const ArchDiagram& a) {
  const int n = a.n();
  const auto& arcs = a.arcs();
  if (static_cast<int>(arcs.size()) != n) return false;
  for (int k = 0; k < n; ++k) {
    if (arcs[static_cast<std::size_t>(k)].label != k + 1) return false;
  }
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (const auto& arc : arcs) {
    const int x = find(arc.left), y = find(arc.right);
    if (x == y) return false;
    parent[static_cast<std::size_t>(x)] = y;
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs_cross(arcs[i], arcs[j])) return false;
    }
  }
  for (int v = 0; v <= n; ++v) {
    const auto r = rotator(a, v);
    if (!std::is_sorted(r.labels.begin(), r.labels.end())) return false;
  }
  return true;
}

Factorization arch_to_factorization(const ArchDiagram& a, const FullCycle& sigma) {
  if (a.n() != sigma.n()) throw std::invalid_argument("diagram and cycle act on different ground sets");
  if (!is_valid_arch(a)) throw std::invalid_argument("invalid arch diagram " + a.to_string());
  std::vector<Transposition> factors;
  for (const auto& arc : a.arcs()) factors.emplace_back(sigma.at(arc.left), sigma.at(arc.right));
  return Factorization(a.n(), std::move(factors));
}

std::vector<Arc> caps(const ArchDiagram& a) {
  std::vector<Arc> out;
  for (const auto& x : a.arcs()) {
    const bool nested = std::any_of(a.arcs().begin(), a.arcs().end(), [&](const Arc& y) {
      return y.label != x.label && y.left <= x.left && x.right <= y.right;
    });
    if (!nested) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const Arc& x, const Arc& y) { return x.left < y.left; });
  return out;
}

std::vector<ArchPart> decompose_simple(const ArchDiagram& a) {
  if (!is_valid_arch(a)) throw std::invalid_argument("invalid arch diagram " + a.to_string());
  std::vector<ArchPart> parts;
  for (const auto& cap : caps(a)) {
    std::vector<Arc> inside;
    for (const auto& arc : a.arcs()) {
      if (cap.left <= arc.left && arc.right <= cap.right) inside.push_back(arc);
    }
    ArchPart part;
    for (const auto& arc : inside) part.labels.push_back(arc.label);
    std::sort(part.labels.begin(), part.labels.end());
    for (auto& arc : inside) {
      arc.left -= cap.left;
      arc.right -= cap.left;
      arc.label = static_cast<int>(std::lower_bound(part.labels.begin(), part.labels.end(), arc.label) - part.labels.begin()) + 1;
    }
    part.diagram = ArchDiagram(cap.right - cap.left, std::move(inside));
    parts.push_back(std::move(part));
  }
  return parts;
}

ArchDiagram recompose(const std::vector<ArchPart>& parts) {
  struct Keyed {
    int cap_label;
    const ArchPart* part;
  };
  std::vector<Keyed> order;
  for (const auto& part : parts) {
    const auto c = caps(part.diagram);
    if (c.size() != 1) throw std::invalid_argument("part " + part.diagram.to_string() + " is not simple");
    if (part.labels.size() != part.diagram.arcs().size()) throw std::invalid_argument("part label set has the wrong size");
    order.push_back({part.labels[static_cast<std::size_t>(c.front().label) - 1], &part});
  }
  std::sort(order.begin(), order.end(), [](const Keyed& x, const Keyed& y) { return x.cap_label > y.cap_label; });
  std::vector<Arc> arcs;
  int offset = 0;
  for (const auto& k : order) {
    for (const auto& arc : k.part->diagram.arcs()) {
      arcs.push_back(Arc{arc.left + offset, arc.right + offset, k.part->labels[static_cast<std::size_t>(arc.label) - 1]});
    }
    offset += k.part->diagram.n();
  }
  ArchDiagram out(offset, std::move(arcs));
  if (!is_valid_arch(out)) throw std::invalid_argument("parts do not recompose to a valid diagram");
  return out;
}

}  // namespace parkfact

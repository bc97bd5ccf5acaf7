#include "parkfact/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace parkfact {

namespace {

void check_reaches_root(const std::vector<Vertex>& parent) {
  const std::size_t size = parent.size();
  // 0 = unknown, 1 = on current walk, 2 = reaches root
  std::vector<char> state(size, 0);
  state[0] = 2;
  std::vector<std::size_t> walk;
  for (std::size_t start = 1; start < size; ++start) {
    walk.clear();
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = static_cast<std::size_t>(parent[v]);
    }
    if (state[v] == 1) throw std::invalid_argument("parent map contains a cycle through vertex " + std::to_string(v));
    for (std::size_t w : walk) state[w] = 2;
  }
}

}  // namespace

LabelledTree::LabelledTree() : parent_{0} {}

LabelledTree::LabelledTree(std::vector<Vertex> parents) : parent_(std::move(parents)) {
  if (parent_.empty()) throw std::invalid_argument("tree needs at least the root");
  parent_[0] = 0;
  const int n = static_cast<int>(parent_.size()) - 1;
  for (std::size_t v = 1; v < parent_.size(); ++v) {
    if (parent_[v] < 0 || parent_[v] > n || parent_[v] == static_cast<Vertex>(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has invalid parent " + std::to_string(parent_[v]));
    }
  }
  check_reaches_root(parent_);
}

LabelledTree LabelledTree::from_children(const std::vector<std::vector<Vertex>>& children) {
  std::vector<Vertex> parent(children.size(), -1);
  parent[0] = 0;
  for (std::size_t v = 0; v < children.size(); ++v) {
    for (Vertex c : children[v]) {
      if (c <= 0 || static_cast<std::size_t>(c) >= children.size() || parent[static_cast<std::size_t>(c)] != -1) {
        throw std::invalid_argument("child lists do not describe a tree");
      }
      parent[static_cast<std::size_t>(c)] = static_cast<Vertex>(v);
    }
  }
  if (std::find(parent.begin(), parent.end(), -1) != parent.end()) {
    throw std::invalid_argument("child lists leave a vertex without a parent");
  }
  return LabelledTree(std::move(parent));
}

LabelledTree LabelledTree::parse(std::string_view text) {
  std::vector<std::pair<int, int>> entries;
  std::string s(text);
  for (char& ch : s) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(s);
  std::string token;
  int max_vertex = 0;
  while (in >> token) {
    auto colon = token.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("tree entry \"" + token + "\" lacks ':'");
    int v = std::stoi(token.substr(0, colon));
    std::string p = token.substr(colon + 1);
    max_vertex = std::max(max_vertex, v);
    if (v == 0) {
      if (p != "-" && p != "0") throw std::invalid_argument("root entry must be \"0:-\"");
      continue;
    }
    entries.emplace_back(v, std::stoi(p));
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(max_vertex) + 1, -1);
  parent[0] = 0;
  for (auto [v, p] : entries) {
    if (parent[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
    parent[static_cast<std::size_t>(v)] = p;
  }
  for (std::size_t v = 1; v < parent.size(); ++v) {
    if (parent[v] == -1) throw std::invalid_argument("vertex " + std::to_string(v) + " has no parent entry");
  }
  return LabelledTree(std::move(parent));
}

std::vector<std::vector<Vertex>> LabelledTree::children() const {
  std::vector<std::vector<Vertex>> out(parent_.size());
  for (std::size_t v = 1; v < parent_.size(); ++v) out[static_cast<std::size_t>(parent_[v])].push_back(static_cast<Vertex>(v));
  return out;
}

std::vector<Vertex> LabelledTree::descendants(Vertex v) const {
  std::vector<Vertex> out;
  for (std::size_t w = 1; w < parent_.size(); ++w) {
    for (Vertex a = static_cast<Vertex>(w); a != 0;) {
      a = parent_[static_cast<std::size_t>(a)];
      if (a == v) {
        out.push_back(static_cast<Vertex>(w));
        break;
      }
    }
  }
  return out;
}

std::string LabelledTree::to_string() const {
  std::string out = "0:-";
  for (std::size_t v = 1; v < parent_.size(); ++v) out += "," + std::to_string(v) + ":" + std::to_string(parent_[v]);
  return out;
}

TreeStats tree_stats(const LabelledTree& tree) {
  TreeStats stats;
  const auto kids = tree.children();
  // Iterative DFS carrying the current root path.
  std::vector<Vertex> path{0};
  std::vector<std::size_t> next_child{0};
  while (!path.empty()) {
    const Vertex v = path.back();
    auto& k = next_child.back();
    if (k == kids[static_cast<std::size_t>(v)].size()) {
      path.pop_back();
      next_child.pop_back();
      continue;
    }
    const Vertex c = kids[static_cast<std::size_t>(v)][k++];
    for (Vertex a : path) {
      if (a > c) {
        ++stats.inv;
      } else {
        ++stats.coinv;
      }
    }
    stats.depth += static_cast<int>(path.size());
    path.push_back(c);
    next_child.push_back(0);
  }
  return stats;
}

int inv(const LabelledTree& tree) { return tree_stats(tree).inv; }
int coinv(const LabelledTree& tree) { return tree_stats(tree).coinv; }
int depth(const LabelledTree& tree) { return tree_stats(tree).depth; }

std::uint64_t cayley_count(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) return 1;
  std::uint64_t r = 1;
  for (int i = 0; i < n - 1; ++i) r *= static_cast<std::uint64_t>(n + 1);
  return r;
}

LabelledTree unrank_tree(int n, std::uint64_t rank) {
  if (rank >= cayley_count(n)) throw std::out_of_range("tree rank out of range");
  if (n == 0) return LabelledTree();
  const std::size_t vertices = static_cast<std::size_t>(n) + 1;
  std::vector<Vertex> code(static_cast<std::size_t>(n - 1));
  for (std::size_t i = code.size(); i-- > 0;) {
    code[i] = static_cast<Vertex>(rank % vertices);
    rank /= vertices;
  }
  std::vector<int> degree(vertices, 1);
  for (Vertex v : code) ++degree[static_cast<std::size_t>(v)];

  std::vector<std::vector<Vertex>> adj(vertices);
  // Linear-time Pruefer decoding.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex v : code) {
    adj[leaf].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(leaf));
    if (--degree[static_cast<std::size_t>(v)] == 1 && static_cast<std::size_t>(v) < ptr) {
      leaf = static_cast<std::size_t>(v);
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // Last edge joins the remaining leaf with vertex n.
  adj[leaf].push_back(n);
  adj[static_cast<std::size_t>(n)].push_back(static_cast<Vertex>(leaf));

  std::vector<Vertex> parent(vertices, -1);
  parent[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (w != 0 && parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  return LabelledTree(std::move(parent));
}

void for_each_tree_by_parent_vectors(int n, const TreeVisitor& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > 7) throw std::invalid_argument("parent-vector iteration is limited to n <= 7");
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    bool acyclic = true;
    for (std::size_t v = 1; v < parent.size() && acyclic; ++v) {
      // Walk up at most n steps; longer walks never reach the root.
      Vertex a = static_cast<Vertex>(v);
      int steps = 0;
      while (a != 0 && steps <= n) {
        a = parent[static_cast<std::size_t>(a)];
        ++steps;
      }
      acyclic = a == 0;
    }
    if (acyclic) visit(LabelledTree(parent));

    std::size_t k = 1;
    while (k < parent.size()) {
      if (++parent[k] <= n) break;
      parent[k] = 0;
      ++k;
    }
    if (k >= parent.size()) break;
  }
}

void for_each_tree_by_pruefer(int n, const TreeVisitor& visit, std::uint64_t begin, std::uint64_t end) {
  end = std::min(end, cayley_count(n));
  for (std::uint64_t r = begin; r < end; ++r) visit(unrank_tree(n, r));
}

void for_each_tree(int n, const TreeVisitor& visit) {
  if (n <= 4) {
    for_each_tree_by_parent_vectors(n, visit);
  } else {
    for_each_tree_by_pruefer(n, visit, 0, cayley_count(n));
  }
}

std::vector<LabelledTree> enumerate_trees(int n) {
  std::vector<LabelledTree> out;
  out.reserve(static_cast<std::size_t>(cayley_count(n)));
  for_each_tree(n, [&](const LabelledTree& t) { out.push_back(t); });
  return out;
}

BivariatePoly inversion_enumerator(int n) {
  PolyTally tally;
  for_each_tree(n, [&](const LabelledTree& t) {
    auto s = tree_stats(t);
    tally.add(static_cast<unsigned>(s.inv), static_cast<unsigned>(s.coinv));
  });
  return tally.to_poly();
}

BivariatePoly depth_enumerator(int n) {
  PolyTally tally;
  for_each_tree(n, [&](const LabelledTree& t) { tally.add(static_cast<unsigned>(tree_stats(t).depth), 0); });
  return tally.to_poly();
}

}  // namespace parkfact

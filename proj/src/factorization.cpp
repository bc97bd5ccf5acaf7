#include "parkfact/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parkfact {

namespace {

// cycle id of every point of a permutation given in image form
void label_cycles(const std::vector<Vertex>& images, std::vector<int>& ids) {
  ids.assign(images.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (ids[s] != -1) continue;
    for (std::size_t v = s; ids[v] == -1; v = static_cast<std::size_t>(images[v])) ids[v] = next;
    ++next;
  }
}

// x -> tau x (left to right: apply tau first)
void left_multiply(std::vector<Vertex>& images, const Transposition& tau) {
  std::swap(images[static_cast<std::size_t>(tau.lo())], images[static_cast<std::size_t>(tau.hi())]);
}

// rho -> rho tau (apply rho, then tau)
void right_multiply(std::vector<Vertex>& images, const Transposition& tau) {
  for (auto& v : images) v = tau.apply(v);
}

struct Searcher {
  int n;
  const FactorizationVisitor& visit;
  std::vector<Transposition> factors;
  // partial product rho and remaining quotient x = rho^{-1} sigma
  std::vector<Vertex> rho;
  std::vector<Vertex> rest;

  void run(int depth) {
    if (depth == n) {
      visit(Factorization(n, factors));
      return;
    }
    std::vector<int> rho_ids, rest_ids;
    label_cycles(rho, rho_ids);
    label_cycles(rest, rest_ids);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b <= n; ++b) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        // a cut of the partial product can never be part of a minimal factorization
        if (rho_ids[ua] == rho_ids[ub]) continue;
        // the factor must cut the remaining quotient to stay on a geodesic to sigma
        if (rest_ids[ua] != rest_ids[ub]) continue;
        Transposition tau(a, b);
        factors.push_back(tau);
        right_multiply(rho, tau);
        left_multiply(rest, tau);
        run(depth + 1);
        left_multiply(rest, tau);
        right_multiply(rho, tau);
        factors.pop_back();
      }
    }
  }
};

void check_sequence_length(const Factorization& f) {
  if (static_cast<int>(f.size()) != f.n()) {
    throw std::invalid_argument("factorization " + f.to_string() + " has " + std::to_string(f.size()) +
                                " factors; a full cycle of [" + std::to_string(f.n()) + "] needs " +
                                std::to_string(f.n()));
  }
}

}  // namespace

Factorization::Factorization(int n, std::vector<Transposition> factors) : n_(n), factors_(std::move(factors)) {
  if (n < 0) throw std::invalid_argument("ground set [n] needs n >= 0");
  for (const auto& tau : factors_) {
    if (tau.hi() > n) throw std::invalid_argument("factor " + tau.to_string() + " outside [0," + std::to_string(n) + "]");
  }
}

Factorization Factorization::parse(std::string_view text, int n) {
  return Factorization(n, parse_transpositions(text));
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "()";
  std::string out;
  for (const auto& tau : factors_) out += tau.to_string();
  return out;
}

Permutation product(const Factorization& f) {
  std::vector<Vertex> images(static_cast<std::size_t>(f.n()) + 1);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& tau : f.factors()) right_multiply(images, tau);
  return Permutation::from_images(std::move(images));
}

bool graph_is_cycle_forest(const Factorization& f, const Permutation& pi) {
  if (f.n() != pi.n()) throw std::invalid_argument("factorization and permutation act on different ground sets");
  const auto size = static_cast<std::size_t>(f.n()) + 1;
  std::vector<std::size_t> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& tau : f.factors()) {
    auto ra = find(static_cast<std::size_t>(tau.lo()));
    auto rb = find(static_cast<std::size_t>(tau.hi()));
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  // each component must coincide with the support of one cycle of pi
  std::vector<int> cycle_of(size, -1);
  const auto cycles = pi.cycles();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (Vertex v : cycles[c]) cycle_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  std::vector<int> component_cycle(size, -1);
  std::vector<int> cycle_component(cycles.size(), -1);
  for (std::size_t v = 0; v < size; ++v) {
    const auto root = find(v);
    const int c = cycle_of[v];
    if (component_cycle[root] == -1) component_cycle[root] = c;
    if (cycle_component[static_cast<std::size_t>(c)] == -1) cycle_component[static_cast<std::size_t>(c)] = static_cast<int>(root);
    if (component_cycle[root] != c || cycle_component[static_cast<std::size_t>(c)] != static_cast<int>(root)) return false;
  }
  return true;
}

bool is_minimal_for(const Factorization& f, const Permutation& pi) {
  if (f.n() != pi.n()) throw std::invalid_argument("factorization and permutation act on different ground sets");
  if (product(f) != pi) return false;
  const bool forest = graph_is_cycle_forest(f, pi);
  const bool shortest = static_cast<int>(f.size()) == f.n() + 1 - pi.cycle_count();
  if (forest != shortest) {
    throw std::logic_error("graph and length criteria disagree on " + f.to_string() + " for " + pi.to_string());
  }
  return forest;
}

void for_each_factorization(const FullCycle& sigma, const FactorizationVisitor& visit) {
  const int n = sigma.n();
  Searcher s{n, visit, {}, {}, {}};
  s.rho.resize(static_cast<std::size_t>(n) + 1);
  std::iota(s.rho.begin(), s.rho.end(), 0);
  const Permutation target = sigma.to_permutation();
  s.rest.assign(target.images().begin(), target.images().end());
  s.factors.reserve(static_cast<std::size_t>(n));
  s.run(0);
}

std::vector<Factorization> enumerate_factorizations(const FullCycle& sigma) {
  std::vector<Factorization> out;
  for_each_factorization(sigma, [&](const Factorization& f) { out.push_back(f); });
  return out;
}

std::vector<int> lower(const Factorization& f) {
  std::vector<int> out;
  out.reserve(f.size());
  for (const auto& tau : f.factors()) out.push_back(tau.lo());
  return out;
}

std::vector<int> upper(const Factorization& f) {
  std::vector<int> out;
  out.reserve(f.size());
  for (const auto& tau : f.factors()) out.push_back(tau.hi());
  return out;
}

AreaPair areas(const Factorization& f) {
  check_sequence_length(f);
  if (!product(f).is_full_cycle()) {
    throw std::invalid_argument(f.to_string() + " is not a minimal factorization of a full cycle");
  }
  const int n = f.n();
  const int base = n * (n - 1) / 2;
  AreaPair r;
  for (const auto& tau : f.factors()) {
    r.lower -= tau.lo();
    r.upper += tau.hi();
  }
  r.lower += base;
  r.upper -= base;
  return r;
}

int area_lower(const Factorization& f) { return areas(f).lower; }
int area_upper(const Factorization& f) { return areas(f).upper; }
int total_difference(const Factorization& f) { return areas(f).difference(); }

BivariatePoly factorization_enumerator(const FullCycle& sigma) {
  PolyTally tally;
  const int base = sigma.n() * (sigma.n() - 1) / 2;
  for_each_factorization(sigma, [&](const Factorization& f) {
    int sum_lo = 0, sum_hi = 0;
    for (const auto& tau : f.factors()) {
      sum_lo += tau.lo();
      sum_hi += tau.hi();
    }
    tally.add(static_cast<unsigned>(base - sum_lo), static_cast<unsigned>(sum_hi - base));
  });
  return tally.to_poly();
}

RestrictedEnumerators restricted_enumerators(int n) {
  struct Record {
    AreaPair areas;
    bool simple, increasing, decreasing, perm_lower;
  };
  std::vector<Record> records;
  for_each_factorization(FullCycle::canonical(n), [&](const Factorization& f) {
    const auto lo = lower(f);
    Record r{areas(f), false, true, true, false};
    for (const auto& tau : f.factors()) {
      if (tau.lo() == 0 && tau.hi() == n) r.simple = true;
    }
    for (std::size_t i = 1; i < lo.size(); ++i) {
      if (lo[i - 1] > lo[i]) r.increasing = false;
      if (lo[i - 1] < lo[i]) r.decreasing = false;
    }
    auto sorted = lo;
    std::sort(sorted.begin(), sorted.end());
    r.perm_lower = true;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i)) r.perm_lower = false;
    }
    records.push_back(r);
  });

  RestrictedEnumerators out;
  for (const auto& r : records) out.max_difference_value = std::max(out.max_difference_value, r.areas.difference());
  PolyTally simple, inc, dec, maxd, perm;
  for (const auto& r : records) {
    const auto ql = static_cast<unsigned>(r.areas.lower);
    const auto tu = static_cast<unsigned>(r.areas.upper);
    if (r.simple) simple.add(ql, tu);
    if (r.increasing) inc.add(ql, tu);
    if (r.decreasing) dec.add(ql, tu);
    if (r.areas.difference() == out.max_difference_value) maxd.add(ql, tu);
    if (r.perm_lower) perm.add(ql, tu);
  }
  out.simple = simple.to_poly();
  out.increasing = inc.to_poly();
  out.decreasing = dec.to_poly();
  out.max_difference = maxd.to_poly();
  out.permutation_lower = perm.to_poly();
  return out;
}

Transposition rotate_down(const Transposition& tau, int n) {
  const int m = n + 1;
  return Transposition((tau.lo() - 1 + m) % m, (tau.hi() - 1 + m) % m);
}

Transposition rotate_up(const Transposition& tau, int n) {
  const int m = n + 1;
  return Transposition((tau.lo() + 1) % m, (tau.hi() + 1) % m);
}

std::size_t simple_index(const Factorization& f) {
  std::size_t found = 0;
  int hits = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].lo() == 0 && f[i].hi() == f.n()) {
      found = i + 1;
      ++hits;
    }
  }
  if (hits != 1) {
    throw std::invalid_argument(f.to_string() + " contains (0 " + std::to_string(f.n()) + ") " + std::to_string(hits) +
                                " times; expected exactly once");
  }
  return found;
}

bool is_simple(const Factorization& f) {
  return std::any_of(f.factors().begin(), f.factors().end(),
                     [&](const Transposition& tau) { return tau.lo() == 0 && tau.hi() == f.n(); });
}

Factorization phi_k(const Factorization& f, std::size_t k) {
  const int n = f.n();
  if (n < 1) throw std::invalid_argument("phi_k needs n >= 1");
  check_sequence_length(f);
  if (k < 1 || k > f.size()) throw std::invalid_argument("phi_k index out of range");
  if (!(f[k - 1].lo() == 0 && f[k - 1].hi() == n)) {
    throw std::invalid_argument("factor " + std::to_string(k) + " of " + f.to_string() + " is not (0 " + std::to_string(n) + ")");
  }
  if (product(f) != FullCycle::canonical(n).to_permutation()) {
    throw std::invalid_argument(f.to_string() + " is not a factorization of sigma_" + std::to_string(n));
  }
  std::vector<Transposition> out;
  for (std::size_t i = k; i < f.size(); ++i) out.push_back(rotate_down(f[i], n));
  for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(f[i]);
  for (const auto& tau : out) {
    if (tau.hi() > n - 1) throw std::logic_error("phi_k produced a factor moving " + std::to_string(n));
  }
  return Factorization(n - 1, std::move(out));
}

Factorization phi_k_inverse(const Factorization& g, std::size_t k, int n) {
  if (g.n() != n - 1 || static_cast<int>(g.size()) != n - 1) {
    throw std::invalid_argument("phi_k_inverse expects a factorization in F_" + std::to_string(n - 1));
  }
  if (k < 1 || static_cast<int>(k) > n) throw std::invalid_argument("phi_k_inverse index out of range");
  const std::size_t m = g.size();
  std::vector<Transposition> out;
  for (std::size_t i = m + 1 - k; i < m; ++i) out.push_back(g[i]);
  out.emplace_back(0, n);
  for (std::size_t i = 0; i + k < m + 1; ++i) out.push_back(rotate_up(g[i], n));
  return Factorization(n, std::move(out));
}

Factorization reflect_conjugate(const Factorization& f) {
  std::vector<Transposition> out;
  for (const auto& tau : f.factors()) out.push_back(reflect_conjugate(tau, f.n()));
  return Factorization(f.n(), std::move(out));
}

Factorization reflect_reverse(const Factorization& f) {
  std::vector<Transposition> out;
  for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it) out.push_back(reflect_conjugate(*it, f.n()));
  return Factorization(f.n(), std::move(out));
}

}  // namespace parkfact

#include "parkfact/inverse_maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace parkfact {

namespace {

void require_unimodal(const FullCycle& sigma) {
  if (!is_unimodal(sigma)) throw std::invalid_argument("sigma " + sigma.to_string() + " is not unimodal");
}

Permutation product_of_slots(int n, const std::vector<std::optional<Transposition>>& slots) {
  std::vector<Transposition> present;
  for (const auto& s : slots) {
    if (s) present.push_back(*s);
  }
  return product(Factorization(n, std::move(present)));
}

void check_step(const Permutation& pi, const FullCycle& sigma, int i, int a) {
  const int n = sigma.n();
  auto fail = [&](const std::string& what) {
    throw std::logic_error("algorithm invariant failed at step " + std::to_string(i) + ": " + what + " (pi = " + pi.to_string() + ")");
  };
  if (!is_sigma_contiguous(pi, sigma)) fail("partial product is not sigma-contiguous");
  if (pi.cycle_count() != n + 2 - i) fail("partial product has " + std::to_string(pi.cycle_count()) + " cycles");
  for (int x = 0; x < a; ++x) {
    if (pi(x) != x) fail("partial product moves " + std::to_string(x) + " < a_j");
  }
  std::vector<bool> in_cycle(static_cast<std::size_t>(n) + 1, false);
  int v = a;
  do {
    in_cycle[static_cast<std::size_t>(v)] = true;
    v = pi(v);
  } while (v != a);
  bool covers = true;
  for (int x = a; x <= n; ++x) covers = covers && in_cycle[static_cast<std::size_t>(x)];
  if (covers) fail("cycle of a_j covers [a_j, n]");
}

Permutation left_times(const Transposition& tau, const Permutation& pi) { return tau.as_permutation(pi.n()) * pi; }
Permutation right_times(const Permutation& pi, const Transposition& tau) { return pi * tau.as_permutation(pi.n()); }

}  // namespace

std::vector<SigmaSide> sigma_sides(const FullCycle& sigma) {
  require_unimodal(sigma);
  const int n = sigma.n();
  const int top = sigma.position_of(n);
  std::vector<SigmaSide> side(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    side[static_cast<std::size_t>(i)] = sigma.position_of(i) < top ? SigmaSide::Left : SigmaSide::Right;
  }
  return side;
}

OmegaOrder omega(const FullCycle& sigma, const ParkingFunction& p) {
  if (p.n() != sigma.n()) throw std::invalid_argument("parking function and cycle have different n");
  OmegaOrder out;
  out.side = sigma_sides(sigma);
  const int n = p.n();
  for (int i = n - 1; i >= 0; --i) {
    std::vector<int> block;
    for (int j = 1; j <= n; ++j) {
      if (p[j - 1] == i) block.push_back(j);
    }
    if (out.side[static_cast<std::size_t>(i)] == SigmaSide::Right) std::reverse(block.begin(), block.end());
    out.order.insert(out.order.end(), block.begin(), block.end());
  }
  return out;
}

Factorization l_inverse(const ParkingFunction& p, const FullCycle& sigma, const LInverseOptions& options) {
  const int n = sigma.n();
  const auto w = omega(sigma, p);
  const Permutation sig = sigma.to_permutation();
  const Permutation sig_inv = sig.inverse();

  std::vector<std::optional<Transposition>> slots(static_cast<std::size_t>(n));
  Permutation pi(n);
  for (int i = 1; i <= n; ++i) {
    const int j = w.order[static_cast<std::size_t>(i) - 1];
    const int a = p[j - 1];
    if (options.check_invariants) check_step(pi, sigma, i, a);

    int s = 0;
    int b = 0;
    Permutation next(n);
    if (w.side[static_cast<std::size_t>(a)] == SigmaSide::Left) {
      s = sig(pi.inverse()(a));
      b = s;
      for (int r = n; r > j; --r) {
        if (const auto& t = slots[static_cast<std::size_t>(r) - 1]) b = t->apply(b);
      }
      next = right_times(pi, Transposition(a, s));
    } else {
      s = sig_inv(pi(a));
      b = s;
      for (int r = 1; r < j; ++r) {
        if (const auto& t = slots[static_cast<std::size_t>(r) - 1]) b = t->apply(b);
      }
      next = left_times(Transposition(a, s), pi);
    }

    if (options.trace) options.trace->push_back(AlgorithmStep{i, pi, slots, j, a, s, b});
    if (options.check_invariants && b <= a) {
      throw std::logic_error("step " + std::to_string(i) + " produced b_j = " + std::to_string(b) + " <= a_j");
    }
    slots[static_cast<std::size_t>(j) - 1] = Transposition(a, b);
    pi = std::move(next);
    if (options.check_invariants && pi != product_of_slots(n, slots)) {
      throw std::logic_error("incremental partial product diverged at step " + std::to_string(i));
    }
  }

  std::vector<Transposition> factors;
  for (const auto& s : slots) factors.push_back(*s);
  Factorization f(n, std::move(factors));
  if (options.check_invariants) {
    if (product(f) != sig) throw std::logic_error("result " + f.to_string() + " does not multiply to sigma");
    if (lower(f) != std::vector<int>(p.entries().begin(), p.entries().end())) {
      throw std::logic_error("result " + f.to_string() + " has the wrong lower sequence");
    }
  }
  return f;
}

Factorization u_inverse(const MajorSequence& m, const FullCycle& sigma, const LInverseOptions& options) {
  if (m.n() != sigma.n()) throw std::invalid_argument("major sequence and cycle have different n");
  require_unimodal(sigma);
  return reflect_conjugate(l_inverse(complement(m), reflect_conjugate(sigma), options));
}

MajorSequence push_heights(const LabelledDyckPath& lower_path) {
  lower_path.validate();
  if (lower_path.side != PathSide::Below) throw std::invalid_argument("pushing starts from a path below the diagonal");
  const int n = lower_path.n();
  auto height = [&](int x) { return x < n ? lower_path.heights[static_cast<std::size_t>(x)] : n; };
  auto on_path = [&](int x, int y) {
    if (x < 0 || x > n) return false;
    const int bottom = x == 0 ? 0 : lower_path.heights[static_cast<std::size_t>(x) - 1];
    return bottom <= y && y <= height(x);
  };
  // label at (x, heights[x]) for x < n
  auto label_at = [&](int x, int y) { return x < n && lower_path.heights[static_cast<std::size_t>(x)] == y ? lower_path.labels[static_cast<std::size_t>(x)] : 0; };

  std::vector<int> rest(static_cast<std::size_t>(n));
  for (int x0 = 0; x0 < n; ++x0) {
    const int label = lower_path.labels[static_cast<std::size_t>(x0)];
    int x = x0, y = lower_path.heights[static_cast<std::size_t>(x0)];
    while (true) {
      ++x;
      ++y;
      if (!on_path(x, y)) continue;
      const int here = label_at(x, y);
      if (here == 0 || here < label) break;
    }
    rest[static_cast<std::size_t>(label) - 1] = y;
  }
  return MajorSequence(std::move(rest));
}

LabelledDyckPath push_upper_path(const LabelledDyckPath& lower_path) { return to_path(push_heights(lower_path)); }

NonUnimodalWitness non_unimodal_witness(const FullCycle& sigma) {
  const int n = sigma.n();
  int valley = 0;
  for (int i = 1; i < n; ++i) {
    if (sigma.at(i - 1) > sigma.at(i) && sigma.at(i) < sigma.at(i + 1)) {
      valley = i;
      break;
    }
  }
  if (valley == 0) throw std::invalid_argument("sigma " + sigma.to_string() + " is unimodal; no witness exists");

  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  entries.back() = sigma.at(valley);

  auto star_without = [&](int skip) {
    std::vector<Transposition> factors;
    for (int k = 1; k <= n; ++k) {
      if (k != skip) factors.emplace_back(0, sigma.at(k));
    }
    return factors;
  };
  auto first = star_without(valley);
  first.emplace_back(sigma.at(valley), sigma.at(valley + 1));
  auto second = star_without(valley - 1);
  second.emplace_back(sigma.at(valley), sigma.at(valley - 1));

  NonUnimodalWitness out{valley, ParkingFunction(entries), Factorization(n, std::move(first)), Factorization(n, std::move(second))};
  const auto sig = sigma.to_permutation();
  for (const auto* f : {&out.first, &out.second}) {
    if (!is_minimal_for(*f, sig) || lower(*f) != entries) {
      throw std::logic_error("witness factorization " + f->to_string() + " is not a preimage of " + out.p.to_string());
    }
  }
  if (out.first == out.second) throw std::logic_error("witness factorizations coincide");
  return out;
}

}  // namespace parkfact

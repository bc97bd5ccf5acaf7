#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "parkfact/arch.hpp"

using namespace parkfact;

namespace {

const FullCycle& six_sigma() {
  static const FullCycle s = FullCycle::parse("0 2 4 5 1 3");
  return s;
}

Factorization six_f() { return Factorization::parse("(1 4)(1 5)(3 4)(0 2)(0 4)", 5); }

ArchDiagram six_arch() { return ArchDiagram(5, {{2, 4, 1}, {3, 4, 2}, {2, 5, 3}, {0, 1, 4}, {0, 2, 5}}); }

std::vector<int> labels_of(const std::vector<Arc>& arcs) {
  std::vector<int> out;
  for (const auto& a : arcs) out.push_back(a.label);
  return out;
}

// at most one cap means no two disjoint outer arcs
bool nested_oracle(const ArchDiagram& a) {
  int outer = 0;
  for (const auto& x : a.arcs()) {
    bool covered = false;
    for (const auto& y : a.arcs()) covered = covered || (y.label != x.label && y.left <= x.left && x.right <= y.right);
    if (!covered) ++outer;
  }
  return outer == 1;
}

}  // namespace

TEST(Arch, SixVertexDiagram) {
  const auto a = sigma_diagram(six_f(), six_sigma());
  EXPECT_EQ(a, six_arch());
  EXPECT_TRUE(is_valid_arch(a));
  EXPECT_EQ(rotator(a, 2).labels, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(a.to_string(), "(2,4,1)(3,4,2)(2,5,3)(0,1,4)(0,2,5)");
  EXPECT_EQ(arch_to_factorization(a, six_sigma()), six_f());
}

TEST(Arch, SmallDiagrams) {
  EXPECT_EQ(sigma_diagram(Factorization::parse("(0 1)", 1), FullCycle::canonical(1)), ArchDiagram(1, {{0, 1, 1}}));
  const auto two = sigma_diagram(Factorization::parse("(0 1)(0 2)", 2), FullCycle::canonical(2));
  EXPECT_EQ(two, ArchDiagram(2, {{0, 1, 1}, {0, 2, 2}}));
  EXPECT_EQ(labels_of(caps(two)), std::vector<int>{2});
  EXPECT_TRUE(is_simple(two));
  EXPECT_EQ(ArchDiagram(0).to_string(), "()");
}

TEST(Arch, Validity) {
  EXPECT_TRUE(arcs_cross({0, 2, 1}, {1, 3, 2}));
  EXPECT_FALSE(arcs_cross({0, 2, 1}, {2, 3, 2}));
  EXPECT_FALSE(arcs_cross({0, 3, 1}, {1, 2, 2}));
  EXPECT_FALSE(is_valid_arch(ArchDiagram(3, {{0, 2, 1}, {1, 3, 2}, {0, 1, 3}})));
  // (1 2)(0 1) is a member of F_2, so this rotator order is increasing
  EXPECT_TRUE(is_valid_arch(ArchDiagram(2, {{0, 1, 2}, {1, 2, 1}})));
  EXPECT_FALSE(is_valid_arch(ArchDiagram(2, {{0, 1, 1}, {1, 2, 2}})));
  EXPECT_FALSE(is_valid_arch(ArchDiagram(2, {{0, 1, 1}, {0, 1, 2}})));
  EXPECT_FALSE(is_valid_arch(ArchDiagram(2, {{0, 1, 1}, {0, 2, 3}})));
  EXPECT_THROW(ArchDiagram(2, {{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(ArchDiagram(2, {{0, 3, 1}}), std::invalid_argument);
  EXPECT_THROW(arch_to_factorization(ArchDiagram(2, {{0, 1, 1}, {1, 2, 2}}), FullCycle::canonical(2)), std::invalid_argument);
}

TEST(Arch, ArchesMatchFactorizations) {
  for (int n = 1; n <= 3; ++n) {
    // every labelled arc set on [0, n] with labels 1..n
    std::vector<std::pair<int, int>> spans;
    for (int l = 0; l <= n; ++l) {
      for (int r = l + 1; r <= n; ++r) spans.emplace_back(l, r);
    }
    std::set<std::string> valid;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<Arc> arcs;
      for (int k = 0; k < n; ++k) {
        const auto [l, r] = spans[idx[static_cast<std::size_t>(k)]];
        arcs.push_back({l, r, k + 1});
      }
      ArchDiagram a(n, arcs);
      if (is_valid_arch(a)) valid.insert(a.to_string());
      int k = n - 1;
      while (k >= 0 && idx[static_cast<std::size_t>(k)] + 1 == spans.size()) idx[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
      ++idx[static_cast<std::size_t>(k)];
    }
    for (const auto& sigma : all_full_cycles(n)) {
      std::set<std::string> images;
      for (const auto& f : enumerate_factorizations(sigma)) images.insert(sigma_diagram(f, sigma).to_string());
      EXPECT_EQ(images, valid) << sigma.to_string();
    }
  }
}

TEST(Arch, RoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& sigma : all_full_cycles(n)) {
      for (const auto& f : enumerate_factorizations(sigma)) {
        const auto a = sigma_diagram(f, sigma);
        ASSERT_TRUE(is_valid_arch(a)) << f.to_string();
        EXPECT_EQ(arch_to_factorization(a, sigma), f);
      }
    }
  }
}

TEST(Arch, Caps) {
  EXPECT_EQ(labels_of(caps(six_arch())), (std::vector<int>{5, 3}));
  EXPECT_EQ(labels_of(caps(ArchDiagram(1, {{0, 1, 1}}))), std::vector<int>{1});
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : enumerate_factorizations(FullCycle::canonical(n))) {
      const auto a = sigma_diagram(f, FullCycle::canonical(n));
      EXPECT_EQ(is_simple(a), nested_oracle(a));
      EXPECT_EQ(is_simple(a), is_simple(f));
    }
  }
}

TEST(Arch, DecomposeAndRecompose) {
  const auto parts = decompose_simple(six_arch());
  ASSERT_EQ(parts.size(), 2u);
  std::vector<int> all;
  for (const auto& part : parts) {
    EXPECT_TRUE(is_simple(part.diagram));
    EXPECT_TRUE(is_valid_arch(part.diagram));
    EXPECT_TRUE(std::is_sorted(part.labels.begin(), part.labels.end()));
    all.insert(all.end(), part.labels.begin(), part.labels.end());
  }
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(recompose(parts), six_arch());

  const auto simple = ArchDiagram(2, {{0, 1, 1}, {0, 2, 2}});
  const auto one = decompose_simple(simple);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].diagram, simple);

  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : enumerate_factorizations(FullCycle::canonical(n))) {
      const auto a = sigma_diagram(f, FullCycle::canonical(n));
      EXPECT_EQ(recompose(decompose_simple(a)), a) << f.to_string();
    }
  }
}

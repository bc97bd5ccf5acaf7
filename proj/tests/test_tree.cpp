#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "parkfact/tree.hpp"

using namespace parkfact;

namespace {

// direct pair scan over ancestor/descendant pairs
TreeStats stats_oracle(const LabelledTree& t) {
  TreeStats s;
  const int n = t.n();
  for (int v = 1; v <= n; ++v) {
    for (Vertex a = t.parent(v);; a = t.parent(a)) {
      ++s.depth;
      if (a > v) ++s.inv; else ++s.coinv;
      if (a == 0) break;
    }
  }
  return s;
}

}  // namespace

TEST(Tree, PathZeroOneTwo) {
  const LabelledTree t({0, 0, 1});
  const auto s = tree_stats(t);
  EXPECT_EQ(s.inv, 0);
  EXPECT_EQ(s.coinv, 3);
  EXPECT_EQ(s.depth, 3);
}

TEST(Tree, PathZeroTwoOne) {
  const LabelledTree t({0, 2, 0});
  EXPECT_EQ(inv(t), 1);
  EXPECT_EQ(coinv(t), 2);
  EXPECT_EQ(depth(t), 3);
}

TEST(Tree, Star) {
  for (int n = 0; n <= 6; ++n) {
    const LabelledTree t(std::vector<Vertex>(static_cast<std::size_t>(n) + 1, 0));
    EXPECT_EQ(inv(t), 0);
    EXPECT_EQ(coinv(t), n);
    EXPECT_EQ(depth(t), n);
  }
}

TEST(Tree, RejectsCyclesAndBadParents) {
  EXPECT_THROW(LabelledTree({0, 2, 1}), std::invalid_argument);
  EXPECT_THROW(LabelledTree({0, 1}), std::invalid_argument);
  EXPECT_THROW(LabelledTree({0, 5}), std::invalid_argument);
  EXPECT_THROW(LabelledTree(std::vector<Vertex>{}), std::invalid_argument);
}

TEST(Tree, TextRoundTrip) {
  const LabelledTree t({0, 2, 0, 2});
  EXPECT_EQ(t.to_string(), "0:-,1:2,2:0,3:2");
  EXPECT_EQ(LabelledTree::parse(t.to_string()), t);
  EXPECT_EQ(LabelledTree::from_children(t.children()), t);
  EXPECT_EQ(t.children()[2], (std::vector<Vertex>{1, 3}));
}

TEST(Tree, CayleyCounts) {
  EXPECT_EQ(enumerate_trees(0).size(), 1u);
  EXPECT_EQ(enumerate_trees(2).size(), 3u);
  EXPECT_EQ(enumerate_trees(3).size(), 16u);
  EXPECT_EQ(cayley_count(6), 16807u);
}

TEST(Tree, EnumeratorsAgree) {
  for (int n = 0; n <= 5; ++n) {
    std::set<LabelledTree> a, b;
    for_each_tree_by_parent_vectors(n, [&](const LabelledTree& t) { EXPECT_TRUE(a.insert(t).second); });
    for_each_tree_by_pruefer(n, [&](const LabelledTree& t) { EXPECT_TRUE(b.insert(t).second); }, 0, cayley_count(n));
    EXPECT_EQ(a, b) << n;
    EXPECT_EQ(a.size(), cayley_count(n));
  }
}

TEST(Tree, UnrankCoversAllTrees) {
  std::set<LabelledTree> seen;
  for (std::uint64_t r = 0; r < cayley_count(4); ++r) seen.insert(unrank_tree(4, r));
  EXPECT_EQ(seen.size(), cayley_count(4));
}

TEST(Tree, StatsAgreeWithOracle) {
  for (int n = 0; n <= 5; ++n) {
    for_each_tree(n, [&](const LabelledTree& t) {
      const auto s = tree_stats(t), o = stats_oracle(t);
      EXPECT_EQ(s.inv, o.inv);
      EXPECT_EQ(s.coinv, o.coinv);
      EXPECT_EQ(s.depth, o.depth);
      EXPECT_EQ(s.inv + s.coinv, s.depth);
    });
  }
}

TEST(Tree, InversionEnumeratorPins) {
  EXPECT_EQ(inversion_enumerator(0), BivariatePoly::parse("1"));
  EXPECT_EQ(inversion_enumerator(1), BivariatePoly::parse("t"));
  EXPECT_EQ(inversion_enumerator(2), BivariatePoly::parse("t^2 + t^3 + t^2*q"));
  EXPECT_EQ(inversion_enumerator(3),
            BivariatePoly::parse("t^6 + 2*t^5*q + 2*t^4*q^2 + t^3*q^3 + t^5 + t^4*q + t^3*q^2 + 3*t^4 + 3*t^3*q + t^3"));
}

TEST(Tree, DepthEnumeratorPins) {
  EXPECT_EQ(depth_enumerator(2), BivariatePoly::parse("q^2 + 2*q^3"));
  EXPECT_EQ(depth_enumerator(3), BivariatePoly::parse("q^3 + 6*q^4 + 3*q^5 + 6*q^6"));
  EXPECT_EQ(depth_enumerator(4),
            BivariatePoly::parse("q^4 + 12*q^5 + 24*q^6 + 28*q^7 + 24*q^8 + 12*q^9 + 24*q^10"));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(depth_enumerator(n), inversion_enumerator(n).diagonal()) << n;
}

TEST(Tree, ReducedEnumeratorIsSymmetric) {
  for (int n = 0; n <= 5; ++n) {
    const auto r = inversion_enumerator(n).divide_by_t_power(static_cast<unsigned>(n));
    EXPECT_EQ(r, r.swap_variables()) << n;
  }
}

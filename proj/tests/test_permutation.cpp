#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "parkfact/permutation.hpp"

using namespace parkfact;

namespace {

// rises strictly to n and then falls strictly
bool unimodal_oracle(const std::vector<int>& w) {
  const auto top = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
  for (std::size_t i = 1; i <= top; ++i) {
    if (w[i - 1] >= w[i]) return false;
  }
  for (std::size_t i = top + 1; i < w.size(); ++i) {
    if (w[i - 1] <= w[i]) return false;
  }
  return true;
}

}  // namespace

TEST(Permutation, ComposeLeftToRight) {
  const auto a = Permutation::parse("(0 1)", 2);
  const auto b = Permutation::parse("(1 2)", 2);
  // 0 -> 1 -> 2, 2 -> 2 -> 1, 1 -> 0 -> 0
  EXPECT_EQ((a * b).to_string(), "(0 2 1)");
  EXPECT_EQ((b * a).to_string(), "(0 1 2)");
  EXPECT_THROW(compose(Permutation(2), Permutation(3)), std::invalid_argument);
}

TEST(Permutation, CycleNormalForm) {
  const auto p = Permutation::parse("(5 6 4)(0 2)", 6);
  EXPECT_EQ(p.to_string(), "(0 2)(4 5 6)");
  EXPECT_EQ(p.cycle_count(), 4);
  const auto cycles = p.cycles();
  ASSERT_EQ(cycles.size(), 4u);
  EXPECT_EQ(cycles[0], (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(cycles[1], (std::vector<Vertex>{1}));
  EXPECT_EQ(cycles[3], (std::vector<Vertex>{4, 5, 6}));
}

TEST(Permutation, IdentityAndInverse) {
  EXPECT_EQ(Permutation(3).to_string(), "()");
  EXPECT_TRUE(Permutation::parse("()", 3).is_identity());
  const auto p = Permutation::parse("(0 3 1)", 3);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.inverse().to_string(), "(0 1 3)");
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(0 5)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(0 1)(1 2)", 3), std::invalid_argument);
}

TEST(Transposition, Normalizes) {
  Transposition t(5, 2);
  EXPECT_EQ(t.lo(), 2);
  EXPECT_EQ(t.hi(), 5);
  EXPECT_EQ(t.to_string(), "(2 5)");
  EXPECT_EQ(t.apply(2), 5);
  EXPECT_EQ(t.apply(3), 3);
  EXPECT_THROW(Transposition(1, 1), std::invalid_argument);
  EXPECT_THROW(Transposition(-1, 2), std::invalid_argument);
}

TEST(FullCycle, ParseAndCanonical) {
  const auto s = FullCycle::parse("(0 2 3 5 6 4 1)");
  EXPECT_EQ(s.n(), 6);
  EXPECT_EQ(s.at(3), 5);
  EXPECT_EQ(s.position_of(4), 5);
  EXPECT_EQ(s.to_string(), "(0 2 3 5 6 4 1)");
  EXPECT_EQ(FullCycle::parse("0 2 3 5 6 4 1"), s);
  EXPECT_THROW(FullCycle::parse("2 3 5 6 4 1 0"), std::invalid_argument);
  EXPECT_EQ(FullCycle::canonical(3).to_permutation().to_string(), "(0 1 2 3)");
  EXPECT_EQ(FullCycle::from_permutation(Permutation::parse("(3 1 0 2)", 3)).to_string(), "(0 2 3 1)");
  EXPECT_THROW(FullCycle::from_permutation(Permutation::parse("(0 1)", 2)), std::invalid_argument);
}

TEST(FullCycle, Unimodality) {
  EXPECT_TRUE(is_unimodal(FullCycle::parse("0 2 3 5 6 4 1")));
  EXPECT_TRUE(is_unimodal(FullCycle::canonical(5)));
  EXPECT_FALSE(is_unimodal(FullCycle::parse("0 1 4 3 5 2")));
  EXPECT_FALSE(is_unimodal(FullCycle::parse("0 2 1 3")));
}

TEST(FullCycle, GeneratorsAgreeWithOracle) {
  int fact = 1;
  for (int n = 1; n <= 6; ++n) {
    fact *= n;
    const auto all = all_full_cycles(n);
    EXPECT_EQ(static_cast<int>(all.size()), fact);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    std::set<std::vector<int>> oracle, generated;
    for (const auto& c : all) {
      std::vector<int> w(c.word().begin(), c.word().end());
      EXPECT_EQ(is_unimodal(c), unimodal_oracle(w));
      if (unimodal_oracle(w)) oracle.insert(w);
    }
    for (const auto& c : unimodal_cycles(n)) generated.insert(std::vector<int>(c.word().begin(), c.word().end()));
    EXPECT_EQ(generated, oracle);
    EXPECT_EQ(generated.size(), std::size_t{1} << (n - 1));
  }
}

TEST(FullCycle, SigmaContiguity) {
  const auto s = FullCycle::parse("0 2 3 5 6 4 1");
  EXPECT_TRUE(is_sigma_contiguous(Permutation::parse("(0 2)(5 6 4)", 6), s));
  EXPECT_TRUE(is_sigma_contiguous(Permutation::parse("(6 4)", 6), s));
  EXPECT_FALSE(is_sigma_contiguous(Permutation::parse("(2 3 4)(5 6)", 6), s));
  EXPECT_TRUE(is_sigma_contiguous(Permutation(6), s));
  EXPECT_TRUE(is_sigma_contiguous(s.to_permutation(), s));
  // a window traversed against word order is not contiguous
  EXPECT_FALSE(is_sigma_contiguous(Permutation::parse("(4 6 5)", 6), s));
}

TEST(FullCycle, Reflection) {
  EXPECT_EQ(reflect_conjugate(Transposition(1, 2), 5), Transposition(3, 4));
  EXPECT_EQ(reflect_conjugate(Transposition(0, 5), 5), Transposition(0, 5));
  const auto s = FullCycle::parse("0 2 3 5 6 4 1");
  const auto r = reflect_conjugate(s);
  EXPECT_EQ(reflect_conjugate(r), s);
  EXPECT_TRUE(is_unimodal(r));
  // gamma sigma gamma computed by images
  const auto p = s.to_permutation();
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(r.to_permutation()(6 - i), 6 - p(i));
}

TEST(Factor, JoinAndCut) {
  const auto rho = Permutation::parse("(0 1)(2 3)", 3);
  EXPECT_EQ(classify_factor(rho, Transposition(1, 2)), FactorKind::Join);
  EXPECT_EQ(classify_factor(rho, Transposition(0, 1)), FactorKind::Cut);
  EXPECT_EQ((rho * Transposition(1, 2).as_permutation(3)).cycle_count(), 1);
}

TEST(Factor, ParseSequence) {
  const auto f = parse_transpositions("(1 2)(3 5) ( 1 , 3 )");
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[2], Transposition(1, 3));
  EXPECT_THROW(parse_transpositions("(1 2 3)"), std::invalid_argument);
  EXPECT_THROW(parse_transpositions("(1 1)"), std::invalid_argument);
}

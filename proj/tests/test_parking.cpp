#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "parkfact/parking.hpp"

using namespace parkfact;

namespace {

const std::vector<int> kNine{1, 3, 1, 7, 0, 7, 0, 1, 4};

// every car finds a free stall at or after its preference in [0, n)
bool parks_oracle(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> taken(a.size(), false);
  for (int x : a) {
    int s = x;
    while (s < n && taken[static_cast<std::size_t>(s)]) ++s;
    if (s >= n) return false;
    taken[static_cast<std::size_t>(s)] = true;
  }
  return true;
}

std::vector<int> zeros(int n) { return std::vector<int>(static_cast<std::size_t>(n), 0); }

std::vector<int> staircase(int n) {
  std::vector<int> a;
  for (int i = 0; i < n; ++i) a.push_back(i);
  return a;
}

}  // namespace

TEST(Parking, Membership) {
  EXPECT_TRUE(is_parking(kNine));
  EXPECT_TRUE(is_parking(zeros(5)));
  EXPECT_TRUE(is_major(std::vector<int>{2, 5, 3, 8, 6, 9, 7, 6, 5}));
  EXPECT_FALSE(is_parking(std::vector<int>{1, 1}));
  EXPECT_FALSE(is_parking(std::vector<int>{-1}));
  EXPECT_FALSE(is_major(std::vector<int>{0}));
  EXPECT_THROW(ParkingFunction({2, 2}), std::invalid_argument);
  EXPECT_TRUE(is_parking(std::vector<int>{}));
}

TEST(Parking, CountsAgainstCarOracle) {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::vector<int>> oracle;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
      EXPECT_EQ(is_parking(a), parks_oracle(a));
      if (parks_oracle(a)) oracle.insert(a);
      int i = n - 1;
      while (i >= 0 && a[static_cast<std::size_t>(i)] == n - 1) a[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++a[static_cast<std::size_t>(i)];
    }
    std::set<std::vector<int>> generated;
    for_each_parking_function(n, [&](const ParkingFunction& p) { generated.emplace(p.entries().begin(), p.entries().end()); });
    EXPECT_EQ(generated, oracle) << n;
    std::size_t majors = 0;
    for_each_major_sequence(n, [&](const MajorSequence&) { ++majors; });
    EXPECT_EQ(majors, oracle.size());
  }
}

TEST(Parking, TextForm) {
  const auto p = ParkingFunction::parse("1, 3,1,7,0,7,0,1,4");
  EXPECT_EQ(p.entries().size(), 9u);
  EXPECT_EQ(ParkingFunction::parse(p.to_string()), p);
}

TEST(Parking, Areas) {
  const ParkingFunction p(kNine);
  const MajorSequence m({2, 5, 3, 8, 6, 9, 7, 6, 5});
  EXPECT_EQ(area(p), 12);
  EXPECT_EQ(area(m), 15);
  EXPECT_EQ(area(ParkingFunction(staircase(4))), 0);
  for (int n = 0; n <= 5; ++n) {
    for_each_parking_function(n, [&](const ParkingFunction& q) {
      EXPECT_EQ(area(complement(q)) - area(q), n);
      EXPECT_EQ(complement(complement(q)), q);
    });
  }
}

TEST(Parking, PathModel) {
  const auto path = to_path(ParkingFunction(kNine));
  EXPECT_EQ(path.heights, (std::vector<int>{0, 0, 1, 1, 1, 3, 4, 7, 7}));
  EXPECT_EQ(path.labels, (std::vector<int>{7, 5, 8, 3, 1, 2, 9, 6, 4}));
  EXPECT_EQ(parking_from_path(path), ParkingFunction(kNine));
  const auto single = to_path(ParkingFunction({0}));
  EXPECT_EQ(single.heights, std::vector<int>{0});
  EXPECT_EQ(single.labels, std::vector<int>{1});
  EXPECT_EQ(to_path(ParkingFunction()).n(), 0);
  const MajorSequence m({2, 5, 3, 8, 6, 9, 7, 6, 5});
  EXPECT_EQ(major_from_path(to_path(m)), m);
}

TEST(Parking, Bounce) {
  const ParkingFunction p(kNine);
  EXPECT_EQ(bounce_contacts(p), (std::vector<int>{0, 2, 5, 7, 9}));
  EXPECT_EQ(bounce(p), 22);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(bounce_contacts(ParkingFunction(zeros(n))), (std::vector<int>{0, n}));
    EXPECT_EQ(bounce(ParkingFunction(zeros(n))), n);
    auto all = staircase(n);
    all.push_back(n);
    EXPECT_EQ(bounce_contacts(ParkingFunction(staircase(n))), all);
    EXPECT_EQ(bounce(ParkingFunction(staircase(n))), n * (n + 1) / 2);
  }
  EXPECT_EQ(bounce(ParkingFunction()), 0);
}

TEST(Parking, CDSetsOfTwoZeros) {
  const auto d = cd_sets(ParkingFunction({0, 0}));
  EXPECT_EQ(d.w, (std::vector<int>{0, 2, 1}));
  auto c0 = d.C[0];
  std::sort(c0.begin(), c0.end());
  EXPECT_EQ(c0, (std::vector<int>{1, 2}));
  EXPECT_TRUE(d.C[1].empty() && d.C[2].empty());
  EXPECT_EQ(d.D[0], (std::vector<int>{1, 2}));
  EXPECT_TRUE(d.D[1].empty() && d.D[2].empty());
}

TEST(Parking, CDSetsOfNine) {
  const auto d = cd_sets(ParkingFunction(kNine));
  EXPECT_EQ(d.D[7], (std::vector<int>{1, 2, 3, 4, 6, 8, 9}));
  EXPECT_EQ(d.D[3], (std::vector<int>{4, 6, 9}));
  EXPECT_EQ(d.D[0], (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
  auto c9 = d.C[9];
  std::sort(c9.begin(), c9.end());
  EXPECT_EQ(c9, (std::vector<int>{4, 6}));
}

TEST(Parking, DSetsSumToBounce) {
  for (int n = 0; n <= 5; ++n) {
    for_each_parking_function(n, [&](const ParkingFunction& p) {
      const auto d = cd_sets(p);
      std::size_t total = 0;
      for (int i = 0; i <= n; ++i) {
        const auto& Di = d.D[static_cast<std::size_t>(i)];
        total += Di.size();
        EXPECT_TRUE(std::find(Di.begin(), Di.end(), i) == Di.end());
      }
      EXPECT_EQ(static_cast<int>(total), bounce(p));
    });
  }
}

TEST(Parking, Theta) {
  const auto t = theta(ParkingFunction(kNine));
  EXPECT_EQ(t.children()[0], (std::vector<Vertex>{5, 7}));
  EXPECT_EQ(t.children()[7], (std::vector<Vertex>{1, 3, 8}));
  EXPECT_EQ(theta(ParkingFunction(zeros(4))), LabelledTree(zeros(5)));
  EXPECT_EQ(theta(ParkingFunction(staircase(4))), LabelledTree({0, 0, 1, 2, 3}));
}

TEST(Parking, ThetaIsBijection) {
  for (int n = 0; n <= 5; ++n) {
    std::set<LabelledTree> images;
    for_each_parking_function(n, [&](const ParkingFunction& p) {
      const auto t = theta(p);
      EXPECT_EQ(theta_inverse(t), p);
      images.insert(t);
      const auto s = pinv_stats(p);
      EXPECT_EQ(s.pinv, inv(t));
      EXPECT_EQ(s.copinv, coinv(t));
      EXPECT_EQ(s.pinv + s.copinv, bounce(p));
    });
    EXPECT_EQ(images.size(), cayley_count(n));
  }
}

TEST(Parking, PinvOfNine) {
  const ParkingFunction p(kNine);
  EXPECT_EQ(pinv(p), 8);
  EXPECT_EQ(copinv(p), 14);
  EXPECT_EQ(pinv(ParkingFunction(zeros(4))), 0);
  EXPECT_EQ(copinv(ParkingFunction(zeros(4))), 4);
}

TEST(Parking, ParkProcess) {
  const auto two = park_process(ParkingFunction({0, 0}));
  EXPECT_EQ(two.stalls, (std::vector<int>{0, 1}));
  EXPECT_EQ(two.jump, 1);
  EXPECT_EQ(two.cojump, 2);
  EXPECT_EQ(park_process(ParkingFunction(kNine)).jump, 12);
  const auto st = park_process(ParkingFunction(staircase(4)));
  EXPECT_EQ(st.stalls, staircase(4));
  EXPECT_EQ(st.jump, 0);
  for (int n = 0; n <= 5; ++n) {
    for_each_parking_function(n, [&](const ParkingFunction& p) { EXPECT_EQ(park_process(p).jump, area(p)); });
  }
}

TEST(Parking, Enumerators) {
  const auto e0 = parking_enumerators(0);
  for (const auto* poly : {&e0.area, &e0.bounce, &e0.jump_cojump, &e0.pinv_copinv}) EXPECT_EQ(*poly, BivariatePoly::constant(1));
  const auto e2 = parking_enumerators(2);
  EXPECT_EQ(e2.pinv_copinv, BivariatePoly::parse("t^2 + t^3 + t^2*q"));
  EXPECT_EQ(parking_enumerators(3).bounce, BivariatePoly::parse("q^3 + 6*q^4 + 3*q^5 + 6*q^6"));
  for (int n = 0; n <= 5; ++n) {
    const auto e = parking_enumerators(n);
    const auto I = inversion_enumerator(n);
    EXPECT_EQ(e.pinv_copinv, I) << n;
    EXPECT_EQ(e.jump_cojump, I) << n;
  }
}

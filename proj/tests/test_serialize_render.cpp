#include <gtest/gtest.h>

#include <stdexcept>

#include "parkfact/render.hpp"
#include "parkfact/serialize.hpp"

using namespace parkfact;

namespace {

template <typename T>
T round_trip(const T& value) {
  return Json::parse(Json(value).dump()).get<T>();
}

ArchDiagram six_arch() { return ArchDiagram(5, {{2, 4, 1}, {3, 4, 2}, {2, 5, 3}, {0, 1, 4}, {0, 2, 5}}); }

}  // namespace

TEST(Serialize, Polynomial) {
  const auto p = inversion_enumerator(3);
  EXPECT_EQ(round_trip(p), p);
  const Json j = BivariatePoly::parse("2*q*t^3");
  EXPECT_EQ(j, Json::parse(R"([{"q":1,"t":3,"c":"2"}])"));
  auto big = BivariatePoly::constant(1);
  for (int i = 0; i < 80; ++i) big *= BivariatePoly::parse("1 + q");
  EXPECT_EQ(round_trip(big), big);
}

TEST(Serialize, PermutationsAndCycles) {
  const auto p = Permutation::parse("(0 2)(4 5 6)", 6);
  EXPECT_EQ(Json(p), Json::parse(R"({"n":6,"cycles":[[0,2],[4,5,6]]})"));
  EXPECT_EQ(round_trip(p), p);
  const auto s = FullCycle::parse("0 2 3 1");
  EXPECT_EQ(Json(s), Json::parse(R"({"n":3,"word":[0,2,3,1]})"));
  EXPECT_EQ(round_trip(s), s);
}

TEST(Serialize, TreesAndSequences) {
  const LabelledTree t({0, 2, 0, 2});
  EXPECT_EQ(Json(t), Json::parse(R"({"n":3,"parent":[2,0,2]})"));
  EXPECT_EQ(round_trip(t), t);
  const ParkingFunction p({1, 0, 0});
  EXPECT_EQ(Json(p)["kind"], "parking");
  EXPECT_EQ(round_trip(p), p);
  const MajorSequence m({2, 3, 3});
  EXPECT_EQ(Json(m)["kind"], "major");
  EXPECT_EQ(round_trip(m), m);
  EXPECT_THROW(Json::parse(R"({"n":2,"entries":[1,1],"kind":"parking"})").get<ParkingFunction>(), std::invalid_argument);
  const Json path = to_path(p);
  EXPECT_EQ(path["side"], "below");
}

TEST(Serialize, FactorizationsAndArches) {
  const auto f = Factorization::parse("(1 4)(1 5)(3 4)(0 2)(0 4)", 5);
  EXPECT_EQ(Json(f)["factors"][0], Json::parse("[1,4]"));
  EXPECT_EQ(round_trip(f), f);
  EXPECT_EQ(round_trip(six_arch()), six_arch());
  EXPECT_EQ(parse_arch("(2,4,1)(3,4,2) (2,5,3)(0,1,4)(0,2,5)", 5), six_arch());
  EXPECT_EQ(parse_arch(six_arch().to_string(), 5), six_arch());
  EXPECT_THROW(parse_arch("(2,4)", 5), std::invalid_argument);
}

TEST(Render, PathAscii) {
  const ParkingFunction p({1, 3, 1, 7, 0, 7, 0, 1, 4});
  const auto plain = render_path_ascii(to_path(p));
  EXPECT_FALSE(plain.empty());
  EXPECT_EQ(plain, render_path_ascii(to_path(p)));
  const auto with_bounce = render_path_ascii(to_path(p), bounce_contacts(p));
  EXPECT_NE(plain, with_bounce);
  EXPECT_NE(with_bounce.find('*'), std::string::npos);
}

TEST(Render, PathSvg) {
  const ParkingFunction p({1, 0, 0});
  const auto svg = render_path_svg(to_path(p), bounce_contacts(p));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(svg, render_path_svg(to_path(p), bounce_contacts(p)));
}

TEST(Render, Arch) {
  const auto s = FullCycle::parse("0 2 4 5 1 3");
  const auto svg = render_arch_svg(six_arch(), &s);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const auto text = render_arch_ascii(six_arch());
  EXPECT_FALSE(text.empty());
  EXPECT_EQ(text, render_arch_ascii(six_arch()));
}

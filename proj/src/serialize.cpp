#include "parkfact/serialize.hpp"

#include <regex>
#include <stdexcept>

namespace parkfact {

void to_json(Json& j, const BivariatePoly& p) {
  j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({{"q", e.q}, {"t", e.t}, {"c", c.str()}});
}

void from_json(const Json& j, BivariatePoly& p) {
  p = BivariatePoly();
  for (const auto& term : j) {
    const auto& c = term.at("c");
    const BigInt coeff = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>());
    p += BivariatePoly::monomial(term.at("q").get<unsigned>(), term.at("t").get<unsigned>(), coeff);
  }
}

void to_json(Json& j, const Permutation& p) {
  Json cycles = Json::array();
  for (const auto& c : p.cycles()) {
    if (c.size() > 1) cycles.push_back(c);
  }
  j = {{"n", p.n()}, {"cycles", cycles}};
}

void from_json(const Json& j, Permutation& p) {
  p = Permutation::from_cycles(j.at("n").get<int>(), j.at("cycles").get<std::vector<std::vector<Vertex>>>());
}

void to_json(Json& j, const FullCycle& c) {
  j = {{"n", c.n()}, {"word", std::vector<Vertex>(c.word().begin(), c.word().end())}};
}

void to_json(Json& j, const Transposition& t) { j = Json::array({t.lo(), t.hi()}); }

void to_json(Json& j, const LabelledTree& t) {
  j = {{"n", t.n()}, {"parent", std::vector<Vertex>(t.parents().begin() + 1, t.parents().end())}};
}

void from_json(const Json& j, LabelledTree& t) {
  auto parents = j.at("parent").get<std::vector<Vertex>>();
  if (j.contains("n") && j.at("n").get<std::size_t>() != parents.size()) {
    throw std::invalid_argument("tree JSON: \"n\" disagrees with the parent list");
  }
  parents.insert(parents.begin(), 0);
  t = LabelledTree(std::move(parents));
}

namespace {

std::vector<int> entries_of(const Json& j, const char* kind) {
  if (j.contains("kind") && j.at("kind").get<std::string>() != kind) {
    throw std::invalid_argument(std::string("expected a sequence of kind \"") + kind + "\"");
  }
  auto entries = j.at("entries").get<std::vector<int>>();
  if (j.contains("n") && j.at("n").get<std::size_t>() != entries.size()) {
    throw std::invalid_argument("sequence JSON: \"n\" disagrees with the entry count");
  }
  return entries;
}

}  // namespace

void to_json(Json& j, const ParkingFunction& p) {
  j = {{"n", p.n()}, {"entries", std::vector<int>(p.entries().begin(), p.entries().end())}, {"kind", "parking"}};
}

void from_json(const Json& j, ParkingFunction& p) { p = ParkingFunction(entries_of(j, "parking")); }

void to_json(Json& j, const MajorSequence& m) {
  j = {{"n", m.n()}, {"entries", std::vector<int>(m.entries().begin(), m.entries().end())}, {"kind", "major"}};
}

void from_json(const Json& j, MajorSequence& m) { m = MajorSequence(entries_of(j, "major")); }

void to_json(Json& j, const LabelledDyckPath& path) {
  j = {{"side", path.side == PathSide::Below ? "below" : "above"}, {"heights", path.heights}, {"labels", path.labels}};
}

void to_json(Json& j, const Factorization& f) {
  Json factors = Json::array();
  for (const auto& t : f.factors()) factors.push_back(Json::array({t.lo(), t.hi()}));
  j = {{"n", f.n()}, {"factors", factors}};
}

void from_json(const Json& j, Factorization& f) {
  std::vector<Transposition> factors;
  for (const auto& pair : j.at("factors")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("factor must be a pair [a, b]");
    factors.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  f = Factorization(j.at("n").get<int>(), std::move(factors));
}

void to_json(Json& j, const ArchDiagram& a) {
  Json arcs = Json::array();
  for (const auto& arc : a.arcs()) arcs.push_back(Json::array({arc.left, arc.right, arc.label}));
  j = {{"n", a.n()}, {"arcs", arcs}};
}

void from_json(const Json& j, ArchDiagram& a) {
  std::vector<Arc> arcs;
  for (const auto& triple : j.at("arcs")) {
    if (!triple.is_array() || triple.size() != 3) throw std::invalid_argument("arc must be a triple [left, right, label]");
    arcs.push_back(Arc{triple[0].get<int>(), triple[1].get<int>(), triple[2].get<int>()});
  }
  a = ArchDiagram(j.at("n").get<int>(), std::move(arcs));
}

ArchDiagram parse_arch(std::string_view text, int n) {
  static const std::regex arc_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::string s(text);
  std::vector<Arc> arcs;
  std::string leftover;
  auto begin = std::sregex_iterator(s.begin(), s.end(), arc_re);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    leftover += s.substr(last, static_cast<std::size_t>(it->position()) - last);
    last = static_cast<std::size_t>(it->position() + it->length());
    arcs.push_back(Arc{std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3])});
  }
  leftover += s.substr(last);
  if (leftover.find_first_not_of(" \t\r\n,") != std::string::npos && leftover != "()") {
    throw std::invalid_argument("cannot parse arch diagram \"" + s + "\"");
  }
  return ArchDiagram(n, std::move(arcs));
}

}  // namespace parkfact

namespace nlohmann {

parkfact::FullCycle adl_serializer<parkfact::FullCycle>::from_json(const json& j) {
  auto word = j.at("word").get<std::vector<parkfact::Vertex>>();
  if (j.contains("n") && j.at("n").get<std::size_t>() + 1 != word.size()) {
    throw std::invalid_argument("cycle JSON: \"n\" disagrees with the word length");
  }
  return parkfact::FullCycle(std::move(word));
}

}  // namespace nlohmann

#include "parkfact/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parkfact {

namespace {

// "(0 2)(5 6 4)" -> {{0,2},{5,6,4}}. Whitespace anywhere is ignored;
// commas are accepted as separators inside a group.
std::vector<std::vector<Vertex>> parse_groups(std::string_view text) {
  std::vector<std::vector<Vertex>> groups;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos) + " in \"" +
                                std::string(text) + "\"");
  };
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') fail("expected '('");
    ++pos;
    std::vector<Vertex> group;
    while (true) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
        ++pos;
      }
      if (pos == text.size()) fail("unterminated group");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a vertex");
      Vertex v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      group.push_back(v);
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

std::vector<Vertex> parse_word(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ',') {
      cleaned += ' ';
    } else {
      cleaned += ch;
    }
  }
  std::istringstream in(cleaned);
  std::vector<Vertex> word;
  std::string token;
  while (in >> token) {
    if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw std::invalid_argument("bad vertex \"" + token + "\" in \"" + std::string(text) + "\"");
    }
    word.push_back(std::stoi(token));
  }
  return word;
}

}  // namespace

Permutation::Permutation(int n) {
  if (n < 0) throw std::invalid_argument("ground set [n] needs n >= 0");
  images_.resize(static_cast<std::size_t>(n) + 1);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<Vertex> images) {
  if (images.empty()) throw std::invalid_argument("permutation of an empty set");
  std::vector<bool> seen(images.size(), false);
  for (Vertex v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<Vertex>>& cycles) {
  Permutation p(n);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Vertex v = cycle[k];
      if (v < 0 || v > n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + "]");
      }
      if (used[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " repeated in cycle list");
      }
      used[static_cast<std::size_t>(v)] = true;
      p.images_[static_cast<std::size_t>(v)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int n) {
  return from_cycles(n, parse_groups(text));
}

Permutation Permutation::inverse() const {
  Permutation r(n());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[static_cast<std::size_t>(images_[i])] = static_cast<Vertex>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Vertex>(i)) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> Permutation::cycles() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    for (Vertex v = static_cast<Vertex>(start); !seen[static_cast<std::size_t>(v)]; v = images_[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t v = start; !seen[v]; v = static_cast<std::size_t>(images_[v])) seen[v] = true;
  }
  return count;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("cannot compose permutations of [" + std::to_string(a.n()) + "] and [" +
                                std::to_string(b.n()) + "]");
  }
  std::vector<Vertex> images(a.images().size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b(a(static_cast<Vertex>(i)));
  return Permutation::from_images(std::move(images));
}

Transposition::Transposition(Vertex a, Vertex b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("transposition needs two distinct points, got " + std::to_string(a) + " twice");
  if (lo_ < 0) throw std::invalid_argument("transposition endpoint must be nonnegative");
}

Permutation Transposition::as_permutation(int n) const {
  if (hi_ > n) throw std::invalid_argument("transposition " + to_string() + " does not act on [" + std::to_string(n) + "]");
  return Permutation::from_cycles(n, {{lo_, hi_}});
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(lo_) + " " + std::to_string(hi_) + ")";
}

FullCycle::FullCycle(std::vector<Vertex> word) : word_(std::move(word)) {
  if (word_.empty() || word_[0] != 0) throw std::invalid_argument("full cycle word must begin with 0");
  positions_.assign(word_.size(), -1);
  for (std::size_t i = 0; i < word_.size(); ++i) {
    Vertex v = word_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= word_.size() || positions_[static_cast<std::size_t>(v)] != -1) {
      throw std::invalid_argument("full cycle word is not a permutation of [0," +
                                  std::to_string(word_.size() - 1) + "]");
    }
    positions_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
}

FullCycle FullCycle::canonical(int n) {
  if (n < 0) throw std::invalid_argument("ground set [n] needs n >= 0");
  std::vector<Vertex> word(static_cast<std::size_t>(n) + 1);
  std::iota(word.begin(), word.end(), 0);
  return FullCycle(std::move(word));
}

FullCycle FullCycle::from_permutation(const Permutation& pi) {
  if (!pi.is_full_cycle()) throw std::invalid_argument(pi.to_string() + " is not a full cycle");
  std::vector<Vertex> word;
  word.reserve(static_cast<std::size_t>(pi.n()) + 1);
  Vertex v = 0;
  do {
    word.push_back(v);
    v = pi(v);
  } while (v != 0);
  return FullCycle(std::move(word));
}

FullCycle FullCycle::parse(std::string_view text) {
  std::vector<Vertex> word = parse_word(text);
  if (word.empty()) throw std::invalid_argument("empty cycle word");
  if (word[0] != 0) throw std::invalid_argument("cycle word must start with 0, got \"" + std::string(text) + "\"");
  return FullCycle(std::move(word));
}

Permutation FullCycle::to_permutation() const {
  std::vector<Vertex> images(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) {
    images[static_cast<std::size_t>(word_[i])] = word_[(i + 1) % word_.size()];
  }
  return Permutation::from_images(std::move(images));
}

std::string FullCycle::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out + ")";
}

bool is_unimodal(const FullCycle& sigma) {
  const auto w = sigma.word();
  const std::size_t peak = static_cast<std::size_t>(sigma.position_of(sigma.n()));
  for (std::size_t i = 1; i <= peak; ++i) {
    if (w[i - 1] >= w[i]) return false;
  }
  for (std::size_t i = peak + 1; i < w.size(); ++i) {
    if (w[i - 1] <= w[i]) return false;
  }
  return true;
}

void for_each_unimodal_cycle(int n, const std::function<void(const FullCycle&)>& visit) {
  if (n < 1) throw std::invalid_argument("unimodal cycles need n >= 1");
  if (n > 30) throw std::invalid_argument("n too large for unimodal cycle enumeration");
  const unsigned long subsets = 1UL << (n - 1);
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    std::vector<Vertex> word{0};
    std::vector<Vertex> falling;
    for (int v = 1; v < n; ++v) {
      if (mask & (1UL << (v - 1))) {
        word.push_back(v);
      } else {
        falling.push_back(v);
      }
    }
    word.push_back(n);
    word.insert(word.end(), falling.rbegin(), falling.rend());
    visit(FullCycle(std::move(word)));
  }
}

std::vector<FullCycle> unimodal_cycles(int n) {
  std::vector<FullCycle> out;
  for_each_unimodal_cycle(n, [&](const FullCycle& s) { out.push_back(s); });
  return out;
}

std::vector<FullCycle> all_full_cycles(int n) {
  if (n < 0) throw std::invalid_argument("ground set [n] needs n >= 0");
  std::vector<Vertex> tail(static_cast<std::size_t>(n));
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<FullCycle> out;
  do {
    std::vector<Vertex> word{0};
    word.insert(word.end(), tail.begin(), tail.end());
    out.emplace_back(std::move(word));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

bool is_sigma_contiguous(const Permutation& pi, const FullCycle& sigma) {
  if (pi.n() != sigma.n()) throw std::invalid_argument("permutation and cycle act on different ground sets");
  for (const auto& cycle : pi.cycles()) {
    if (cycle.size() == 1) continue;
    // Start from the element earliest in the word; the cycle must then
    // visit consecutive word positions.
    std::size_t first = 0;
    for (std::size_t k = 1; k < cycle.size(); ++k) {
      if (sigma.position_of(cycle[k]) < sigma.position_of(cycle[first])) first = k;
    }
    const int base = sigma.position_of(cycle[first]);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (sigma.position_of(cycle[(first + k) % cycle.size()]) != base + static_cast<int>(k)) return false;
    }
  }
  return true;
}

Transposition reflect_conjugate(const Transposition& tau, int n) {
  if (tau.hi() > n) throw std::invalid_argument("transposition " + tau.to_string() + " outside [" + std::to_string(n) + "]");
  return Transposition(n - tau.hi(), n - tau.lo());
}

FullCycle reflect_conjugate(const FullCycle& sigma) {
  const int n = sigma.n();
  std::vector<Vertex> reflected;
  reflected.reserve(sigma.word().size());
  for (Vertex v : sigma.word()) reflected.push_back(n - v);
  // rotate so that 0 (the image of n) comes first
  auto zero = std::find(reflected.begin(), reflected.end(), 0);
  std::rotate(reflected.begin(), zero, reflected.end());
  return FullCycle(std::move(reflected));
}

FactorKind classify_factor(const Permutation& rho, const Transposition& tau) {
  if (tau.hi() > rho.n()) throw std::invalid_argument("factor " + tau.to_string() + " outside ground set");
  Vertex v = tau.lo();
  do {
    if (v == tau.hi()) return FactorKind::Cut;
    v = rho(v);
  } while (v != tau.lo());
  return FactorKind::Join;
}

std::vector<Transposition> parse_transpositions(std::string_view text) {
  std::vector<Transposition> out;
  for (const auto& group : parse_groups(text)) {
    if (group.size() != 2) {
      throw std::invalid_argument("factor with " + std::to_string(group.size()) + " points in \"" +
                                  std::string(text) + "\"");
    }
    out.emplace_back(group[0], group[1]);
  }
  return out;
}

}  // namespace parkfact

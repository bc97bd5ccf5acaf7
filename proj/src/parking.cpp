#include "parkfact/parking.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parkfact {

namespace {

bool nonnegative(std::span<const int> entries) {
  return std::all_of(entries.begin(), entries.end(), [](int a) { return a >= 0; });
}

bool parking_by_sorting(std::span<const int> entries) {
  std::vector<int> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > static_cast<int>(i)) return false;
  }
  return true;
}

bool parking_by_counting(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  for (int i = 1; i <= n; ++i) {
    auto below = std::count_if(entries.begin(), entries.end(), [i](int a) { return a < i; });
    if (below < i) return false;
  }
  return true;
}

bool major_by_sorting(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<int> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i <= n; ++i) {
    int b = sorted[static_cast<std::size_t>(i - 1)];
    if (b < i || b > n) return false;
  }
  return true;
}

bool major_by_counting(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  if (std::any_of(entries.begin(), entries.end(), [n](int b) { return b > n; })) return false;
  for (int i = 1; i <= n; ++i) {
    auto above = std::count_if(entries.begin(), entries.end(), [n, i](int b) { return b > n - i; });
    if (above < i) return false;
  }
  return true;
}

int choose2(int n) { return n * (n - 1) / 2; }

LabelledDyckPath path_from_entries(std::span<const int> entries, PathSide side) {
  const int n = static_cast<int>(entries.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // ascending height; within a height, labels decreasing
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (entries[static_cast<std::size_t>(x)] != entries[static_cast<std::size_t>(y)]) {
      return entries[static_cast<std::size_t>(x)] < entries[static_cast<std::size_t>(y)];
    }
    return x > y;
  });
  LabelledDyckPath path;
  path.side = side;
  for (int idx : order) {
    path.heights.push_back(entries[static_cast<std::size_t>(idx)]);
    path.labels.push_back(idx + 1);
  }
  return path;
}

std::vector<int> entries_from_path(const LabelledDyckPath& path) {
  path.validate();
  std::vector<int> entries(path.heights.size());
  for (std::size_t j = 0; j < path.heights.size(); ++j) {
    entries[static_cast<std::size_t>(path.labels[j] - 1)] = path.heights[j];
  }
  return entries;
}

}  // namespace

std::vector<int> parse_sequence(std::string_view text) {
  std::string s(text);
  for (char& ch : s) {
    if (ch == ',' || ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
  }
  std::istringstream in(s);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    bool digits = !token.empty() &&
                  std::all_of(token.begin() + (token[0] == '-' ? 1 : 0), token.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!digits || token == "-") throw std::invalid_argument("bad sequence entry \"" + token + "\"");
    out.push_back(std::stoi(token));
  }
  return out;
}

std::string format_sequence(std::span<const int> entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

bool is_parking(std::span<const int> entries) {
  if (!nonnegative(entries)) return false;
  const bool sorted = parking_by_sorting(entries);
  const bool counted = parking_by_counting(entries);
  if (sorted != counted) throw std::logic_error("parking tests disagree on " + format_sequence(entries));
  return sorted;
}

bool is_major(std::span<const int> entries) {
  if (!nonnegative(entries)) return false;
  const bool sorted = major_by_sorting(entries);
  const bool counted = major_by_counting(entries);
  if (sorted != counted) throw std::logic_error("major-sequence tests disagree on " + format_sequence(entries));
  return sorted;
}

ParkingFunction::ParkingFunction(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_parking(entries_)) throw std::invalid_argument(format_sequence(entries_) + " is not a parking function");
}

MajorSequence::MajorSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_major(entries_)) throw std::invalid_argument(format_sequence(entries_) + " is not a major sequence");
}

MajorSequence complement(const ParkingFunction& p) {
  std::vector<int> b;
  for (int a : p.entries()) b.push_back(p.n() - a);
  return MajorSequence(std::move(b));
}

ParkingFunction complement(const MajorSequence& m) {
  std::vector<int> a;
  for (int b : m.entries()) a.push_back(m.n() - b);
  return ParkingFunction(std::move(a));
}

int area(const ParkingFunction& p) {
  return choose2(p.n()) - std::accumulate(p.entries().begin(), p.entries().end(), 0);
}

int area(const MajorSequence& m) {
  return std::accumulate(m.entries().begin(), m.entries().end(), 0) - choose2(m.n());
}

void LabelledDyckPath::validate() const {
  const int size = n();
  if (labels.size() != heights.size()) throw std::invalid_argument("path has mismatched heights and labels");
  std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
  for (int j = 0; j < size; ++j) {
    const int h = heights[static_cast<std::size_t>(j)];
    const int label = labels[static_cast<std::size_t>(j)];
    if (label < 1 || label > size || seen[static_cast<std::size_t>(label)]) {
      throw std::invalid_argument("path labels must be a permutation of [1,n]");
    }
    seen[static_cast<std::size_t>(label)] = true;
    if (j > 0) {
      const int prev_h = heights[static_cast<std::size_t>(j - 1)];
      if (h < prev_h) throw std::invalid_argument("path heights must be non-decreasing");
      if (h == prev_h && labels[static_cast<std::size_t>(j - 1)] < label) {
        throw std::invalid_argument("labels at equal height must decrease left to right");
      }
    }
    // step j (1-based j+1) constraints
    if (side == PathSide::Below && (h < 0 || h > j)) throw std::invalid_argument("path crosses the diagonal");
    if (side == PathSide::Above && (h < j + 1 || h > size)) throw std::invalid_argument("path dips below the diagonal");
  }
}

LabelledDyckPath to_path(const ParkingFunction& p) { return path_from_entries(p.entries(), PathSide::Below); }
LabelledDyckPath to_path(const MajorSequence& m) { return path_from_entries(m.entries(), PathSide::Above); }

ParkingFunction parking_from_path(const LabelledDyckPath& path) {
  if (path.side != PathSide::Below) throw std::invalid_argument("expected a path below the diagonal");
  return ParkingFunction(entries_from_path(path));
}

MajorSequence major_from_path(const LabelledDyckPath& path) {
  if (path.side != PathSide::Above) throw std::invalid_argument("expected a path above the diagonal");
  return MajorSequence(entries_from_path(path));
}

std::vector<int> bounce_contacts(const ParkingFunction& p) {
  const int n = p.n();
  std::vector<int> contacts{0};
  while (contacts.back() < n) {
    const int i = contacts.back();
    const int next = static_cast<int>(std::count_if(p.entries().begin(), p.entries().end(), [i](int a) { return a <= i; }));
    if (next <= i) throw std::logic_error("bounce path stalled; input is not a parking function");
    contacts.push_back(next);
  }
  return contacts;
}

int bounce(const ParkingFunction& p) {
  int sum = 0;
  for (int i : bounce_contacts(p)) sum += p.n() - i;
  return sum;
}

BounceData cd_sets(const ParkingFunction& p) {
  const int n = p.n();
  const auto path = to_path(p);
  BounceData data;
  data.contacts = bounce_contacts(p);
  data.w.push_back(0);
  data.w.insert(data.w.end(), path.labels.begin(), path.labels.end());
  data.C.assign(static_cast<std::size_t>(n) + 1, {});
  data.D.assign(static_cast<std::size_t>(n) + 1, {});
  for (int j = 0; j < n; ++j) {
    const int height = path.heights[static_cast<std::size_t>(j)];
    data.C[static_cast<std::size_t>(data.w[static_cast<std::size_t>(height)])].push_back(path.labels[static_cast<std::size_t>(j)]);
  }
  for (int i = n; i >= 0; --i) {
    const auto v = static_cast<std::size_t>(data.w[static_cast<std::size_t>(i)]);
    std::vector<int> d = data.C[v];
    for (int c : data.C[v]) {
      const auto& dc = data.D[static_cast<std::size_t>(c)];
      d.insert(d.end(), dc.begin(), dc.end());
    }
    std::sort(d.begin(), d.end());
    data.D[v] = std::move(d);
  }
  return data;
}

LabelledTree theta(const ParkingFunction& p) {
  return LabelledTree::from_children(cd_sets(p).C);
}

ParkingFunction theta_inverse(const LabelledTree& tree) {
  const int n = tree.n();
  auto kids = tree.children();
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  // Breadth-first order with children taken in decreasing order reproduces w.
  std::vector<Vertex> w{0};
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto& c = kids[static_cast<std::size_t>(w[i])];
    std::sort(c.begin(), c.end(), std::greater<>());
    for (Vertex child : c) {
      entries[static_cast<std::size_t>(child - 1)] = static_cast<int>(i);
      w.push_back(child);
    }
  }
  return ParkingFunction(std::move(entries));
}

PinvStats pinv_stats(const ParkingFunction& p) {
  const auto data = cd_sets(p);
  PinvStats s;
  for (std::size_t i = 0; i < data.D.size(); ++i) {
    for (int d : data.D[i]) {
      if (d < static_cast<int>(i)) {
        ++s.pinv;
      } else {
        ++s.copinv;
      }
    }
  }
  return s;
}

ParkingOutcome park_process(const ParkingFunction& p) {
  const int n = p.n();
  // Stalls west of 0 are never taken, so index 0 stands for stall -1 and
  // everything further west is implicitly empty.
  const int offset = 1;
  std::vector<bool> taken(static_cast<std::size_t>(n + offset + 1), false);
  ParkingOutcome out;
  for (int a : p.entries()) {
    int c = a;
    while (taken[static_cast<std::size_t>(c + offset)]) ++c;
    taken[static_cast<std::size_t>(c + offset)] = true;
    int d = c - 1;
    while (d + offset >= 0 && taken[static_cast<std::size_t>(d + offset)]) --d;
    out.stalls.push_back(c);
    out.jump += c - a;
    out.cojump += a - d;
  }
  return out;
}

void for_each_parking_function(int n, const ParkingVisitor& visit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n == 0) {
    visit(ParkingFunction());
    return;
  }
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    if (parking_by_counting(a)) visit(ParkingFunction(a));
    int k = n - 1;
    while (k >= 0) {
      if (++a[static_cast<std::size_t>(k)] < n) break;
      a[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

std::vector<ParkingFunction> enumerate_parking_functions(int n) {
  std::vector<ParkingFunction> out;
  for_each_parking_function(n, [&](const ParkingFunction& p) { out.push_back(p); });
  return out;
}

void for_each_major_sequence(int n, const std::function<void(const MajorSequence&)>& visit) {
  for_each_parking_function(n, [&](const ParkingFunction& p) { visit(complement(p)); });
}

ParkingEnumerators parking_enumerators(int n) {
  PolyTally area_t, bounce_t, jump_t, pinv_t;
  for_each_parking_function(n, [&](const ParkingFunction& p) {
    area_t.add(static_cast<unsigned>(area(p)), 0);
    bounce_t.add(static_cast<unsigned>(bounce(p)), 0);
    auto park = park_process(p);
    jump_t.add(static_cast<unsigned>(park.jump), static_cast<unsigned>(park.cojump));
    auto s = pinv_stats(p);
    pinv_t.add(static_cast<unsigned>(s.pinv), static_cast<unsigned>(s.copinv));
  });
  return {area_t.to_poly(), bounce_t.to_poly(), jump_t.to_poly(), pinv_t.to_poly()};
}

}  // namespace parkfact

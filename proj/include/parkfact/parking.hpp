#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parkfact/polynomial.hpp"
#include "parkfact/tree.hpp"

namespace parkfact {

/// Parses comma- or whitespace-separated nonnegative integers, "1,3,1,7".
std::vector<int> parse_sequence(std::string_view text);
std::string format_sequence(std::span<const int> entries);

/// Runs both the sorted-rearrangement test and the counting test (at least i
/// entries below i, for every i) and returns their common verdict. A
/// disagreement is a bug and raises std::logic_error.
bool is_parking(std::span<const int> entries);
/// Major sequences: sorted b'_i within [i, n], cross-checked by counting
/// (at least i entries above n - i).
bool is_major(std::span<const int> entries);

/// (a_1, ..., a_n) whose sorted rearrangement satisfies a'_i <= i-1.
class ParkingFunction {
 public:
  ParkingFunction() = default;
  /// Throws std::invalid_argument if `entries` is not a parking function.
  explicit ParkingFunction(std::vector<int> entries);
  static ParkingFunction parse(std::string_view text) { return ParkingFunction(parse_sequence(text)); }

  int n() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::string to_string() const { return format_sequence(entries_); }

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

 private:
  std::vector<int> entries_;
};

/// (b_1, ..., b_n) whose sorted rearrangement satisfies i <= b'_i <= n.
class MajorSequence {
 public:
  MajorSequence() = default;
  explicit MajorSequence(std::vector<int> entries);
  static MajorSequence parse(std::string_view text) { return MajorSequence(parse_sequence(text)); }

  int n() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::string to_string() const { return format_sequence(entries_); }

  friend bool operator==(const MajorSequence&, const MajorSequence&) = default;
  friend auto operator<=>(const MajorSequence&, const MajorSequence&) = default;

 private:
  std::vector<int> entries_;
};

/// a_i -> n - a_i, both directions.
MajorSequence complement(const ParkingFunction& p);
ParkingFunction complement(const MajorSequence& m);

/// binom(n,2) - sum a_i.
int area(const ParkingFunction& p);
/// sum b_i - binom(n,2).
int area(const MajorSequence& m);

enum class PathSide { Below, Above };

/// Lattice path from (0,0) to (n,n); the j-th horizontal step sits at
/// heights[j] and carries labels[j]. Labels sharing a height run in
/// decreasing order left to right.
struct LabelledDyckPath {
  std::vector<int> heights;
  std::vector<int> labels;
  PathSide side = PathSide::Below;

  int n() const { return static_cast<int>(heights.size()); }
  /// Throws std::invalid_argument if any path invariant fails.
  void validate() const;

  friend bool operator==(const LabelledDyckPath&, const LabelledDyckPath&) = default;
};

LabelledDyckPath to_path(const ParkingFunction& p);
LabelledDyckPath to_path(const MajorSequence& m);
ParkingFunction parking_from_path(const LabelledDyckPath& path);
MajorSequence major_from_path(const LabelledDyckPath& path);

/// Bounce path data together with the C/D sets of the labelled path.
struct BounceData {
  /// 0 = i_1 < ... < i_k = n, the diagonal contacts of the bounce path.
  std::vector<int> contacts;
  /// w_0 = 0 followed by the path labels left to right.
  std::vector<int> w;
  /// C[v]: labels at height i where v = w_i, in decreasing order.
  std::vector<std::vector<int>> C;
  /// D[v] = C[v] together with D of every member of C[v]; sorted.
  std::vector<std::vector<int>> D;
};

/// Contacts via i_{j+1} = #{m : a'_m <= i_j}.
std::vector<int> bounce_contacts(const ParkingFunction& p);
/// sum_j (n - i_j).
int bounce(const ParkingFunction& p);
BounceData cd_sets(const ParkingFunction& p);

/// Tree whose children of v are C[v].
LabelledTree theta(const ParkingFunction& p);
ParkingFunction theta_inverse(const LabelledTree& tree);

struct PinvStats {
  int pinv = 0;
  int copinv = 0;
};
/// Elements of D_i below / above i, summed over i.
PinvStats pinv_stats(const ParkingFunction& p);
inline int pinv(const ParkingFunction& p) { return pinv_stats(p).pinv; }
inline int copinv(const ParkingFunction& p) { return pinv_stats(p).copinv; }

struct ParkingOutcome {
  /// Stall of car i.
  std::vector<int> stalls;
  int jump = 0;
  int cojump = 0;
};

/// Cars enter at a_i and take the first free stall to the east. After car i
/// parks, d_i is the nearest empty stall west of it; cojump sums a_i - d_i.
ParkingOutcome park_process(const ParkingFunction& p);

using ParkingVisitor = std::function<void(const ParkingFunction&)>;
/// Every parking function of length n, in lexicographic order.
void for_each_parking_function(int n, const ParkingVisitor& visit);
std::vector<ParkingFunction> enumerate_parking_functions(int n);
void for_each_major_sequence(int n, const std::function<void(const MajorSequence&)>& visit);

struct ParkingEnumerators {
  /// sum q^area(p)
  BivariatePoly area;
  /// sum q^bounce(p)
  BivariatePoly bounce;
  /// sum q^jump t^cojump
  BivariatePoly jump_cojump;
  /// sum q^pinv t^copinv, i.e. B_n(q,t)
  BivariatePoly pinv_copinv;
};

ParkingEnumerators parking_enumerators(int n);

}  // namespace parkfact

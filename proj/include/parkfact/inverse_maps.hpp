#pragma once

#include <optional>
#include <vector>

#include "parkfact/factorization.hpp"
#include "parkfact/parking.hpp"
#include "parkfact/permutation.hpp"

namespace parkfact {

enum class SigmaSide { Left, Right };

/// Side of each value 0..n-1 relative to n in the word of a unimodal cycle.
std::vector<SigmaSide> sigma_sides(const FullCycle& sigma);

struct OmegaOrder {
  /// 1-based indices j in processing order.
  std::vector<int> order;
  /// side[i] for i in [0, n-1].
  std::vector<SigmaSide> side;
};

/// J_{n-1}, ..., J_0 where J_i lists {j : a_j = i}, increasing on the left of
/// n and decreasing on the right. Throws unless sigma is unimodal.
OmegaOrder omega(const FullCycle& sigma, const ParkingFunction& p);

/// One loop iteration, as printed in the worked tables.
struct AlgorithmStep {
  int i = 0;
  /// Partial product before the step.
  Permutation pi;
  /// Factor slots before the step; nullopt is the identity.
  std::vector<std::optional<Transposition>> slots;
  int j = 0;
  int a = 0;
  /// s_{l+1} on the left of n, s_{l-1} on the right.
  int s = 0;
  int b = 0;
};

struct LInverseOptions {
  /// Assert the loop invariants on every iteration; failures throw
  /// std::logic_error.
  bool check_invariants = false;
  std::vector<AlgorithmStep>* trace = nullptr;
};

/// The unique f in F_sigma with lower(f) = p. Throws std::invalid_argument
/// unless sigma is unimodal.
Factorization l_inverse(const ParkingFunction& p, const FullCycle& sigma, const LInverseOptions& options = {});

/// The unique f in F_sigma with upper(f) = m, through the reflection
/// gamma(i) = n - i.
Factorization u_inverse(const MajorSequence& m, const FullCycle& sigma, const LInverseOptions& options = {});

/// Lower path to upper path for sigma_n: labels start at the left ends of
/// their steps and move northeast past larger labels and off-path points,
/// resting on the first unlabelled or smaller-labelled point of the path.
LabelledDyckPath push_upper_path(const LabelledDyckPath& lower_path);
/// Rest height of each label 1..n.
MajorSequence push_heights(const LabelledDyckPath& lower_path);

struct NonUnimodalWitness {
  int valley = 0;
  ParkingFunction p;
  Factorization first;
  Factorization second;
};

/// Two distinct factorizations of sigma sharing the lower sequence
/// (0, ..., 0, s_i), at the smallest valley i. Throws if sigma is unimodal.
NonUnimodalWitness non_unimodal_witness(const FullCycle& sigma);

}  // namespace parkfact

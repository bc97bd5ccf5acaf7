#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parkfact/permutation.hpp"
#include "parkfact/polynomial.hpp"

namespace parkfact {

struct VerifyOptions {
  /// Caps every suite's exhaustive range; negative keeps the suite defaults.
  int max_n = -1;
  /// Also run optional larger instances (n = 7 cardinalities).
  bool extended = false;
};

struct SuiteResult {
  std::string name;
  std::string title;
  bool passed = true;
  long long checks = 0;
  /// First failing check, serialized; empty on success.
  std::string counterexample;
  double seconds = 0.0;
};

/// Suite names in acceptance order: cardinalities, polynomial-pins,
/// factorization-enumerator, parking-enumerators, area-jump,
/// unimodal-bijection, l-inverse, arch-membership, simple-decomposition,
/// special, worked-examples, pushing, symmetry.
const std::vector<std::string>& suite_names();
std::string suite_title(std::string_view name);
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});
/// "all" or one suite name.
std::vector<SuiteResult> run_suites(std::string_view name, const VerifyOptions& options = {});

struct ExploreClass {
  BivariatePoly enumerator;
  bool equals_inversion = false;
  std::vector<FullCycle> cycles;
};

/// Groups the unimodal cycles of [n] by F_sigma(q,t) and flags the class
/// equal to I_n(q,t). Classes are ordered by the first cycle they contain.
std::vector<ExploreClass> explore_unimodal(int n);

}  // namespace parkfact

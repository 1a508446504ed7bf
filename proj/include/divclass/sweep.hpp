#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace divclass {

/// Raw (uncanonicalized) poset input: element names and order relations.
struct PosetInput {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
};

/// Random poset on 0..max_n elements: a random DAG with a random edge
/// density, names declared in shuffled order. Uses only raw engine output, so
/// a seed reproduces the same poset on every platform.
PosetInput random_poset_input(std::mt19937_64& rng, std::size_t max_n);

struct SweepConfig {
  std::size_t count = 200;
  std::size_t max_n = 7;
  std::uint64_t seed = 42;
};

struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SweepFailure {
  std::size_t index = 0;
  std::string property;
  std::string detail;
  PosetInput poset;
};

struct SweepSummary {
  SweepConfig config;
  std::vector<PropertyTally> tallies;
  std::size_t chain_pairs_found = 0;
  std::vector<SweepFailure> failures;

  bool all_passed() const { return failures.empty(); }
};

inline constexpr std::size_t kMaxSweepElements = 10;

/// Checks the join-meet properties on `count` seeded random posets:
/// Gorenstein iff pure, tree and Fitting torsion numbers agree, the rank
/// formula, unit cycle coefficients, the column relations, independence of the
/// tree choice, and d | |a - b| for disjoint maximal chains.
/// Throws InputError when count == 0 or max_n > kMaxSweepElements.
SweepSummary run_sweep(const SweepConfig& config);

}  // namespace divclass

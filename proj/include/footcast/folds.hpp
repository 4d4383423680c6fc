#pragma once

#include <cstdint>
#include <vector>

#include "footcast/examples.hpp"

namespace footcast {

enum class SplitMode { random, chronological };

struct SplitOptions {
  double test_fraction = 0.2;
  SplitMode mode = SplitMode::random;
};

struct TrainTestSplit {
  ExampleSet train;
  ExampleSet test;
  std::vector<std::size_t> train_rows;  // row indices into the source set
  std::vector<std::size_t> test_rows;
};

/// Splits by match: both orientations of a match always land on the same
/// side, so the mirrored row can never leak across the boundary. Chronological
/// mode places the most recent matches in the test side.
TrainTestSplit split_train_test(const ExampleSet& examples, const SplitOptions& options,
                                std::uint64_t seed);

/// Fold assignment per row. Folds partition rows exactly; per-fold match
/// counts differ by at most one (row counts follow when matches contribute
/// equally many rows).
struct FoldPlan {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;
  std::uint64_t seed = 0;
  bool stratified = false;

  std::vector<std::size_t> fold_rows(std::size_t fold) const;
  std::vector<std::size_t> complement_rows(std::size_t fold) const;
};

/// Groups rows by match, then deals match groups round-robin (within label
/// strata when stratified) in shuffled order.
FoldPlan plan_folds(const ExampleSet& train, std::size_t k, std::uint64_t seed,
                    bool stratified);

}  // namespace footcast

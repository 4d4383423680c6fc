#include "footcast/folds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "footcast/rng.hpp"

namespace footcast {

namespace {

struct MatchGroup {
  std::string match_id;
  Date date;
  std::vector<std::size_t> rows;
};

std::vector<MatchGroup> group_by_match(const ExampleSet& examples) {
  std::vector<MatchGroup> groups;
  std::map<std::string, std::size_t> index;  // match_id -> first-appearance slot
  for (std::size_t r = 0; r < examples.size(); ++r) {
    const auto& prov = examples.provenance[r];
    auto [it, inserted] = index.try_emplace(prov.match_id, groups.size());
    if (inserted) groups.push_back({prov.match_id, prov.date, {}});
    groups[it->second].rows.push_back(r);
  }
  return groups;
}

}  // namespace

TrainTestSplit split_train_test(const ExampleSet& examples, const SplitOptions& options,
                                std::uint64_t seed) {
  if (!(options.test_fraction > 0.0) || !(options.test_fraction < 1.0)) {
    throw std::invalid_argument("test fraction must be in (0, 1)");
  }
  std::vector<MatchGroup> groups = group_by_match(examples);
  if (groups.size() < 2) {
    throw std::invalid_argument("too few matches to populate both split sides");
  }

  std::size_t test_count = static_cast<std::size_t>(
      std::floor(options.test_fraction * static_cast<double>(groups.size()) + 0.5));
  test_count = std::max<std::size_t>(1, std::min(test_count, groups.size() - 1));

  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (options.mode == SplitMode::random) {
    Rng rng(derive_seed(seed, "split/train_test"));
    rng.shuffle(order);
  } else {
    // Most recent matches become the test side.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (!(groups[a].date == groups[b].date)) return groups[a].date < groups[b].date;
      return groups[a].match_id < groups[b].match_id;
    });
    std::reverse(order.begin(), order.end());
  }

  TrainTestSplit split;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& side = i < test_count ? split.test_rows : split.train_rows;
    for (std::size_t r : groups[order[i]].rows) side.push_back(r);
  }
  std::sort(split.train_rows.begin(), split.train_rows.end());
  std::sort(split.test_rows.begin(), split.test_rows.end());
  split.train = examples.subset(split.train_rows);
  split.test = examples.subset(split.test_rows);
  return split;
}

std::vector<std::size_t> FoldPlan::fold_rows(std::size_t fold) const {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < assignments.size(); ++r) {
    if (assignments[r] == fold) rows.push_back(r);
  }
  return rows;
}

std::vector<std::size_t> FoldPlan::complement_rows(std::size_t fold) const {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < assignments.size(); ++r) {
    if (assignments[r] != fold) rows.push_back(r);
  }
  return rows;
}

FoldPlan plan_folds(const ExampleSet& train, std::size_t k, std::uint64_t seed,
                    bool stratified) {
  if (k < 2) throw std::invalid_argument("fold count must be at least 2");
  if (train.size() < k) throw std::invalid_argument("fewer training rows than folds");
  std::vector<MatchGroup> groups = group_by_match(train);
  if (groups.size() < k) {
    throw std::invalid_argument("fewer matches than folds");
  }

  std::vector<std::size_t> order(groups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(derive_seed(seed, "folds/plan"));
  rng.shuffle(order);

  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.stratified = stratified;
  plan.assignments.assign(train.size(), 0);

  // Deal match groups round-robin; under stratification, deal the team_a-won
  // groups first, then team_b, with one continuing cursor so overall fold
  // sizes still differ by at most one group.
  std::size_t cursor = 0;
  auto deal = [&](std::size_t g) {
    const std::size_t fold = cursor % k;
    cursor++;
    for (std::size_t r : groups[g].rows) plan.assignments[r] = fold;
  };
  if (stratified) {
    for (Winner stratum : {Winner::team_a, Winner::team_b}) {
      for (std::size_t g : order) {
        if (train.labels[groups[g].rows.front()] == stratum) deal(g);
      }
    }
  } else {
    for (std::size_t g : order) deal(g);
  }
  return plan;
}

}  // namespace footcast

#include "footcast/forest.hpp"

#include <cmath>
#include <stdexcept>

#include "footcast/rng.hpp"

namespace footcast {

std::unique_ptr<RandomForestModel> RandomForestModel::fit(const Matrix& X,
                                                          const std::vector<Winner>& y,
                                                          std::size_t n_trees,
                                                          std::size_t max_depth,
                                                          std::uint64_t seed) {
  if (X.rows() == 0 || X.rows() != y.size()) {
    throw std::invalid_argument("forest fit: bad training shape");
  }
  if (n_trees == 0) throw std::invalid_argument("forest fit: n_trees must be positive");

  auto model = std::make_unique<RandomForestModel>();
  model->dimension_ = X.cols();
  model->trees_.reserve(n_trees);

  const std::size_t n = X.rows();
  ClassificationTreeOptions options;
  options.max_depth = max_depth;
  options.features_per_split = static_cast<std::size_t>(
      std::max(1.0, std::floor(std::sqrt(static_cast<double>(X.cols())))));

  for (std::size_t t = 0; t < n_trees; ++t) {
    // One engine per tree so trees are independent of fitting order.
    Rng rng(derive_seed(seed, "tree/" + std::to_string(t)));
    std::vector<std::size_t> sample(n);
    for (std::size_t i = 0; i < n; ++i) {
      sample[i] = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(n)));
    }
    model->trees_.push_back(grow_classification_tree(X, y, sample, options, &rng));
  }
  return model;
}

ProbPair RandomForestModel::predict_proba(std::span<const double> x) const {
  check_dimension(x);
  std::size_t votes_a = 0;
  for (const DecisionTree& tree : trees_) {
    if (tree.predict(x) >= 0.5) votes_a++;
  }
  ProbPair p;
  p.team_a = static_cast<double>(votes_a) / static_cast<double>(trees_.size());
  p.team_b = 1.0 - p.team_a;
  return p;
}

void RandomForestModel::serialize(BinaryWriter& out) const {
  out.put_u64(dimension_);
  out.put_u32(static_cast<std::uint32_t>(trees_.size()));
  for (const DecisionTree& tree : trees_) tree.serialize(out);
}

std::unique_ptr<RandomForestModel> RandomForestModel::deserialize(BinaryReader& in) {
  auto model = std::make_unique<RandomForestModel>();
  model->dimension_ = in.get_u64();
  const std::uint32_t count = in.get_u32();
  model->trees_.reserve(count);
  for (std::uint32_t t = 0; t < count; ++t) {
    model->trees_.push_back(DecisionTree::deserialize(in));
  }
  return model;
}

}  // namespace footcast

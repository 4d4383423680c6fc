#pragma once

#include <vector>

#include "footcast/classifier.hpp"
#include "footcast/tree.hpp"

namespace footcast {

/// Random forest: CART trees on bootstrap row samples with a sqrt(d) feature
/// subsample per split. predict_proba is the fraction of tree class votes.
class RandomForestModel final : public FittedClassifier {
 public:
  static std::unique_ptr<RandomForestModel> fit(const Matrix& X,
                                                const std::vector<Winner>& y,
                                                std::size_t n_trees, std::size_t max_depth,
                                                std::uint64_t seed);

  ModelFamily family() const override { return ModelFamily::random_forest; }
  std::size_t feature_count() const override { return dimension_; }
  ProbPair predict_proba(std::span<const double> x) const override;
  void serialize(BinaryWriter& out) const override;
  static std::unique_ptr<RandomForestModel> deserialize(BinaryReader& in);

  const std::vector<DecisionTree>& trees() const { return trees_; }

 private:
  std::vector<DecisionTree> trees_;
  std::size_t dimension_ = 0;
};

}  // namespace footcast

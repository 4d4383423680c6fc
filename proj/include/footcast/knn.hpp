#pragma once

#include <vector>

#include "footcast/classifier.hpp"

namespace footcast {

/// k-nearest neighbors with exact exhaustive search. Neighbors order by
/// squared Euclidean distance, ties by training-row index; pA is the fraction
/// of team_a labels among the k nearest.
class KnnModel final : public FittedClassifier {
 public:
  static std::unique_ptr<KnnModel> fit(const Matrix& X, const std::vector<Winner>& y,
                                       std::size_t k);

  ModelFamily family() const override { return ModelFamily::knn; }
  std::size_t feature_count() const override { return train_.cols(); }
  ProbPair predict_proba(std::span<const double> x) const override;
  void serialize(BinaryWriter& out) const override;
  static std::unique_ptr<KnnModel> deserialize(BinaryReader& in);

  std::size_t k() const { return k_; }

 private:
  Matrix train_;
  std::vector<Winner> labels_;
  std::size_t k_ = 1;
};

}  // namespace footcast

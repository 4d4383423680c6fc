#pragma once

#include <cstdint>
#include <vector>

#include "footcast/classifier.hpp"

namespace footcast {

/// Decision stump: predicts team_a when polarity * sign(x[feature] - threshold)
/// is positive, using the x <= threshold convention of the tree module.
struct Stump {
  std::int32_t feature = 0;
  double threshold = 0.0;
  std::int8_t polarity = 1;  // +1: x > threshold -> team_a; -1: reversed
  double alpha = 0.0;

  int direction(std::span<const double> x) const {
    int side = x[static_cast<std::size_t>(feature)] > threshold ? 1 : -1;
    return polarity > 0 ? side : -side;
  }
};

/// Discrete AdaBoost over decision stumps, alpha_t = 0.5 ln((1-e)/e) with the
/// weighted error floored at 1e-10 so separable data keeps finite weights.
/// pA is the logistic transform of the aggregated margin.
class AdaBoostModel final : public FittedClassifier {
 public:
  static std::unique_ptr<AdaBoostModel> fit(const Matrix& X, const std::vector<Winner>& y,
                                            std::size_t rounds);

  ModelFamily family() const override { return ModelFamily::adaboost; }
  std::size_t feature_count() const override { return dimension_; }
  ProbPair predict_proba(std::span<const double> x) const override;
  void serialize(BinaryWriter& out) const override;
  static std::unique_ptr<AdaBoostModel> deserialize(BinaryReader& in);

  const std::vector<Stump>& stumps() const { return stumps_; }

 private:
  std::vector<Stump> stumps_;
  std::size_t dimension_ = 0;
};

}  // namespace footcast

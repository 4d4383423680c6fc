#pragma once

#include <span>
#include <vector>

#include "footcast/classifier.hpp"
#include "footcast/tree.hpp"

namespace footcast {

/// Gradient-boosted trees on the logistic loss: a stagewise additive model of
/// depth-limited regression trees fit to negative gradients, with per-leaf
/// Newton steps and shrinkage eta. Scores are log-odds; pA = sigmoid(score).
class GradientBoostModel final : public FittedClassifier {
 public:
  static std::unique_ptr<GradientBoostModel> fit(const Matrix& X,
                                                 const std::vector<Winner>& y,
                                                 std::size_t rounds, double eta,
                                                 std::size_t max_depth);

  ModelFamily family() const override { return ModelFamily::gradient_boost; }
  std::size_t feature_count() const override { return dimension_; }
  ProbPair predict_proba(std::span<const double> x) const override;
  void serialize(BinaryWriter& out) const override;
  static std::unique_ptr<GradientBoostModel> deserialize(BinaryReader& in);

  double base_score() const { return base_score_; }
  const std::vector<DecisionTree>& trees() const { return trees_; }

 private:
  double base_score_ = 0.0;
  double eta_ = 0.1;
  std::vector<DecisionTree> trees_;
  std::size_t dimension_ = 0;
};

namespace gb_detail {

/// Per-leaf objective: total logistic loss of the leaf members after adding
/// step gamma to their scores. `is_team_a` holds 1 for team_a rows.
double leaf_objective(double gamma, std::span<const double> scores,
                      std::span<const std::uint8_t> is_team_a);

/// Analytic derivative of leaf_objective with respect to gamma.
double leaf_objective_derivative(double gamma, std::span<const double> scores,
                                 std::span<const std::uint8_t> is_team_a);

}  // namespace gb_detail

}  // namespace footcast

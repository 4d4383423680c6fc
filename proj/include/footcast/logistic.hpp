#pragma once

#include <span>
#include <vector>

#include "footcast/classifier.hpp"

namespace footcast {

/// L2-regularized logistic loss (intercept unregularized):
///   J(w, b) = mean cross-entropy + lambda/2 * |w|^2
/// Exposed as a standalone objective so the analytic gradient can be checked
/// against finite differences.
struct LogisticObjective {
  const Matrix& X;
  const std::vector<Winner>& y;  // team_a is the positive class
  double lambda = 0.0;

  double loss(std::span<const double> weights, double bias) const;
  void gradient(std::span<const double> weights, double bias,
                std::span<double> grad_weights, double& grad_bias) const;
};

/// Full-batch gradient descent with a fixed step, stopping on max iterations
/// or gradient infinity-norm below tol.
class LogisticModel final : public FittedClassifier {
 public:
  static std::unique_ptr<LogisticModel> fit(const Matrix& X, const std::vector<Winner>& y,
                                            double lambda, double learning_rate,
                                            std::size_t max_iterations, double tol);

  ModelFamily family() const override { return ModelFamily::logistic; }
  std::size_t feature_count() const override { return weights_.size(); }
  ProbPair predict_proba(std::span<const double> x) const override;
  void serialize(BinaryWriter& out) const override;
  static std::unique_ptr<LogisticModel> deserialize(BinaryReader& in);

  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }

 private:
  std::vector<double> weights_;
  double bias_ = 0.0;
};

}  // namespace footcast

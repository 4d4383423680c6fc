#include "footcast/boosting.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace footcast {

namespace gb_detail {

double leaf_objective(double gamma, std::span<const double> scores,
                      std::span<const std::uint8_t> is_team_a) {
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double z = scores[i] + gamma;
    const double target = is_team_a[i] ? 1.0 : 0.0;
    // log(1 + e^z) - target*z, evaluated stably for large |z|.
    const double softplus = z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
    total += softplus - target * z;
  }
  return total;
}

double leaf_objective_derivative(double gamma, std::span<const double> scores,
                                 std::span<const std::uint8_t> is_team_a) {
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double target = is_team_a[i] ? 1.0 : 0.0;
    total += sigmoid(scores[i] + gamma) - target;
  }
  return total;
}

}  // namespace gb_detail

std::unique_ptr<GradientBoostModel> GradientBoostModel::fit(const Matrix& X,
                                                            const std::vector<Winner>& y,
                                                            std::size_t rounds, double eta,
                                                            std::size_t max_depth) {
  const std::size_t n = X.rows();
  if (n == 0 || n != y.size()) {
    throw std::invalid_argument("boost fit: bad training shape");
  }
  if (rounds == 0) throw std::invalid_argument("boost fit: rounds must be positive");
  if (!(eta > 0.0)) throw std::invalid_argument("boost fit: eta must be positive");

  auto model = std::make_unique<GradientBoostModel>();
  model->dimension_ = X.cols();
  model->eta_ = eta;

  std::size_t count_a = 0;
  for (Winner w : y) {
    if (w == Winner::team_a) count_a++;
  }
  const double rate =
      std::min(std::max(static_cast<double>(count_a) / static_cast<double>(n), 1e-12),
               1.0 - 1e-12);
  model->base_score_ = std::log(rate / (1.0 - rate));

  std::vector<double> scores(n, model->base_score_);
  std::vector<double> residuals(n, 0.0);
  std::vector<double> hessians(n, 0.0);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});

  RegressionTreeOptions options;
  options.max_depth = max_depth;

  model->trees_.reserve(rounds);
  for (std::size_t round = 0; round < rounds; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      const double p = sigmoid(scores[i]);
      const double target = y[i] == Winner::team_a ? 1.0 : 0.0;
      residuals[i] = target - p;   // negative gradient of the logistic loss
      hessians[i] = p * (1.0 - p);
    }
    DecisionTree tree = grow_regression_tree(X, residuals, hessians, all, options);
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] += eta * tree.predict(X.row(i));
    }
    model->trees_.push_back(std::move(tree));
  }
  return model;
}

ProbPair GradientBoostModel::predict_proba(std::span<const double> x) const {
  check_dimension(x);
  double score = base_score_;
  for (const DecisionTree& tree : trees_) score += eta_ * tree.predict(x);
  ProbPair p;
  p.team_a = sigmoid(score);
  p.team_b = 1.0 - p.team_a;
  return p;
}

void GradientBoostModel::serialize(BinaryWriter& out) const {
  out.put_u64(dimension_);
  out.put_f64(base_score_);
  out.put_f64(eta_);
  out.put_u32(static_cast<std::uint32_t>(trees_.size()));
  for (const DecisionTree& tree : trees_) tree.serialize(out);
}

std::unique_ptr<GradientBoostModel> GradientBoostModel::deserialize(BinaryReader& in) {
  auto model = std::make_unique<GradientBoostModel>();
  model->dimension_ = in.get_u64();
  model->base_score_ = in.get_f64();
  model->eta_ = in.get_f64();
  const std::uint32_t count = in.get_u32();
  model->trees_.reserve(count);
  for (std::uint32_t t = 0; t < count; ++t) {
    model->trees_.push_back(DecisionTree::deserialize(in));
  }
  return model;
}

}  // namespace footcast

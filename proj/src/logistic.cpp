#include "footcast/logistic.hpp"

#include <cmath>
#include <stdexcept>

namespace footcast {

double LogisticObjective::loss(std::span<const double> weights, double bias) const {
  const std::size_t n = X.rows();
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    auto row = X.row(r);
    double z = bias;
    for (std::size_t j = 0; j < row.size(); ++j) z += weights[j] * row[j];
    const double p = sigmoid(z);
    const double target = y[r] == Winner::team_a ? 1.0 : 0.0;
    // Clamp away from 0/1 so separable fixtures stay finite.
    const double safe = std::min(std::max(p, 1e-15), 1.0 - 1e-15);
    total += -(target * std::log(safe) + (1.0 - target) * std::log(1.0 - safe));
  }
  double penalty = 0.0;
  for (double w : weights) penalty += w * w;
  return total / static_cast<double>(n) + 0.5 * lambda * penalty;
}

void LogisticObjective::gradient(std::span<const double> weights, double bias,
                                 std::span<double> grad_weights, double& grad_bias) const {
  const std::size_t n = X.rows();
  const std::size_t d = weights.size();
  for (std::size_t j = 0; j < d; ++j) grad_weights[j] = 0.0;
  grad_bias = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    auto row = X.row(r);
    double z = bias;
    for (std::size_t j = 0; j < d; ++j) z += weights[j] * row[j];
    const double target = y[r] == Winner::team_a ? 1.0 : 0.0;
    const double err = sigmoid(z) - target;
    for (std::size_t j = 0; j < d; ++j) grad_weights[j] += err * row[j];
    grad_bias += err;
  }
  for (std::size_t j = 0; j < d; ++j) {
    grad_weights[j] = grad_weights[j] / static_cast<double>(n) + lambda * weights[j];
  }
  grad_bias /= static_cast<double>(n);
}

std::unique_ptr<LogisticModel> LogisticModel::fit(const Matrix& X,
                                                  const std::vector<Winner>& y,
                                                  double lambda, double learning_rate,
                                                  std::size_t max_iterations, double tol) {
  if (X.rows() == 0 || X.rows() != y.size()) {
    throw std::invalid_argument("logistic fit: bad training shape");
  }
  auto model = std::make_unique<LogisticModel>();
  model->weights_.assign(X.cols(), 0.0);
  model->bias_ = 0.0;

  const LogisticObjective objective{X, y, lambda};
  std::vector<double> grad_w(X.cols(), 0.0);
  double grad_b = 0.0;
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    objective.gradient(model->weights_, model->bias_, grad_w, grad_b);
    double inf_norm = std::abs(grad_b);
    for (double g : grad_w) inf_norm = std::max(inf_norm, std::abs(g));
    if (inf_norm < tol) break;
    for (std::size_t j = 0; j < grad_w.size(); ++j) {
      model->weights_[j] -= learning_rate * grad_w[j];
    }
    model->bias_ -= learning_rate * grad_b;
  }
  return model;
}

ProbPair LogisticModel::predict_proba(std::span<const double> x) const {
  check_dimension(x);
  double z = bias_;
  for (std::size_t j = 0; j < weights_.size(); ++j) z += weights_[j] * x[j];
  ProbPair p;
  p.team_a = sigmoid(z);
  p.team_b = 1.0 - p.team_a;
  return p;
}

void LogisticModel::serialize(BinaryWriter& out) const {
  out.put_f64_span(weights_);
  out.put_f64(bias_);
}

std::unique_ptr<LogisticModel> LogisticModel::deserialize(BinaryReader& in) {
  auto model = std::make_unique<LogisticModel>();
  const std::uint64_t count = in.get_u64();
  model->weights_ = in.get_f64_vector(count);
  model->bias_ = in.get_f64();
  return model;
}

}  // namespace footcast

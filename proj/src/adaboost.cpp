#include "footcast/adaboost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace footcast {

namespace {

constexpr double kErrorFloor = 1e-10;

struct StumpSearch {
  Stump stump;
  double error = 2.0;  // anything real beats this
};

/// Minimum-weighted-error stump. Candidate thresholds are the distinct sorted
/// values of each feature except the largest, so every stump splits the data;
/// ties resolve to the lowest feature, then lowest threshold, then polarity +1.
StumpSearch best_stump(const Matrix& X, const std::vector<int>& y,
                       const std::vector<double>& weights) {
  const std::size_t n = X.rows();
  StumpSearch best;
  std::vector<std::pair<double, std::size_t>> ordered(n);  // (value, row)
  for (std::size_t f = 0; f < X.cols(); ++f) {
    for (std::size_t i = 0; i < n; ++i) ordered[i] = {X(i, f), i};
    std::sort(ordered.begin(), ordered.end());

    double total_a = 0.0;  // weight of team_a (+1) rows
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] > 0) total_a += weights[i];
    }
    const double total_b = 1.0 - total_a;  // weights are normalized

    double left_a = 0.0;
    double left_b = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t row = ordered[i].second;
      (y[row] > 0 ? left_a : left_b) += weights[row];
      if (ordered[i].first == ordered[i + 1].first) continue;
      // polarity +1: x > threshold predicts team_a, so the left side's
      // team_a weight and the right side's team_b weight are the mistakes.
      const double err_pos = left_a + (total_b - left_b);
      const double err_neg = (total_a - left_a) + left_b;
      if (err_pos < best.error) {
        best.error = err_pos;
        best.stump = {static_cast<std::int32_t>(f), ordered[i].first, 1, 0.0};
      }
      if (err_neg < best.error) {
        best.error = err_neg;
        best.stump = {static_cast<std::int32_t>(f), ordered[i].first, -1, 0.0};
      }
    }
  }
  return best;
}

}  // namespace

std::unique_ptr<AdaBoostModel> AdaBoostModel::fit(const Matrix& X,
                                                  const std::vector<Winner>& y,
                                                  std::size_t rounds) {
  const std::size_t n = X.rows();
  if (n == 0 || n != y.size()) {
    throw std::invalid_argument("adaboost fit: bad training shape");
  }
  if (rounds == 0) throw std::invalid_argument("adaboost fit: rounds must be positive");

  auto model = std::make_unique<AdaBoostModel>();
  model->dimension_ = X.cols();

  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = y[i] == Winner::team_a ? 1 : -1;

  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  model->stumps_.reserve(rounds);
  for (std::size_t round = 0; round < rounds; ++round) {
    StumpSearch found = best_stump(X, signs, weights);
    if (found.error > 1.0) break;  // no feature offers a split
    const double eps = std::min(std::max(found.error, kErrorFloor), 1.0 - kErrorFloor);
    found.stump.alpha = 0.5 * std::log((1.0 - eps) / eps);

    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int h = found.stump.direction(X.row(i));
      weights[i] *= std::exp(-found.stump.alpha * signs[i] * h);
      total += weights[i];
    }
    for (double& w : weights) w /= total;
    model->stumps_.push_back(found.stump);
  }
  return model;
}

ProbPair AdaBoostModel::predict_proba(std::span<const double> x) const {
  check_dimension(x);
  double margin = 0.0;
  for (const Stump& stump : stumps_) margin += stump.alpha * stump.direction(x);
  ProbPair p;
  p.team_a = sigmoid(margin);
  p.team_b = 1.0 - p.team_a;
  return p;
}

void AdaBoostModel::serialize(BinaryWriter& out) const {
  out.put_u64(dimension_);
  out.put_u32(static_cast<std::uint32_t>(stumps_.size()));
  for (const Stump& stump : stumps_) {
    out.put_i64(stump.feature);
    out.put_f64(stump.threshold);
    out.put_i64(stump.polarity);
    out.put_f64(stump.alpha);
  }
}

std::unique_ptr<AdaBoostModel> AdaBoostModel::deserialize(BinaryReader& in) {
  auto model = std::make_unique<AdaBoostModel>();
  model->dimension_ = in.get_u64();
  const std::uint32_t count = in.get_u32();
  model->stumps_.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    Stump stump;
    stump.feature = static_cast<std::int32_t>(in.get_i64());
    stump.threshold = in.get_f64();
    stump.polarity = static_cast<std::int8_t>(in.get_i64());
    stump.alpha = in.get_f64();
    model->stumps_.push_back(stump);
  }
  return model;
}

}  // namespace footcast

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "footcast/binio.hpp"
#include "footcast/examples.hpp"
#include "footcast/matrix.hpp"
#include "footcast/rng.hpp"

namespace footcast {

/// Binary decision tree node. Internal nodes route x[feature] <= threshold to
/// `left`; leaves (feature < 0) carry a value.
struct TreeNode {
  std::int32_t feature = -1;
  double threshold = 0.0;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double value = 0.0;

  bool is_leaf() const { return feature < 0; }
};

class DecisionTree {
 public:
  DecisionTree() = default;
  explicit DecisionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  double predict(std::span<const double> x) const;
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  void serialize(BinaryWriter& out) const;
  static DecisionTree deserialize(BinaryReader& in);

 private:
  std::vector<TreeNode> nodes_;
};

struct ClassificationTreeOptions {
  std::size_t max_depth = 8;
  std::size_t min_samples_split = 2;
  std::size_t features_per_split = 0;  // 0 = consider every feature
};

/// CART with Gini impurity. Splits are x <= v for distinct sorted values v;
/// ties break toward the lowest feature index, then the lowest threshold.
/// Leaf value is the majority class as 1.0 (team_a) / 0.0 (team_b); an exact
/// leaf tie votes team_a. feature_rng drives the per-split feature subsample
/// and may be null when all features are considered.
DecisionTree grow_classification_tree(const Matrix& X, const std::vector<Winner>& y,
                                      std::span<const std::size_t> rows,
                                      const ClassificationTreeOptions& options,
                                      Rng* feature_rng);

struct RegressionTreeOptions {
  std::size_t max_depth = 3;
  std::size_t min_samples_split = 2;
};

/// Squared-error regression tree over residuals. Each leaf carries the Newton
/// step sum(residual) / max(sum(hessian), 1e-12) of its members.
DecisionTree grow_regression_tree(const Matrix& X, std::span<const double> residuals,
                                  std::span<const double> hessians,
                                  std::span<const std::size_t> rows,
                                  const RegressionTreeOptions& options);

}  // namespace footcast

#include "footcast/tree.hpp"

#include <algorithm>
#include <numeric>

namespace footcast {

namespace {

constexpr double kMinGain = 1e-12;

struct SplitChoice {
  bool found = false;
  std::size_t feature = 0;
  double threshold = 0.0;
  double gain = 0.0;
};

double gini(std::size_t a, std::size_t total) {
  if (total == 0) return 0.0;
  const double pa = static_cast<double>(a) / static_cast<double>(total);
  const double pb = 1.0 - pa;
  return 1.0 - pa * pa - pb * pb;
}

std::vector<std::size_t> candidate_features(std::size_t d, std::size_t per_split,
                                            Rng* feature_rng) {
  std::vector<std::size_t> all(d);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (per_split == 0 || per_split >= d || feature_rng == nullptr) return all;
  // Partial Fisher-Yates, then ascending order so ties still favor the
  // lowest feature index.
  for (std::size_t i = 0; i < per_split; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(feature_rng->next_below(
                                  static_cast<std::uint64_t>(d - i)));
    std::swap(all[i], all[j]);
  }
  all.resize(per_split);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

double DecisionTree::predict(std::span<const double> x) const {
  std::size_t node = 0;
  while (!nodes_[node].is_leaf()) {
    const TreeNode& n = nodes_[node];
    node = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  return nodes_[node].value;
}

void DecisionTree::serialize(BinaryWriter& out) const {
  out.put_u32(static_cast<std::uint32_t>(nodes_.size()));
  for (const TreeNode& n : nodes_) {
    out.put_i64(n.feature);
    out.put_f64(n.threshold);
    out.put_u32(n.left);
    out.put_u32(n.right);
    out.put_f64(n.value);
  }
}

DecisionTree DecisionTree::deserialize(BinaryReader& in) {
  const std::uint32_t count = in.get_u32();
  std::vector<TreeNode> nodes;
  nodes.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    TreeNode n;
    n.feature = static_cast<std::int32_t>(in.get_i64());
    n.threshold = in.get_f64();
    n.left = in.get_u32();
    n.right = in.get_u32();
    n.value = in.get_f64();
    nodes.push_back(n);
  }
  return DecisionTree(std::move(nodes));
}

namespace {

class ClassificationBuilder {
 public:
  ClassificationBuilder(const Matrix& X, const std::vector<Winner>& y,
                        const ClassificationTreeOptions& options, Rng* feature_rng)
      : X_(X), y_(y), options_(options), feature_rng_(feature_rng) {}

  std::uint32_t build(std::vector<std::size_t> rows, std::size_t depth) {
    std::size_t count_a = 0;
    for (std::size_t r : rows) {
      if (y_[r] == Winner::team_a) count_a++;
    }
    const bool pure = count_a == 0 || count_a == rows.size();
    if (pure || depth >= options_.max_depth || rows.size() < options_.min_samples_split) {
      return make_leaf(count_a, rows.size());
    }

    const SplitChoice split = best_split(rows, count_a);
    if (!split.found) return make_leaf(count_a, rows.size());

    std::vector<std::size_t> left, right;
    for (std::size_t r : rows) {
      (X_(r, split.feature) <= split.threshold ? left : right).push_back(r);
    }
    const std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].feature = static_cast<std::int32_t>(split.feature);
    nodes_[id].threshold = split.threshold;
    const std::uint32_t l = build(std::move(left), depth + 1);
    const std::uint32_t r = build(std::move(right), depth + 1);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

  std::vector<TreeNode> take() { return std::move(nodes_); }

 private:
  std::uint32_t make_leaf(std::size_t count_a, std::size_t total) {
    TreeNode leaf;
    // Majority class; an exact tie votes team_a.
    leaf.value = 2 * count_a >= total ? 1.0 : 0.0;
    nodes_.push_back(leaf);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  SplitChoice best_split(const std::vector<std::size_t>& rows, std::size_t count_a) const {
    const std::size_t n = rows.size();
    const double parent = gini(count_a, n);
    SplitChoice best;
    std::vector<std::pair<double, bool>> ordered(n);  // (value, is_team_a)
    for (std::size_t f :
         candidate_features(X_.cols(), options_.features_per_split, feature_rng_)) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = rows[i];
        ordered[i] = {X_(r, f), y_[r] == Winner::team_a};
      }
      std::sort(ordered.begin(), ordered.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      std::size_t left_n = 0;
      std::size_t left_a = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        left_n++;
        if (ordered[i].second) left_a++;
        if (ordered[i].first == ordered[i + 1].first) continue;  // not a boundary
        const std::size_t right_n = n - left_n;
        const std::size_t right_a = count_a - left_a;
        const double weighted =
            (static_cast<double>(left_n) * gini(left_a, left_n) +
             static_cast<double>(right_n) * gini(right_a, right_n)) /
            static_cast<double>(n);
        const double gain = parent - weighted;
        if (gain > best.gain + kMinGain) {
          best.found = true;
          best.feature = f;
          best.threshold = ordered[i].first;
          best.gain = gain;
        }
      }
    }
    return best;
  }

  const Matrix& X_;
  const std::vector<Winner>& y_;
  const ClassificationTreeOptions& options_;
  Rng* feature_rng_;
  std::vector<TreeNode> nodes_;
};

class RegressionBuilder {
 public:
  RegressionBuilder(const Matrix& X, std::span<const double> residuals,
                    std::span<const double> hessians, const RegressionTreeOptions& options)
      : X_(X), residuals_(residuals), hessians_(hessians), options_(options) {}

  std::uint32_t build(std::vector<std::size_t> rows, std::size_t depth) {
    if (depth >= options_.max_depth || rows.size() < options_.min_samples_split) {
      return make_leaf(rows);
    }
    const SplitChoice split = best_split(rows);
    if (!split.found) return make_leaf(rows);

    std::vector<std::size_t> left, right;
    for (std::size_t r : rows) {
      (X_(r, split.feature) <= split.threshold ? left : right).push_back(r);
    }
    const std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].feature = static_cast<std::int32_t>(split.feature);
    nodes_[id].threshold = split.threshold;
    const std::uint32_t l = build(std::move(left), depth + 1);
    const std::uint32_t r = build(std::move(right), depth + 1);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

  std::vector<TreeNode> take() { return std::move(nodes_); }

 private:
  std::uint32_t make_leaf(const std::vector<std::size_t>& rows) {
    double sum_r = 0.0;
    double sum_h = 0.0;
    for (std::size_t r : rows) {
      sum_r += residuals_[r];
      sum_h += hessians_[r];
    }
    TreeNode leaf;
    leaf.value = sum_r / std::max(sum_h, 1e-12);
    nodes_.push_back(leaf);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  SplitChoice best_split(const std::vector<std::size_t>& rows) const {
    const std::size_t n = rows.size();
    double total_r = 0.0;
    double total_r2 = 0.0;
    for (std::size_t r : rows) {
      total_r += residuals_[r];
      total_r2 += residuals_[r] * residuals_[r];
    }
    const double parent_sse = total_r2 - total_r * total_r / static_cast<double>(n);

    SplitChoice best;
    std::vector<std::pair<double, double>> ordered(n);  // (value, residual)
    for (std::size_t f = 0; f < X_.cols(); ++f) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = rows[i];
        ordered[i] = {X_(r, f), residuals_[r]};
      }
      std::sort(ordered.begin(), ordered.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      double left_r = 0.0;
      double left_r2 = 0.0;
      std::size_t left_n = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        left_n++;
        left_r += ordered[i].second;
        left_r2 += ordered[i].second * ordered[i].second;
        if (ordered[i].first == ordered[i + 1].first) continue;
        const std::size_t right_n = n - left_n;
        const double right_r = total_r - left_r;
        const double right_r2 = total_r2 - left_r2;
        const double sse_l = left_r2 - left_r * left_r / static_cast<double>(left_n);
        const double sse_r = right_r2 - right_r * right_r / static_cast<double>(right_n);
        const double gain = parent_sse - sse_l - sse_r;
        if (gain > best.gain + kMinGain) {
          best.found = true;
          best.feature = f;
          best.threshold = ordered[i].first;
          best.gain = gain;
        }
      }
    }
    return best;
  }

  const Matrix& X_;
  std::span<const double> residuals_;
  std::span<const double> hessians_;
  const RegressionTreeOptions& options_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

DecisionTree grow_classification_tree(const Matrix& X, const std::vector<Winner>& y,
                                      std::span<const std::size_t> rows,
                                      const ClassificationTreeOptions& options,
                                      Rng* feature_rng) {
  ClassificationBuilder builder(X, y, options, feature_rng);
  builder.build(std::vector<std::size_t>(rows.begin(), rows.end()), 0);
  return DecisionTree(builder.take());
}

DecisionTree grow_regression_tree(const Matrix& X, std::span<const double> residuals,
                                  std::span<const double> hessians,
                                  std::span<const std::size_t> rows,
                                  const RegressionTreeOptions& options) {
  RegressionBuilder builder(X, residuals, hessians, options);
  builder.build(std::vector<std::size_t>(rows.begin(), rows.end()), 0);
  return DecisionTree(builder.take());
}

}  // namespace footcast

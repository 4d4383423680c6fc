#include "footcast/knn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace footcast {

std::unique_ptr<KnnModel> KnnModel::fit(const Matrix& X, const std::vector<Winner>& y,
                                        std::size_t k) {
  if (X.rows() == 0 || X.rows() != y.size()) {
    throw std::invalid_argument("knn fit: bad training shape");
  }
  if (k == 0) throw std::invalid_argument("knn fit: k must be positive");
  auto model = std::make_unique<KnnModel>();
  model->train_ = X;
  model->labels_ = y;
  model->k_ = std::min(k, X.rows());
  return model;
}

ProbPair KnnModel::predict_proba(std::span<const double> x) const {
  check_dimension(x);
  const std::size_t n = train_.rows();
  std::vector<double> dist2(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = train_.row(r);
    double d2 = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double diff = row[j] - x[j];
      d2 += diff * diff;
    }
    dist2[r] = d2;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Equal squared distances keep training-row order.
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k_),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      if (dist2[a] != dist2[b]) return dist2[a] < dist2[b];
                      return a < b;
                    });
  std::size_t votes_a = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    if (labels_[order[i]] == Winner::team_a) votes_a++;
  }
  ProbPair p;
  p.team_a = static_cast<double>(votes_a) / static_cast<double>(k_);
  p.team_b = 1.0 - p.team_a;
  return p;
}

void KnnModel::serialize(BinaryWriter& out) const {
  out.put_u64(k_);
  out.put_u64(train_.rows());
  out.put_u64(train_.cols());
  for (std::size_t r = 0; r < train_.rows(); ++r) {
    auto row = train_.row(r);
    for (double v : row) out.put_f64(v);
  }
  for (Winner w : labels_) out.put_u8(static_cast<std::uint8_t>(w));
}

std::unique_ptr<KnnModel> KnnModel::deserialize(BinaryReader& in) {
  auto model = std::make_unique<KnnModel>();
  model->k_ = in.get_u64();
  const std::uint64_t rows = in.get_u64();
  const std::uint64_t cols = in.get_u64();
  model->train_ = Matrix(rows, cols);
  for (std::uint64_t r = 0; r < rows; ++r) {
    auto row = model->train_.row(r);
    for (std::uint64_t c = 0; c < cols; ++c) row[c] = in.get_f64();
  }
  model->labels_.reserve(rows);
  for (std::uint64_t r = 0; r < rows; ++r) {
    model->labels_.push_back(static_cast<Winner>(in.get_u8()));
  }
  return model;
}

}  // namespace footcast

#include "footcast/scaler.hpp"

#include <cmath>
#include <stdexcept>

namespace footcast {

Scaler::Scaler(std::vector<double> means, std::vector<double> stds, double std_floor)
    : means_(std::move(means)), stds_(std::move(stds)), std_floor_(std_floor) {
  for (std::size_t j = 0; j < stds_.size(); ++j) {
    if (stds_[j] <= std_floor_) floored_.push_back(j);
  }
}

Scaler Scaler::fit(const Matrix& rows, double std_floor) {
  if (rows.rows() < 2) throw std::invalid_argument("scaler needs at least 2 rows");
  const std::size_t n = rows.rows();
  const std::size_t d = rows.cols();
  Scaler scaler;
  scaler.std_floor_ = std_floor;
  scaler.means_.assign(d, 0.0);
  scaler.stds_.assign(d, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = rows.row(r);
    for (std::size_t j = 0; j < d; ++j) scaler.means_[j] += row[j];
  }
  for (std::size_t j = 0; j < d; ++j) scaler.means_[j] /= static_cast<double>(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = rows.row(r);
    for (std::size_t j = 0; j < d; ++j) {
      const double dv = row[j] - scaler.means_[j];
      scaler.stds_[j] += dv * dv;
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    scaler.stds_[j] = std::sqrt(scaler.stds_[j] / static_cast<double>(n));
    if (scaler.stds_[j] < std_floor) {
      scaler.stds_[j] = std_floor;
      scaler.floored_.push_back(j);
    }
  }
  return scaler;
}

Matrix Scaler::apply(const Matrix& rows) const {
  if (rows.cols() != means_.size()) {
    throw std::invalid_argument("scaler dimension mismatch");
  }
  Matrix out(rows.rows(), rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto src = rows.row(r);
    auto dst = out.row(r);
    for (std::size_t j = 0; j < src.size(); ++j) {
      dst[j] = (src[j] - means_[j]) / stds_[j];
    }
  }
  return out;
}

std::vector<double> Scaler::apply(std::span<const double> row) const {
  if (row.size() != means_.size()) {
    throw std::invalid_argument("scaler dimension mismatch");
  }
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j] = (row[j] - means_[j]) / stds_[j];
  }
  return out;
}

}  // namespace footcast

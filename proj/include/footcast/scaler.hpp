#pragma once

#include <span>
#include <vector>

#include "footcast/matrix.hpp"

namespace footcast {

/// Per-feature z-scoring with population (1/n) standard deviations, fitted on
/// training rows only. Constant columns have their std floored and scale to
/// all-zero.
class Scaler {
 public:
  Scaler() = default;
  Scaler(std::vector<double> means, std::vector<double> stds, double std_floor);

  static Scaler fit(const Matrix& rows, double std_floor = 1e-12);

  Matrix apply(const Matrix& rows) const;
  std::vector<double> apply(std::span<const double> row) const;

  const std::vector<double>& means() const { return means_; }
  const std::vector<double>& stds() const { return stds_; }
  double std_floor() const { return std_floor_; }
  /// Columns whose std was floored during fit.
  const std::vector<std::size_t>& floored_columns() const { return floored_; }

 private:
  std::vector<double> means_;
  std::vector<double> stds_;
  std::vector<std::size_t> floored_;
  double std_floor_ = 1e-12;
};

}  // namespace footcast

#pragma once

#include <span>
#include <vector>

#include "footcast/matrix.hpp"

namespace footcast {

/// Principal components of the sample (1/(n-1)) covariance. Component rows
/// are orthonormal and sign-fixed so that each row's largest-magnitude entry
/// is positive; explained variances are non-increasing.
struct PcaModel {
  Matrix components;  // k x d
  std::vector<double> explained_variance;
  std::vector<double> center;

  std::size_t retained() const { return components.rows(); }
  std::size_t input_dimension() const { return components.cols(); }

  Matrix transform(const Matrix& rows) const;
  std::vector<double> transform(std::span<const double> row) const;
  Matrix inverse_transform(const Matrix& reduced) const;
};

/// Fits on (already scaled) training rows; keeps the smallest k whose
/// cumulative explained-variance fraction reaches variance_target. Throws
/// std::invalid_argument for variance_target outside (0, 1].
PcaModel fit_pca(const Matrix& scaled_rows, double variance_target);

namespace detail {

/// Cyclic Jacobi eigensolver for a symmetric matrix. Eigenvalues are returned
/// in non-increasing order with matching eigenvectors as rows of `vectors`.
void symmetric_eigen(const Matrix& symmetric, std::vector<double>& values,
                     Matrix& vectors);

}  // namespace detail

}  // namespace footcast

#include "footcast/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace footcast {

namespace detail {

void symmetric_eigen(const Matrix& symmetric, std::vector<double>& values,
                     Matrix& vectors) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) throw std::invalid_argument("matrix not square");

  Matrix a = symmetric;
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off < 1e-24) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });

  values.resize(n);
  vectors = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = diag[order[i]];
    for (std::size_t k = 0; k < n; ++k) vectors(i, k) = v(k, order[i]);
  }
}

}  // namespace detail

PcaModel fit_pca(const Matrix& scaled_rows, double variance_target) {
  if (!(variance_target > 0.0) || variance_target > 1.0) {
    throw std::invalid_argument("variance target must be in (0, 1]");
  }
  const std::size_t n = scaled_rows.rows();
  const std::size_t d = scaled_rows.cols();
  if (n < 2) throw std::invalid_argument("pca needs at least 2 rows");

  PcaModel model;
  model.center.assign(d, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = scaled_rows.row(r);
    for (std::size_t j = 0; j < d; ++j) model.center[j] += row[j];
  }
  for (std::size_t j = 0; j < d; ++j) model.center[j] /= static_cast<double>(n);

  Matrix cov(d, d);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = scaled_rows.row(r);
    for (std::size_t i = 0; i < d; ++i) {
      const double di = row[i] - model.center[i];
      for (std::size_t j = i; j < d; ++j) {
        cov(i, j) += di * (row[j] - model.center[j]);
      }
    }
  }
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      cov(i, j) /= denom;
      cov(j, i) = cov(i, j);
    }
  }

  std::vector<double> eigenvalues;
  Matrix eigenvectors;
  detail::symmetric_eigen(cov, eigenvalues, eigenvectors);

  double total = 0.0;
  for (double v : eigenvalues) total += std::max(v, 0.0);
  std::size_t k = d;
  if (total > 0.0) {
    double cumulative = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      cumulative += std::max(eigenvalues[i], 0.0);
      if (cumulative / total >= variance_target - 1e-15) {
        k = i + 1;
        break;
      }
    }
  } else {
    k = 1;  // degenerate all-constant input keeps a single direction
  }

  model.components = Matrix(k, d);
  model.explained_variance.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    model.explained_variance[i] = std::max(eigenvalues[i], 0.0);
    // Sign convention: the first entry attaining the row's max magnitude is
    // made positive so refits produce identical components.
    double best = 0.0;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const double mag = std::abs(eigenvectors(i, j));
      if (mag > best) {
        best = mag;
        best_j = j;
      }
    }
    const double sign = eigenvectors(i, best_j) < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < d; ++j) model.components(i, j) = sign * eigenvectors(i, j);
  }
  return model;
}

Matrix PcaModel::transform(const Matrix& rows) const {
  if (rows.cols() != input_dimension()) {
    throw std::invalid_argument("pca dimension mismatch");
  }
  Matrix out(rows.rows(), retained());
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto src = rows.row(r);
    for (std::size_t i = 0; i < retained(); ++i) {
      double dot = 0.0;
      for (std::size_t j = 0; j < src.size(); ++j) {
        dot += components(i, j) * (src[j] - center[j]);
      }
      out(r, i) = dot;
    }
  }
  return out;
}

std::vector<double> PcaModel::transform(std::span<const double> row) const {
  if (row.size() != input_dimension()) {
    throw std::invalid_argument("pca dimension mismatch");
  }
  std::vector<double> out(retained(), 0.0);
  for (std::size_t i = 0; i < retained(); ++i) {
    double dot = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      dot += components(i, j) * (row[j] - center[j]);
    }
    out[i] = dot;
  }
  return out;
}

Matrix PcaModel::inverse_transform(const Matrix& reduced) const {
  if (reduced.cols() != retained()) {
    throw std::invalid_argument("pca dimension mismatch");
  }
  Matrix out(reduced.rows(), input_dimension());
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    auto dst = out.row(r);
    for (std::size_t j = 0; j < input_dimension(); ++j) {
      double sum = center[j];
      for (std::size_t i = 0; i < retained(); ++i) {
        sum += reduced(r, i) * components(i, j);
      }
      dst[j] = sum;
    }
  }
  return out;
}

}  // namespace footcast

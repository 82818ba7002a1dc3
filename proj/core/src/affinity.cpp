#include "ssbc/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ssbc/error.hpp"

namespace ssbc {

TrainSet::TrainSet(PointMatrix points, double sigma) : points_(std::move(points)), sigma_(sigma) {
  if (points_.rows() < 1 || points_.cols() < 1) throw DataError("TrainSet: empty training set");
  if (!points_.allFinite()) throw DataError("TrainSet: non-finite training value");
  if (!std::isfinite(sigma_) || sigma_ <= 0.0)
    throw ParameterError("TrainSet: sigma must be finite and > 0, got " + std::to_string(sigma_));
}

double gaussian_kernel(PointRef p, PointRef q, double sigma) {
  return std::exp(-(p - q).squaredNorm() / sigma);
}

RowVector affinity_vector(PointRef q, const TrainSet& train) {
  if (q.size() != train.dim()) detail::throw_dimension("affinity_vector", train.dim(), q.size());
  if (!q.allFinite()) throw DataError("affinity_vector: non-finite query");
  const PointMatrix& pts = train.points();
  RowVector w(train.size());
  for (Index i = 0; i < pts.rows(); ++i) w(i) = gaussian_kernel(q, pts.row(i), train.sigma());
  return w;
}

Matrix affinity_matrix(const PointMatrix& points, double sigma) {
  const Index n = points.rows();
  Matrix w(n, n);
  for (Index i = 0; i < n; ++i) {
    w(i, i) = 1.0;
    for (Index j = i + 1; j < n; ++j) {
      const double v = gaussian_kernel(points.row(i), points.row(j), sigma);
      w(i, j) = v;
      w(j, i) = v;
    }
  }
  return w;
}

double estimate_sigma_nn(const PointMatrix& points, Index t) {
  const Index n = points.rows();
  if (t < 1) throw ParameterError("estimate_sigma_nn: t must be >= 1");
  if (n <= t)
    throw ParameterError("estimate_sigma_nn: need more than t = " + std::to_string(t) +
                         " points, got " + std::to_string(n));
  std::vector<double> dist(static_cast<std::size_t>(n - 1));
  double total = 0.0;
  for (Index i = 0; i < n; ++i) {
    std::size_t pos = 0;
    for (Index j = 0; j < n; ++j)
      if (j != i) dist[pos++] = (points.row(i) - points.row(j)).norm();
    // Only the value matters, so index tie-breaking cannot change the result.
    std::nth_element(dist.begin(), dist.begin() + (t - 1), dist.end());
    total += dist[static_cast<std::size_t>(t - 1)];
  }
  return total / static_cast<double>(n);
}

double estimate_sigma_all(const PointMatrix& points) {
  const Index n = points.rows();
  if (n < 2) throw ParameterError("estimate_sigma_all: need at least 2 points");
  double total = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) total += (points.row(i) - points.row(j)).norm();
  return total / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace ssbc

#pragma once

#include "ssbc/types.hpp"

namespace ssbc {

/// Training points plus the Gaussian kernel bandwidth used against them.
class TrainSet {
 public:
  /// Throws DataError on an empty set or non-finite entries, ParameterError
  /// unless sigma is finite and positive.
  TrainSet(PointMatrix points, double sigma);

  const PointMatrix& points() const { return points_; }
  double sigma() const { return sigma_; }
  Index size() const { return points_.rows(); }
  Index dim() const { return points_.cols(); }

 private:
  PointMatrix points_;
  double sigma_;
};

/// Gaussian kernel exp(-||p - q||^2 / sigma). Note the divisor is sigma, not
/// sigma^2.
double gaussian_kernel(PointRef p, PointRef q, double sigma);

/// Row of affinities between q and every training point, entries in (0, 1].
RowVector affinity_vector(PointRef q, const TrainSet& train);

/// Dense n x n affinity matrix of a point set; symmetric with unit diagonal.
Matrix affinity_matrix(const PointMatrix& points, double sigma);

/// Mean Euclidean distance from each point to its t-th nearest other point.
/// Requires n > t. Ties are broken by index.
double estimate_sigma_nn(const PointMatrix& points, Index t);

/// Mean Euclidean distance over all unordered pairs. Requires n >= 2.
double estimate_sigma_all(const PointMatrix& points);

}  // namespace ssbc

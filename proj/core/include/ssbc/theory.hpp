#pragma once

#include <vector>

#include "ssbc/linalg.hpp"
#include "ssbc/types.hpp"

namespace ssbc {

struct SpectralCheckOptions {
  Index max_points = 2000;
  // Use every column exactly once, in order, instead of sampling with
  // replacement. Requires m == n.
  bool exhaustive = false;
  PowerIterationOptions power;
};

/// Spectral errors, each divided by ||W||_F^2:
///   err_w2    = ||W^2 - What What^T||_2
///   err_hat   = ||What What^T - Wtilde||_2
///   err_tilde = ||W^2 - Wtilde||_2
/// where What is m uniformly sampled columns of W scaled by sqrt(n / m),
/// B is the Frequent Directions sketch (ell rows) of What's rows, and
/// Wtilde = What B^T B What^+.
struct SpectralCheck {
  double err_w2 = 0.0;
  double err_hat = 0.0;
  double err_tilde = 0.0;
  double frob_w = 0.0;  // ||W||_F
  Index sample_rank = 0;
  bool degenerate = false;  // sampled matrix numerically rank deficient
  std::vector<Index> sampled_columns;
};

SpectralCheck theory_spectral_check(const PointMatrix& points, double sigma, Index m, Index ell,
                                    Seed seed, const SpectralCheckOptions& options = {});

/// Squared column norms C_i of the exact affinity matrix. C_min >= 1 always
/// because W_ii = 1.
struct ColumnNormStats {
  double cmax = 0.0;
  double cmin = 0.0;
  double ratio = 0.0;
  double frob_sq_over_n = 0.0;  // ||W||_F^2 / n, the mean of C_i
};

ColumnNormStats column_norm_diagnostic(const PointMatrix& points, double sigma,
                                       Index max_points = 2000);

}  // namespace ssbc

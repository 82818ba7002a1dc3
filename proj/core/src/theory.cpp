#include "ssbc/theory.hpp"

#include <cmath>
#include <string>

#include "ssbc/affinity.hpp"
#include "ssbc/error.hpp"
#include "ssbc/rng.hpp"
#include "ssbc/sketch.hpp"

namespace ssbc {

namespace {

void check_guard(const char* what, Index n, Index max_points) {
  if (n > max_points)
    throw GuardError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the dense guard of " +
                     std::to_string(max_points) + " points");
}

}  // namespace

SpectralCheck theory_spectral_check(const PointMatrix& points, double sigma, Index m, Index ell,
                                    Seed seed, const SpectralCheckOptions& options) {
  const Index n = points.rows();
  check_guard("theory_spectral_check", n, options.max_points);
  if (n < 1) throw DataError("theory_spectral_check: no points");
  if (m < 1 || m > n) throw ParameterError("theory_spectral_check: m must be in [1, n]");
  if (options.exhaustive && m != n) throw ParameterError("theory_spectral_check: exhaustive needs m == n");
  if (!(sigma > 0.0)) throw ParameterError("theory_spectral_check: sigma must be > 0");

  const Matrix w = affinity_matrix(points, sigma);

  SpectralCheck out;
  out.sampled_columns.resize(static_cast<std::size_t>(m));
  Rng rng(seed);
  for (Index j = 0; j < m; ++j)
    out.sampled_columns[static_cast<std::size_t>(j)] =
        options.exhaustive ? j : static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));

  const double scale = std::sqrt(static_cast<double>(n) / static_cast<double>(m));
  Matrix w_hat(n, m);
  for (Index j = 0; j < m; ++j) w_hat.col(j) = scale * w.col(out.sampled_columns[static_cast<std::size_t>(j)]);

  FdSketch sketch(ell, m);
  for (Index i = 0; i < n; ++i) sketch.insert(w_hat.row(i));

  const PseudoInverse pinv = pseudo_inverse(w_hat);
  out.sample_rank = pinv.rank;
  out.degenerate = pinv.rank < std::min(n, m);

  const Matrix w_sq = w * w;
  const Matrix hat_gram = w_hat * w_hat.transpose();
  const Matrix w_tilde = w_hat * sketch.gram() * pinv.pinv;

  const double frob_sq = w.squaredNorm();
  out.frob_w = std::sqrt(frob_sq);
  out.err_w2 = spectral_norm(w_sq - hat_gram, options.power) / frob_sq;
  out.err_hat = spectral_norm(hat_gram - w_tilde, options.power) / frob_sq;
  out.err_tilde = spectral_norm(w_sq - w_tilde, options.power) / frob_sq;
  return out;
}

ColumnNormStats column_norm_diagnostic(const PointMatrix& points, double sigma, Index max_points) {
  const Index n = points.rows();
  check_guard("column_norm_diagnostic", n, max_points);
  if (n < 1) throw DataError("column_norm_diagnostic: no points");
  if (!(sigma > 0.0)) throw ParameterError("column_norm_diagnostic: sigma must be > 0");
  const Vector c = affinity_matrix(points, sigma).colwise().squaredNorm().transpose();
  ColumnNormStats out;
  out.cmax = c.maxCoeff();
  out.cmin = c.minCoeff();
  out.ratio = out.cmax / out.cmin;
  out.frob_sq_over_n = c.sum() / static_cast<double>(n);
  return out;
}

}  // namespace ssbc

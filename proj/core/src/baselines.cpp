#include "ssbc/baselines.hpp"

#include <string>

#include <Eigen/QR>

#include "ssbc/affinity.hpp"
#include "ssbc/error.hpp"
#include "ssbc/linalg.hpp"

namespace ssbc {

LshModel LshModel::train(Index d, Index k, Seed seed) {
  if (d < 1) throw ParameterError("LshModel: d must be >= 1");
  if (k < 1) throw ParameterError("LshModel: k must be >= 1");
  Rng rng(seed);
  return LshModel(gaussian_matrix(d, k, rng), seed);
}

Codeword LshModel::encode(PointRef point) const {
  if (point.size() != projections_.rows())
    detail::throw_dimension("LshModel::encode", projections_.rows(), point.size());
  const RowVector projected = point * projections_;
  return Codeword::from_values(projected);
}

std::vector<Codeword> LshModel::encode_all(const PointMatrix& points) const {
  std::vector<Codeword> codes;
  codes.reserve(static_cast<std::size_t>(points.rows()));
  for (Index i = 0; i < points.rows(); ++i) codes.push_back(encode(points.row(i)));
  return codes;
}

std::string_view to_string(RoundingMode mode) {
  return mode == RoundingMode::deterministic ? "deterministic" : "randomized";
}

std::vector<Codeword> sign_rows(const Matrix& embedding, const Matrix& rotation) {
  std::vector<Codeword> codes;
  codes.reserve(static_cast<std::size_t>(embedding.rows()));
  if (rotation.size() == 0) {
    for (Index i = 0; i < embedding.rows(); ++i) codes.push_back(Codeword::from_values(embedding.row(i)));
    return codes;
  }
  if (rotation.rows() != embedding.cols() || rotation.cols() != embedding.cols())
    detail::throw_dimension("sign_rows", embedding.cols(), rotation.rows());
  const Matrix rotated = embedding * rotation;
  for (Index i = 0; i < rotated.rows(); ++i) codes.push_back(Codeword::from_values(rotated.row(i)));
  return codes;
}

Matrix haar_rotation(Index k, Rng& rng) {
  if (k < 1) throw ParameterError("haar_rotation: k must be >= 1");
  const Matrix g = gaussian_matrix(k, k, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(k, k);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < k; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

ExactCodes exact_codes(const PointMatrix& points, Index k, double sigma, RoundingMode mode,
                       Seed seed, const ExactOptions& options) {
  const Index n = points.rows();
  if (k < 1) throw ParameterError("exact_codes: k must be >= 1");
  if (n < k)
    throw ParameterError("exact_codes: need n >= k, got n = " + std::to_string(n) +
                         ", k = " + std::to_string(k));
  if (n > options.max_points)
    throw GuardError("exact_codes: n = " + std::to_string(n) + " exceeds the dense guard of " +
                     std::to_string(options.max_points) + " points");
  if (!(sigma > 0.0)) throw ParameterError("exact_codes: sigma must be > 0");
  if (!points.allFinite()) throw DataError("exact_codes: non-finite input");

  const Matrix w = affinity_matrix(points, sigma);
  if ((w.array() != w.transpose().array()).any() || (w.diagonal().array() != 1.0).any())
    throw NumericalError("exact_codes: affinity matrix is not symmetric with unit diagonal");

  EigenPairs eig = top_eigenpairs(w, k);
  ExactCodes out;
  out.mode = mode;
  out.eigenvalues = std::move(eig.values);
  out.embedding = std::move(eig.vectors);
  if (mode == RoundingMode::deterministic) {
    out.codes = sign_rows(out.embedding);
  } else {
    Rng rng(seed);
    out.codes = sign_rows(out.embedding, haar_rotation(k, rng));
  }
  return out;
}

}  // namespace ssbc

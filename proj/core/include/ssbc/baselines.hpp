#pragma once

#include <string_view>
#include <vector>

#include "ssbc/codeword.hpp"
#include "ssbc/rng.hpp"
#include "ssbc/types.hpp"

namespace ssbc {

/// Random-hyperplane LSH: bit j is the sign of <point, r_j> for k Gaussian
/// directions r_j. No centering or bias.
class LshModel {
 public:
  static LshModel train(Index d, Index k, Seed seed);

  Codeword encode(PointRef point) const;
  std::vector<Codeword> encode_all(const PointMatrix& points) const;

  const Matrix& projections() const { return projections_; }  // d x k
  Seed seed() const { return seed_; }

 private:
  LshModel(Matrix projections, Seed seed) : projections_(std::move(projections)), seed_(seed) {}

  Matrix projections_;
  Seed seed_;
};

enum class RoundingMode { deterministic, randomized };

std::string_view to_string(RoundingMode mode);

struct ExactCodes {
  std::vector<Codeword> codes;  // one per input point
  Vector eigenvalues;           // top k, non-increasing
  Matrix embedding;             // n x k top eigenvectors U_k
  RoundingMode mode = RoundingMode::deterministic;
};

struct ExactOptions {
  Index max_points = 5000;
};

/// Exact-D / Exact-R: top-k eigenvectors of the full n x n affinity matrix,
/// signed directly (deterministic) or after a k x k Haar rotation drawn from
/// the seed (randomized).
ExactCodes exact_codes(const PointMatrix& points, Index k, double sigma, RoundingMode mode,
                       Seed seed, const ExactOptions& options = {});

/// Row i of sign(embedding * rotation); pass an empty rotation for none.
std::vector<Codeword> sign_rows(const Matrix& embedding, const Matrix& rotation = Matrix());

/// Haar-distributed k x k orthogonal matrix: QR of a Gaussian matrix with
/// the signs of R's diagonal folded into Q.
Matrix haar_rotation(Index k, Rng& rng);

}  // namespace ssbc

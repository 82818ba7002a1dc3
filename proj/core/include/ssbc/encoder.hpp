#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ssbc/affinity.hpp"
#include "ssbc/codeword.hpp"
#include "ssbc/sketch.hpp"
#include "ssbc/types.hpp"

namespace ssbc {

struct SsbcParams {
  Index k = 30;
  double epsilon = 0.5;

  /// ell = ceil(k + k / epsilon), never below 2.
  Index sketch_rows() const;
  void validate() const;
};

/// sign(<w, basis column j>) for every column, with sign(0) = +1.
Codeword sign_project(PointRef w, const Matrix& basis);

/// Fixes the per-column sign of a basis in place. With a reference of the
/// same shape, column j is negated when it points away from reference
/// column j. Without one, each column is oriented so that its largest
/// magnitude entry (first on ties) is positive.
void orient_basis(Matrix& basis, const Matrix* reference = nullptr);

/// Frozen encoder: training set plus a fixed m x k basis. Immutable, so one
/// instance can be shared by any number of threads.
class CodeProjector {
 public:
  CodeProjector(std::shared_ptr<const TrainSet> train, Matrix basis);

  Codeword encode(PointRef point) const;
  const Matrix& basis() const { return basis_; }
  Index code_length() const { return basis_.cols(); }

 private:
  std::shared_ptr<const TrainSet> train_;
  Matrix basis_;
};

/// Streaming spectral binary coder. Every processed point has its affinity
/// vector against the training set pushed into a Frequent Directions sketch;
/// codes are signs of the affinity vector projected on the top-k right
/// singular vectors of the sketch.
///
/// Single writer: train / process_online / encode_batch mutate the sketch.
class SsbcModel {
 public:
  /// Streams the m training points' own affinity vectors into a fresh
  /// ell x m sketch, in input order. With online_codes, each training point
  /// is also encoded right after its own insert, as process_online would.
  static SsbcModel train(TrainSet train, SsbcParams params,
                         std::vector<Codeword>* online_codes = nullptr);

  /// Online mode: inserts the point's affinity vector, then encodes it with
  /// the updated basis. Consecutive bases are sign-aligned column by column,
  /// so a bit keeps its meaning while the sketch drifts.
  Codeword process_online(PointRef point);

  /// Streaming mode: inserts every point in order, then encodes all of them
  /// with the final basis.
  std::vector<Codeword> encode_batch(const PointMatrix& points);

  /// Encodes with the current basis without inserting anything.
  Codeword encode(PointRef point) const;

  CodeProjector snapshot() const;

  const TrainSet& train_set() const { return *train_; }
  const FdSketch& sketch() const { return sketch_; }
  const SsbcParams& params() const { return params_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  SsbcModel(std::shared_ptr<const TrainSet> train, SsbcParams params);

  Matrix oriented_basis() const;
  const Matrix& advance_basis();

  std::shared_ptr<const TrainSet> train_;
  SsbcParams params_;
  FdSketch sketch_;
  std::vector<std::string> warnings_;
  Matrix basis_;  // last basis handed out, empty before the first
};

}  // namespace ssbc

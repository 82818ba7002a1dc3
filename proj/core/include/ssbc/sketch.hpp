#pragma once

#include <cstdint>
#include <optional>

#include "ssbc/linalg.hpp"
#include "ssbc/types.hpp"

namespace ssbc {

/// Frequent Directions sketch: an ell x m buffer B such that B^T B tracks
/// A^T A for the stream of rows A inserted so far, with
/// 0 <= x^T (A^T A - B^T B) x <= ||A||_F^2 / ell for unit x.
///
/// Rows at index >= next_zero_row() are exactly zero. Zero rows are tracked
/// structurally, never detected numerically, since an inserted row may itself
/// be zero. A shrink fires as soon as an insert leaves no zero row; it
/// replaces B by diag(s') V^T with s'_i = sqrt(max(s_i^2 - s_ell^2, 0)) and
/// reopens every row whose s'_i is exactly zero (at least the last one).
///
/// The shrink's decomposition is computed either by a thin SVD of B or
/// through the eigendecomposition of the ell x ell Gram matrix B B^T (same
/// singular values and vectors, several times faster when ell << m). The
/// Gram route is the default whenever ell <= m.
///
/// Single writer. basis() is const but lazily caches the right singular
/// vectors, so concurrent readers need a snapshot (see SsbcModel::snapshot).
enum class ShrinkMethod { gram_eigen, svd };

class FdSketch {
 public:
  FdSketch(Index ell, Index m, ShrinkMethod method = ShrinkMethod::gram_eigen);

  Index ell() const { return buffer_.rows(); }
  Index dim() const { return buffer_.cols(); }
  Index next_zero_row() const { return next_zero_row_; }
  std::int64_t rows_seen() const { return rows_seen_; }
  std::int64_t shrink_count() const { return shrinks_; }
  // Rows reopened by shrinks beyond the one each shrink always frees; nonzero
  // only when singular values tie with s_ell.
  std::int64_t extra_rows_freed() const { return extra_rows_freed_; }
  const Matrix& buffer() const { return buffer_; }

  /// Appends one row of length m, shrinking if the buffer becomes full.
  void insert(PointRef row);

  /// First k right singular vectors of the buffer as an m x k matrix, columns
  /// ordered by non-increasing singular value.
  Matrix basis(Index k) const;

  /// B^T B, the sketched Gram matrix.
  Matrix gram() const { return buffer_.transpose() * buffer_; }

 private:
  void shrink();
  void shrink_svd();
  void shrink_gram();
  void finish_shrink(Index nonzero);

  Matrix buffer_;
  ShrinkMethod method_;
  Index next_zero_row_ = 0;
  std::int64_t rows_seen_ = 0;
  std::int64_t shrinks_ = 0;
  std::int64_t extra_rows_freed_ = 0;
  // Leading right singular vectors valid for the current buffer, if known.
  // May hold fewer than ell columns.
  mutable std::optional<Matrix> right_vectors_;
};

}  // namespace ssbc

#include "ssbc/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "ssbc/error.hpp"

namespace ssbc {

namespace {

// Right singular vectors recovered as B^T u_i / s_i lose orthogonality like
// eps * (s_1 / s_i)^2; only columns above this relative level are cached.
constexpr double kCacheRelativeFloor = 1e-3;

}  // namespace

FdSketch::FdSketch(Index ell, Index m, ShrinkMethod method) : method_(method) {
  if (ell < 2) throw ParameterError("FdSketch: ell must be >= 2, got " + std::to_string(ell));
  if (m < 1) throw ParameterError("FdSketch: m must be >= 1, got " + std::to_string(m));
  buffer_ = Matrix::Zero(ell, m);
}

void FdSketch::insert(PointRef row) {
  if (row.size() != dim()) detail::throw_dimension("FdSketch::insert", dim(), row.size());
  if (!row.allFinite()) throw DataError("FdSketch::insert: non-finite row");

  buffer_.row(next_zero_row_) = row;
  ++next_zero_row_;
  ++rows_seen_;
  right_vectors_.reset();
  if (next_zero_row_ == ell()) shrink();
}

void FdSketch::shrink() {
  if (method_ == ShrinkMethod::gram_eigen && ell() <= dim())
    shrink_gram();
  else
    shrink_svd();
}

void FdSketch::finish_shrink(Index nonzero) {
  ++shrinks_;
  extra_rows_freed_ += (ell() - 1) - nonzero;
  next_zero_row_ = nonzero;
}

void FdSketch::shrink_svd() {
  SingularTriple svd = svd_thin(buffer_);
  const Index p = svd.v.cols();  // min(ell, m)
  const double floor = svd.s(ell() - 1) * svd.s(ell() - 1);

  buffer_.setZero();
  Index nonzero = 0;
  for (Index i = 0; i < p; ++i) {
    const double shrunk = std::sqrt(std::max(svd.s(i) * svd.s(i) - floor, 0.0));
    if (shrunk == 0.0) break;
    buffer_.row(i) = shrunk * svd.v.col(i).transpose();
    ++nonzero;
  }
  finish_shrink(nonzero);
  // B is now diag(s') V^T, so V is already its right singular basis.
  right_vectors_ = std::move(svd.v);
}

void FdSketch::shrink_gram() {
  const Index ell = this->ell();
  Matrix gram = Matrix::Zero(ell, ell);
  gram.selfadjointView<Eigen::Lower>().rankUpdate(buffer_);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  if (eig.info() != Eigen::Success) throw NumericalError("FdSketch: eigensolver did not converge");

  // Eigen sorts ascending; eigenvalue ell - 1 - i is s_i^2.
  const Vector& lambda = eig.eigenvalues();
  const double floor = std::max(lambda(0), 0.0);
  Index nonzero = 0;
  while (nonzero < ell && lambda(ell - 1 - nonzero) - floor > 0.0) ++nonzero;

  // Row i of the shrunk sketch is s'_i v_i^T = (s'_i / s_i) u_i^T B.
  const Matrix u = eig.eigenvectors().rightCols(nonzero).rowwise().reverse();
  Matrix rows = u.transpose() * buffer_;
  Index cached = 0;
  const double top = nonzero ? std::sqrt(lambda(ell - 1)) : 0.0;
  for (Index i = 0; i < nonzero; ++i) {
    const double s = std::sqrt(lambda(ell - 1 - i));
    rows.row(i) /= s;  // now v_i^T
    if (s >= kCacheRelativeFloor * top && cached == i) ++cached;
  }
  Matrix v = rows.topRows(cached).transpose();
  for (Index i = 0; i < nonzero; ++i) rows.row(i) *= std::sqrt(lambda(ell - 1 - i) - floor);

  buffer_.setZero();
  buffer_.topRows(nonzero) = rows;
  finish_shrink(nonzero);
  if (cached > 0) right_vectors_ = std::move(v);
}

Matrix FdSketch::basis(Index k) const {
  const Index available = std::min(ell(), dim());
  if (k < 1 || k > available)
    throw ParameterError("FdSketch::basis: k must be in [1, " + std::to_string(available) +
                         "], got " + std::to_string(k));
  if ((buffer_.topRows(next_zero_row_).array() == 0.0).all())
    throw NumericalError("FdSketch::basis: sketch is all zero, no basis defined");
  if (!right_vectors_ || right_vectors_->cols() < k) right_vectors_ = svd_thin(buffer_).v;
  return right_vectors_->leftCols(k);
}

}  // namespace ssbc

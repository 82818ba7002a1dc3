#include "ssbc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ssbc/error.hpp"

namespace ssbc {

SingularTriple svd_thin(const Matrix& mat) {
  if (mat.rows() == 0 || mat.cols() == 0) throw ParameterError("svd_thin: empty matrix");
  if (!mat.allFinite()) throw NumericalError("svd_thin: non-finite input");

  Eigen::BDCSVD<Matrix> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericalError("svd_thin: SVD did not converge");

  SingularTriple out;
  out.u = svd.matrixU();
  out.v = svd.matrixV();
  out.s = Vector::Zero(mat.rows());
  out.s.head(svd.singularValues().size()) = svd.singularValues();
  return out;
}

double spectral_norm(const Matrix& mat, const PowerIterationOptions& options) {
  if (mat.size() == 0) return 0.0;
  // Deterministic start with no exact zeros so it is unlikely to be
  // orthogonal to the dominant right singular vector.
  Vector x(mat.cols());
  for (Index i = 0; i < x.size(); ++i) x(i) = 1.0 + 0.5 * std::sin(1.0 + static_cast<double>(i));
  x.normalize();

  double sigma = 0.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    Vector y = mat.transpose() * (mat * x);
    const double lambda = y.norm();  // estimate of sigma_max^2
    if (lambda == 0.0) return 0.0;
    const double next = std::sqrt(lambda);
    x = y / lambda;
    if (it > 0 && std::abs(next - sigma) <= options.relative_tolerance * next) return next;
    sigma = next;
  }
  return sigma;
}

PseudoInverse pseudo_inverse(const Matrix& mat, double rcond) {
  Eigen::BDCSVD<Matrix> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericalError("pseudo_inverse: SVD did not converge");
  const Vector& s = svd.singularValues();
  const double cutoff =
      rcond * static_cast<double>(std::max(mat.rows(), mat.cols())) * (s.size() ? s(0) : 0.0);
  Vector inv = Vector::Zero(s.size());
  PseudoInverse out;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) {
      inv(i) = 1.0 / s(i);
      ++out.rank;
    }
  }
  out.pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
  return out;
}

EigenPairs top_eigenpairs(const Matrix& symmetric, Index k) {
  if (symmetric.rows() != symmetric.cols())
    throw DimensionError("top_eigenpairs: matrix is not square");
  if (k < 1 || k > symmetric.rows())
    throw ParameterError("top_eigenpairs: k must be in [1, n], got " + std::to_string(k));

  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric);
  if (solver.info() != Eigen::Success)
    throw NumericalError("top_eigenpairs: eigensolver did not converge");
  // Eigen returns ascending eigenvalues.
  EigenPairs out;
  out.values = solver.eigenvalues().tail(k).reverse();
  out.vectors = solver.eigenvectors().rightCols(k).rowwise().reverse();
  return out;
}

}  // namespace ssbc

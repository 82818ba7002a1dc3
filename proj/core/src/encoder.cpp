#include "ssbc/encoder.hpp"

#include <cmath>
#include <string>

#include "ssbc/error.hpp"

namespace ssbc {

Index SsbcParams::sketch_rows() const {
  validate();
  const double exact = static_cast<double>(k) + static_cast<double>(k) / epsilon;
  // Absorb rounding such as 8 / 0.025 = 320.00000000000006.
  const auto ell = static_cast<Index>(std::ceil(exact - 1e-9 * exact));
  return std::max<Index>(ell, 2);
}

void SsbcParams::validate() const {
  if (k < 1) throw ParameterError("SsbcParams: k must be >= 1, got " + std::to_string(k));
  if (!(epsilon > 0.0 && epsilon <= 1.0))
    throw ParameterError("SsbcParams: epsilon must be in (0, 1], got " + std::to_string(epsilon));
}

Codeword sign_project(PointRef w, const Matrix& basis) {
  if (w.size() != basis.rows()) detail::throw_dimension("sign_project", basis.rows(), w.size());
  const RowVector projected = w * basis;
  return Codeword::from_values(projected);
}

void orient_basis(Matrix& basis, const Matrix* reference) {
  const bool aligned = reference && reference->rows() == basis.rows() && reference->cols() == basis.cols();
  for (Index j = 0; j < basis.cols(); ++j) {
    bool flip;
    if (aligned) {
      flip = basis.col(j).dot(reference->col(j)) < 0.0;
    } else {
      Index at = 0;
      basis.col(j).cwiseAbs().maxCoeff(&at);
      flip = basis(at, j) < 0.0;
    }
    if (flip) basis.col(j) = -basis.col(j);
  }
}

CodeProjector::CodeProjector(std::shared_ptr<const TrainSet> train, Matrix basis)
    : train_(std::move(train)), basis_(std::move(basis)) {
  if (basis_.rows() != train_->size())
    detail::throw_dimension("CodeProjector", train_->size(), basis_.rows());
}

Codeword CodeProjector::encode(PointRef point) const {
  return sign_project(affinity_vector(point, *train_), basis_);
}

SsbcModel::SsbcModel(std::shared_ptr<const TrainSet> train, SsbcParams params)
    : train_(std::move(train)), params_(params), sketch_(params.sketch_rows(), train_->size()) {}

SsbcModel SsbcModel::train(TrainSet train, SsbcParams params, std::vector<Codeword>* online_codes) {
  params.validate();
  SsbcModel model(std::make_shared<const TrainSet>(std::move(train)), params);
  const Index m = model.train_->size();
  const Index ell = model.sketch_.ell();
  if (ell > m)
    model.warnings_.push_back("sketch rows ell = " + std::to_string(ell) +
                              " exceed training size m = " + std::to_string(m));
  if (params.k > std::min(ell, m))
    throw ParameterError("SsbcModel: k = " + std::to_string(params.k) +
                         " exceeds min(ell, m) = " + std::to_string(std::min(ell, m)));
  const PointMatrix& pts = model.train_->points();
  if (online_codes) online_codes->clear();
  for (Index i = 0; i < m; ++i) {
    const RowVector w = affinity_vector(pts.row(i), *model.train_);
    model.sketch_.insert(w);
    if (online_codes) online_codes->push_back(sign_project(w, model.advance_basis()));
  }
  return model;
}

Codeword SsbcModel::process_online(PointRef point) {
  const RowVector w = affinity_vector(point, *train_);
  sketch_.insert(w);
  return sign_project(w, advance_basis());
}

std::vector<Codeword> SsbcModel::encode_batch(const PointMatrix& points) {
  if (points.rows() == 0) return {};
  if (points.cols() != train_->dim())
    detail::throw_dimension("SsbcModel::encode_batch", train_->dim(), points.cols());
  PointMatrix affinities(points.rows(), train_->size());
  for (Index i = 0; i < points.rows(); ++i) {
    affinities.row(i) = affinity_vector(points.row(i), *train_);
    sketch_.insert(affinities.row(i));
  }
  const Matrix& basis = advance_basis();
  // Row by row through sign_project so a point gets bit-identical codes in
  // either mode whenever the basis matches.
  std::vector<Codeword> codes;
  codes.reserve(static_cast<std::size_t>(points.rows()));
  for (Index i = 0; i < points.rows(); ++i) codes.push_back(sign_project(affinities.row(i), basis));
  return codes;
}

Codeword SsbcModel::encode(PointRef point) const {
  return sign_project(affinity_vector(point, *train_), oriented_basis());
}

CodeProjector SsbcModel::snapshot() const { return CodeProjector(train_, oriented_basis()); }

Matrix SsbcModel::oriented_basis() const {
  Matrix basis = sketch_.basis(params_.k);
  orient_basis(basis, basis_.size() ? &basis_ : nullptr);
  return basis;
}

const Matrix& SsbcModel::advance_basis() {
  basis_ = oriented_basis();
  return basis_;
}

}  // namespace ssbc

#pragma once

#include <cstdint>

#include <Eigen/Core>

namespace ssbc {

using Index = Eigen::Index;

/// Datapoints are stored one per row; row-major keeps each point contiguous.
using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using PointRef = Eigen::Ref<const Eigen::RowVectorXd>;

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

using Seed = std::uint64_t;

}  // namespace ssbc

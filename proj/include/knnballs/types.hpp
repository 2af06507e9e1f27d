#pragma once

#include <Eigen/Core>

namespace knnballs {

// Point clouds are stored one point per row.
using RowMatrixXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace knnballs

#pragma once

#include <Eigen/Dense>

#include "ambiq/constants.hpp"

namespace ambiq {

// Row-major so that the serialized layout (axis1 outer) is also the memory
// layout and FFTs along axis2 run on contiguous data.
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RVector = Eigen::VectorXd;

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace ambiq

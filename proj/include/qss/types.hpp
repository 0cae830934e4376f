#pragma once

#include <Eigen/Dense>

namespace qss {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

}  // namespace qss

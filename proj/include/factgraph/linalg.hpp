#pragma once

#include <Eigen/Dense>

namespace factgraph {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

}  // namespace factgraph

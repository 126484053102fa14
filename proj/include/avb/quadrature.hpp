#pragma once

#include <Eigen/Dense>

namespace avb::quad {

struct Rule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

// Gauss-Legendre rule on [-1, 1]; nodes ascending. Cached per order.
const Rule& gauss_legendre(int n);

// Rule mapped onto [a, b].
Rule gauss_legendre(int n, double a, double b);

}  // namespace avb::quad

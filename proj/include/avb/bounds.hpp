#pragma once

#include <Eigen/Dense>
#include <functional>

#include "avb/common.hpp"

namespace avb::bounds {

// Objective z -> E e^{-rT} <Y-K,mu> 1{<H,mu> > z}, supplied by the caller.
struct LbObjective {
    std::function<double(double)> eval;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// sup_z of the lower-bound objective: 64-point coarse scan over the bracket
// followed by golden-section refinement of the best scan cell. Throws
// FlatObjective when the scan shows variation below 1e-14.
BoundResult maximize_lb(const LbObjective& obj, Interval bracket);

// E[exp(G) 1{W > z}] for jointly Gaussian (G, W):
//   exp(mG + vG/2) * Phi((mW + cGW - z) / sqrt(vW)).
// Throws DegenerateW when vW <= 0.
double gaussian_exp_indicator(double mG, double vG, double mW, double vW, double cGW,
                              double z);

// Upper-bound objective a -> E e^{-rT} <(Y - K + a<H,mu> - aH)^+, mu> evaluated
// over a fixed simulated path set (common random numbers across a), so the
// 1-D search sees a smooth convex function.
class UbObjective {
public:
    // y, h: paths x n matrices of Y_{t_j} and H_{t_j}; w: measure weights.
    UbObjective(Eigen::MatrixXd y, Eigen::MatrixXd h, Eigen::VectorXd w, double strike,
                double discount);

    double eval(double a) const;
    double standardError(double a) const;
    std::int64_t paths() const { return y_.rows(); }

private:
    Eigen::MatrixXd y_;
    Eigen::MatrixXd h_;
    Eigen::VectorXd w_;
    Eigen::VectorXd hAvg_;  // <H,mu> per path
    double strike_;
    double discount_;
};

// inf_a by golden section to width 1e-6. If the minimum lands on a bracket
// edge the bracket is expanded once; a second hit raises BracketTooSmall.
// The returned BoundResult carries the standard error in diag.quadError.
BoundResult minimize_ub(const UbObjective& obj, Interval bracket = {0.0, 3.0});

}  // namespace avb::bounds

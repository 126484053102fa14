#pragma once

#include <cmath>

namespace avb::math {

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kSqrt2Pi = 2.5066282746310002;
inline constexpr double kInvSqrt2Pi = 0.3989422804014327;

// Standard normal CDF via erfc; accurate over the full double range.
inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

inline double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

// Inverse normal CDF: Acklam's rational approximation polished with one
// Halley step against erfc, giving close to full double precision.
double norm_inv(double p);

// Same approximation without the refinement step (max rel error ~1.2e-9).
// Used in the sampling hot path where the bias is far below any MC error.
double norm_inv_fast(double p);

// Black-Scholes call, used all over the tests as a reduction target.
inline double bs_call(double s0, double k, double r, double q, double sigma, double t) {
    if (sigma <= 0.0 || t <= 0.0) {
        double fwd = s0 * std::exp(-q * t) - k * std::exp(-r * t);
        return fwd > 0.0 ? fwd : 0.0;
    }
    double st = sigma * std::sqrt(t);
    double d1 = (std::log(s0 / k) + (r - q + 0.5 * sigma * sigma) * t) / st;
    double d2 = d1 - st;
    return s0 * std::exp(-q * t) * norm_cdf(d1) - k * std::exp(-r * t) * norm_cdf(d2);
}

}  // namespace avb::math

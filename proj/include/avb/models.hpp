#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "avb/common.hpp"

namespace avb::models {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Model specifications
// ---------------------------------------------------------------------------

struct GbmSpec {
    double s0 = 0.0;
    double sigma = 0.0;
    double r = 0.0;
    double q = 0.0;

    GbmSpec() = default;
    GbmSpec(double s0_, double sigma_, double r_, double q_ = 0.0);
};

enum class LevyKind { BM, VG, NIG, Merton };

// Log-price Levy model Z_t = ln(S_t/S_0). The risk-neutral drift is fixed
// at construction so that psi(-i) = r - q holds exactly.
struct LevySpec {
    LevyKind kind = LevyKind::BM;
    double s0 = 0.0;
    double r = 0.0;
    double q = 0.0;
    double drift = 0.0;

    double sigma = 0.0;                                // BM, VG, Merton diffusion
    double nu = 0.0, vgTheta = 0.0;                    // VG
    double nigAlpha = 0.0, nigBeta = 0.0, nigDelta = 0.0;  // NIG
    double lambda = 0.0, jumpMean = 0.0, jumpSd = 0.0; // Merton jumps

    static LevySpec bm(double s0, double sigma, double r, double q = 0.0);
    static LevySpec vg(double s0, double sigma, double nu, double theta, double r,
                       double q = 0.0);
    static LevySpec nig(double s0, double alpha, double beta, double delta, double r,
                        double q = 0.0);
    static LevySpec merton(double s0, double sigma, double lambda, double jumpMean,
                           double jumpSd, double r, double q = 0.0);
};

struct GammaVolumeSpec {
    double alpha = 0.0;  // shape rate per unit time
    double beta = 0.0;   // inverse scale

    GammaVolumeSpec() = default;
    GammaVolumeSpec(double alpha_, double beta_);
};

enum class MeasureKind { Discrete, ContinuousUniform, VolumeWeighted };

// The averaging measure mu on (0, T].
struct AveragingMeasure {
    MeasureKind kind = MeasureKind::Discrete;
    Eigen::VectorXd times;    // Discrete / VolumeWeighted schedule, ascending, last = T
    Eigen::VectorXd weights;  // Discrete only; nonnegative, sums to 1
    double horizon = 0.0;     // T
    GammaVolumeSpec volume;   // VolumeWeighted only

    static AveragingMeasure discrete(Eigen::VectorXd times, Eigen::VectorXd weights);
    // n equally spaced dates iT/n with weights 1/n.
    static AveragingMeasure discreteUniform(int n, double horizon);
    static AveragingMeasure continuousUniform(double horizon);
    static AveragingMeasure volumeWeighted(Eigen::VectorXd times, GammaVolumeSpec volume);

    int size() const { return static_cast<int>(times.size()); }
    const AveragingMeasure& requireDiscrete(const char* where) const;
};

struct BasketSpec {
    Eigen::VectorXd s0;
    Eigen::VectorXd sigma;
    Eigen::VectorXd q;
    Eigen::MatrixXd rho;
    std::vector<int> longIdx;
    std::vector<int> shortIdx;
    double r = 0.0;
    double strike = 0.0;
    double horizon = 0.0;

    int size() const { return static_cast<int>(s0.size()); }
    void validate() const;  // throws SpecError on any violated invariant
};

// Cholesky factor of a correlation matrix; pivots below -1e-10 are rejected,
// pivots in [-1e-10, 0] are treated as zero (boundary PSD).
Eigen::MatrixXd psd_factor(const Eigen::MatrixXd& rho);

// ---------------------------------------------------------------------------
// Characteristic exponents and the joint characteristic function
// ---------------------------------------------------------------------------

// True iff Im(theta) = v lies inside the model's strip of analyticity.
bool strip_contains(const LevySpec& m, double v);

// Risk-neutral drift: the unique constant with psi(-i) = r - q.
// Throws NonIntegrable when E exp(Z_1) diverges.
double martingale_drift(const LevySpec& m);

// psi(theta) with E exp(i theta Z_1) = exp(psi(theta)), drift included.
// Throws StripViolation when Im(theta) leaves the strip.
Complex char_exponent(const LevySpec& m, Complex theta);

// Joint characteristic function phi(xi, zeta; t_m) of (Z_{t_m}, <Z,mu>) for a
// discrete measure, via the factorization over independent increments:
//   phi = prod_k exp(dt_k * psi(xi*1{k<=m} + zeta*W_k)),   W_k = sum_{j>=k} w_j.
// m is 1-based; m = 0 drops the Z_{t_m} component.
Complex joint_cf(const LevySpec& m, const AveragingMeasure& mu, Complex xi, Complex zeta,
                 int mIdx);

// phi(xi, zeta; t_m) for every m = 1..N in one pass.
Eigen::VectorXcd joint_cf_all(const LevySpec& m, const AveragingMeasure& mu, Complex xi,
                              Complex zeta);

// Continuous-uniform measure approximated as an n-point discrete one.
AveragingMeasure cmo_discretize(const AveragingMeasure& mu, int nQuad = 512);

// First/second cumulant of Z_1 per unit time (drift included).
double cumulant1(const LevySpec& m);
double cumulant2(const LevySpec& m);

// Moments of the Brownian proxy W = sum_j w_j B_{t_j} and of <Z,mu>:
//   proxy_covariances()[j] = Cov(B_{t_j}, W),  proxy_variance() = Var(W).
Eigen::VectorXd proxy_covariances(const AveragingMeasure& mu);
double proxy_variance(const AveragingMeasure& mu);
double avg_mean(const LevySpec& m, const AveragingMeasure& mu);   // E <Z,mu>
double avg_variance(const LevySpec& m, const AveragingMeasure& mu);

}  // namespace avb::models

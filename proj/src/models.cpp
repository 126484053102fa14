#include "avb/models.hpp"

#include <cmath>
#include <sstream>

namespace avb::models {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool ok, const char* msg) {
    if (!ok) throw SpecError(msg);
}

// Driftless exponent psi0; strip membership must hold for Im(theta).
Complex psi0(const LevySpec& m, Complex theta) {
    switch (m.kind) {
        case LevyKind::BM:
            return -0.5 * m.sigma * m.sigma * theta * theta;
        case LevyKind::VG: {
            Complex arg = 1.0 - kI * theta * m.vgTheta * m.nu +
                          0.5 * m.sigma * m.sigma * m.nu * theta * theta;
            return -std::log(arg) / m.nu;
        }
        case LevyKind::NIG: {
            double gamma = std::sqrt(m.nigAlpha * m.nigAlpha - m.nigBeta * m.nigBeta);
            Complex b = m.nigBeta + kI * theta;
            return -m.nigDelta * (std::sqrt(m.nigAlpha * m.nigAlpha - b * b) - gamma);
        }
        case LevyKind::Merton: {
            Complex diff = -0.5 * m.sigma * m.sigma * theta * theta;
            Complex jump = std::exp(kI * theta * m.jumpMean -
                                    0.5 * m.jumpSd * m.jumpSd * theta * theta) -
                           1.0;
            return diff + m.lambda * jump;
        }
    }
    return {};
}

double psi0_at_minus_i(const LevySpec& m) {
    switch (m.kind) {
        case LevyKind::BM:
            return 0.5 * m.sigma * m.sigma;
        case LevyKind::VG: {
            double arg = 1.0 - m.vgTheta * m.nu - 0.5 * m.sigma * m.sigma * m.nu;
            if (arg <= 0.0) throw NonIntegrable("VG: E exp(Z_1) diverges for these parameters");
            return -std::log(arg) / m.nu;
        }
        case LevyKind::NIG: {
            if (m.nigAlpha <= std::abs(m.nigBeta + 1.0))
                throw NonIntegrable("NIG: E exp(Z_1) diverges, need alpha > |beta + 1|");
            double gamma = std::sqrt(m.nigAlpha * m.nigAlpha - m.nigBeta * m.nigBeta);
            double b = m.nigBeta + 1.0;
            return -m.nigDelta * (std::sqrt(m.nigAlpha * m.nigAlpha - b * b) - gamma);
        }
        case LevyKind::Merton:
            return 0.5 * m.sigma * m.sigma +
                   m.lambda * (std::exp(m.jumpMean + 0.5 * m.jumpSd * m.jumpSd) - 1.0);
    }
    return 0.0;
}

}  // namespace

GbmSpec::GbmSpec(double s0_, double sigma_, double r_, double q_)
    : s0(s0_), sigma(sigma_), r(r_), q(q_) {
    require(s0 > 0.0, "GbmSpec: s0 must be > 0");
    require(sigma > 0.0, "GbmSpec: sigma must be > 0");
    require(q >= 0.0, "GbmSpec: q must be >= 0");
}

GammaVolumeSpec::GammaVolumeSpec(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    require(alpha > 0.0, "GammaVolumeSpec: alpha must be > 0");
    require(beta > 0.0, "GammaVolumeSpec: beta must be > 0");
}

LevySpec LevySpec::bm(double s0, double sigma, double r, double q) {
    require(s0 > 0.0, "LevySpec: s0 must be > 0");
    require(sigma > 0.0, "LevySpec(BM): sigma must be > 0");
    LevySpec m;
    m.kind = LevyKind::BM;
    m.s0 = s0;
    m.sigma = sigma;
    m.r = r;
    m.q = q;
    m.drift = martingale_drift(m);
    return m;
}

LevySpec LevySpec::vg(double s0, double sigma, double nu, double theta, double r, double q) {
    require(s0 > 0.0, "LevySpec: s0 must be > 0");
    require(sigma > 0.0, "LevySpec(VG): sigma must be > 0");
    require(nu > 0.0, "LevySpec(VG): nu must be > 0");
    LevySpec m;
    m.kind = LevyKind::VG;
    m.s0 = s0;
    m.sigma = sigma;
    m.nu = nu;
    m.vgTheta = theta;
    m.r = r;
    m.q = q;
    m.drift = martingale_drift(m);
    return m;
}

LevySpec LevySpec::nig(double s0, double alpha, double beta, double delta, double r, double q) {
    require(s0 > 0.0, "LevySpec: s0 must be > 0");
    require(alpha > std::abs(beta), "LevySpec(NIG): need alpha > |beta|");
    require(delta > 0.0, "LevySpec(NIG): delta must be > 0");
    LevySpec m;
    m.kind = LevyKind::NIG;
    m.s0 = s0;
    m.nigAlpha = alpha;
    m.nigBeta = beta;
    m.nigDelta = delta;
    m.r = r;
    m.q = q;
    m.drift = martingale_drift(m);
    return m;
}

LevySpec LevySpec::merton(double s0, double sigma, double lambda, double jumpMean,
                          double jumpSd, double r, double q) {
    require(s0 > 0.0, "LevySpec: s0 must be > 0");
    require(sigma >= 0.0, "LevySpec(Merton): sigma must be >= 0");
    require(lambda >= 0.0, "LevySpec(Merton): lambda must be >= 0");
    require(jumpSd >= 0.0, "LevySpec(Merton): jump sd must be >= 0");
    LevySpec m;
    m.kind = LevyKind::Merton;
    m.s0 = s0;
    m.sigma = sigma;
    m.lambda = lambda;
    m.jumpMean = jumpMean;
    m.jumpSd = jumpSd;
    m.r = r;
    m.q = q;
    m.drift = martingale_drift(m);
    return m;
}

AveragingMeasure AveragingMeasure::discrete(Eigen::VectorXd times, Eigen::VectorXd weights) {
    require(times.size() > 0, "AveragingMeasure: empty schedule");
    require(times.size() == weights.size(), "AveragingMeasure: times/weights size mismatch");
    require(times[0] > 0.0, "AveragingMeasure: times must lie in (0, T]");
    for (int i = 1; i < times.size(); ++i)
        require(times[i] > times[i - 1], "AveragingMeasure: times must be strictly ascending");
    require(weights.minCoeff() >= 0.0, "AveragingMeasure: weights must be nonnegative");
    require(std::abs(weights.sum() - 1.0) <= 1e-12, "AveragingMeasure: weights must sum to 1");
    AveragingMeasure mu;
    mu.kind = MeasureKind::Discrete;
    mu.horizon = times[times.size() - 1];
    mu.times = std::move(times);
    mu.weights = std::move(weights);
    return mu;
}

AveragingMeasure AveragingMeasure::discreteUniform(int n, double horizon) {
    require(n >= 1, "AveragingMeasure: need n >= 1");
    require(horizon > 0.0, "AveragingMeasure: horizon must be > 0");
    Eigen::VectorXd t(n), w(n);
    for (int i = 0; i < n; ++i) {
        t[i] = horizon * static_cast<double>(i + 1) / n;
        w[i] = 1.0 / n;
    }
    t[n - 1] = horizon;
    return discrete(std::move(t), std::move(w));
}

AveragingMeasure AveragingMeasure::continuousUniform(double horizon) {
    require(horizon > 0.0, "AveragingMeasure: horizon must be > 0");
    AveragingMeasure mu;
    mu.kind = MeasureKind::ContinuousUniform;
    mu.horizon = horizon;
    return mu;
}

AveragingMeasure AveragingMeasure::volumeWeighted(Eigen::VectorXd times, GammaVolumeSpec volume) {
    require(times.size() > 0, "AveragingMeasure: empty schedule");
    require(times[0] > 0.0, "AveragingMeasure: times must lie in (0, T]");
    for (int i = 1; i < times.size(); ++i)
        require(times[i] > times[i - 1], "AveragingMeasure: times must be strictly ascending");
    require(volume.alpha > 0.0 && volume.beta > 0.0, "AveragingMeasure: invalid volume spec");
    AveragingMeasure mu;
    mu.kind = MeasureKind::VolumeWeighted;
    mu.horizon = times[times.size() - 1];
    mu.times = std::move(times);
    mu.volume = volume;
    return mu;
}

const AveragingMeasure& AveragingMeasure::requireDiscrete(const char* where) const {
    if (kind != MeasureKind::Discrete) {
        std::ostringstream os;
        os << where << ": requires a discrete averaging measure";
        throw SpecError(os.str());
    }
    return *this;
}

void BasketSpec::validate() const {
    const int n = size();
    require(n > 0, "BasketSpec: no assets");
    require(sigma.size() == n && q.size() == n, "BasketSpec: parameter vector size mismatch");
    require(rho.rows() == n && rho.cols() == n, "BasketSpec: rho must be n x n");
    require(!longIdx.empty(), "BasketSpec: long leg must be nonempty");
    require(horizon > 0.0, "BasketSpec: horizon must be > 0");
    require(strike >= 0.0, "BasketSpec: strike must be >= 0");
    require(s0.minCoeff() > 0.0, "BasketSpec: s0 must be > 0");
    require(sigma.minCoeff() >= 0.0, "BasketSpec: sigma must be >= 0");
    require(q.minCoeff() >= 0.0, "BasketSpec: q must be >= 0");

    std::vector<int> seen(n, 0);
    for (int i : longIdx) {
        require(i >= 0 && i < n, "BasketSpec: long index out of range");
        seen[i] += 1;
    }
    for (int i : shortIdx) {
        require(i >= 0 && i < n, "BasketSpec: short index out of range");
        seen[i] += 1;
    }
    for (int i = 0; i < n; ++i)
        require(seen[i] == 1, "BasketSpec: long/short must partition the assets");

    for (int i = 0; i < n; ++i) {
        require(std::abs(rho(i, i) - 1.0) <= 1e-12, "BasketSpec: rho diagonal must be 1");
        for (int j = 0; j < i; ++j)
            require(std::abs(rho(i, j) - rho(j, i)) <= 1e-12, "BasketSpec: rho must be symmetric");
    }
    psd_factor(rho);  // throws if not PSD
}

Eigen::MatrixXd psd_factor(const Eigen::MatrixXd& rho) {
    const int n = static_cast<int>(rho.rows());
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        double pivot = rho(j, j) - L.row(j).head(j).squaredNorm();
        if (pivot < -1e-10)
            throw SpecError("correlation matrix is not positive semidefinite");
        pivot = pivot > 0.0 ? std::sqrt(pivot) : 0.0;
        L(j, j) = pivot;
        for (int i = j + 1; i < n; ++i) {
            double v = rho(i, j) - L.row(i).head(j).dot(L.row(j).head(j));
            L(i, j) = pivot > 0.0 ? v / pivot : 0.0;
        }
    }
    return L;
}

bool strip_contains(const LevySpec& m, double v) {
    switch (m.kind) {
        case LevyKind::BM:
        case LevyKind::Merton:
            return true;
        case LevyKind::VG:
            return 1.0 + m.nu * m.vgTheta * v - 0.5 * m.sigma * m.sigma * m.nu * v * v > 0.0;
        case LevyKind::NIG:
            return std::abs(m.nigBeta - v) < m.nigAlpha;
    }
    return false;
}

double martingale_drift(const LevySpec& m) { return m.r - m.q - psi0_at_minus_i(m); }

Complex char_exponent(const LevySpec& m, Complex theta) {
    if (!strip_contains(m, theta.imag())) {
        std::ostringstream os;
        os << "char_exponent: Im(theta) = " << theta.imag() << " outside the analyticity strip";
        throw StripViolation(os.str());
    }
    return kI * theta * m.drift + psi0(m, theta);
}

Eigen::VectorXcd joint_cf_all(const LevySpec& m, const AveragingMeasure& mu, Complex xi,
                              Complex zeta) {
    mu.requireDiscrete("joint_cf");
    const int n = mu.size();
    // Suffix weight sums W_k and increment lengths dt_k.
    Eigen::VectorXd suffix(n);
    double acc = 0.0;
    for (int k = n - 1; k >= 0; --k) {
        acc += mu.weights[k];
        suffix[k] = acc;
    }
    // A_m = sum_{k<=m} dt_k psi(xi + zeta W_k), B_m = sum_{k>m} dt_k psi(zeta W_k).
    Eigen::VectorXcd withXi(n), noXi(n);
    double prev = 0.0;
    for (int k = 0; k < n; ++k) {
        const double dt = mu.times[k] - prev;
        prev = mu.times[k];
        withXi[k] = dt * char_exponent(m, xi + zeta * suffix[k]);
        noXi[k] = dt * char_exponent(m, zeta * suffix[k]);
    }
    Eigen::VectorXcd out(n);
    Complex tailSum = noXi.sum();
    Complex head = 0.0;
    for (int k = 0; k < n; ++k) {
        head += withXi[k];
        tailSum -= noXi[k];
        out[k] = std::exp(head + tailSum);
    }
    return out;
}

Complex joint_cf(const LevySpec& m, const AveragingMeasure& mu, Complex xi, Complex zeta,
                 int mIdx) {
    mu.requireDiscrete("joint_cf");
    const int n = mu.size();
    if (mIdx < 0 || mIdx > n) throw SpecError("joint_cf: index out of range");
    if (mIdx == 0)  // only the <Z,mu> component remains
        return joint_cf_all(m, mu, Complex{0.0, 0.0}, zeta)[n - 1];
    return joint_cf_all(m, mu, xi, zeta)[mIdx - 1];
}

AveragingMeasure cmo_discretize(const AveragingMeasure& mu, int nQuad) {
    if (mu.kind != MeasureKind::ContinuousUniform)
        throw SpecError("cmo_discretize: measure must be continuous-uniform");
    if (nQuad < 2) throw SpecError("cmo_discretize: need nQuad >= 2");
    return AveragingMeasure::discreteUniform(nQuad, mu.horizon);
}

double cumulant1(const LevySpec& m) {
    switch (m.kind) {
        case LevyKind::BM:
            return m.drift;
        case LevyKind::VG:
            return m.drift + m.vgTheta;
        case LevyKind::NIG: {
            double gamma = std::sqrt(m.nigAlpha * m.nigAlpha - m.nigBeta * m.nigBeta);
            return m.drift + m.nigDelta * m.nigBeta / gamma;
        }
        case LevyKind::Merton:
            return m.drift + m.lambda * m.jumpMean;
    }
    return 0.0;
}

double cumulant2(const LevySpec& m) {
    switch (m.kind) {
        case LevyKind::BM:
            return m.sigma * m.sigma;
        case LevyKind::VG:
            return m.sigma * m.sigma + m.nu * m.vgTheta * m.vgTheta;
        case LevyKind::NIG: {
            double gamma = std::sqrt(m.nigAlpha * m.nigAlpha - m.nigBeta * m.nigBeta);
            return m.nigDelta * m.nigAlpha * m.nigAlpha / (gamma * gamma * gamma);
        }
        case LevyKind::Merton:
            return m.sigma * m.sigma +
                   m.lambda * (m.jumpMean * m.jumpMean + m.jumpSd * m.jumpSd);
    }
    return 0.0;
}

Eigen::VectorXd proxy_covariances(const AveragingMeasure& mu) {
    mu.requireDiscrete("proxy_covariances");
    const int n = mu.size();
    Eigen::VectorXd suffix(n);
    double acc = 0.0;
    for (int k = n - 1; k >= 0; --k) {
        acc += mu.weights[k];
        suffix[k] = acc;
    }
    Eigen::VectorXd cov(n);
    double prev = 0.0, run = 0.0;
    for (int k = 0; k < n; ++k) {
        run += suffix[k] * (mu.times[k] - prev);
        prev = mu.times[k];
        cov[k] = run;  // Cov(B_{t_k}, W) = sum_{j<=k} W_j dt_j
    }
    return cov;
}

double proxy_variance(const AveragingMeasure& mu) {
    mu.requireDiscrete("proxy_variance");
    const int n = mu.size();
    Eigen::VectorXd suffix(n);
    double acc = 0.0;
    for (int k = n - 1; k >= 0; --k) {
        acc += mu.weights[k];
        suffix[k] = acc;
    }
    double var = 0.0, prev = 0.0;
    for (int k = 0; k < n; ++k) {
        var += suffix[k] * suffix[k] * (mu.times[k] - prev);
        prev = mu.times[k];
    }
    return var;
}

double avg_mean(const LevySpec& m, const AveragingMeasure& mu) {
    mu.requireDiscrete("avg_mean");
    return cumulant1(m) * mu.weights.dot(mu.times);
}

double avg_variance(const LevySpec& m, const AveragingMeasure& mu) {
    return cumulant2(m) * proxy_variance(mu);
}

}  // namespace avb::models

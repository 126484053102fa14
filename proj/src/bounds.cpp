#include "avb/bounds.hpp"

#include <cmath>

#include "avb/math.hpp"

namespace avb::bounds {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Golden-section maximum of f on [a, b], assumed unimodal there.
std::pair<double, double> golden_max(const std::function<double(double)>& f, double a,
                                     double b, double xtol, int* iters) {
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    int n = 0;
    while (b - a > xtol && n < 200) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
        ++n;
    }
    if (iters) *iters += n;
    double x = 0.5 * (a + b);
    return {x, f(x)};
}

}  // namespace

BoundResult maximize_lb(const LbObjective& obj, Interval bracket) {
    if (!(bracket.hi > bracket.lo)) throw SpecError("maximize_lb: empty bracket");
    const int kScan = 64;
    const double width = bracket.hi - bracket.lo;

    Eigen::VectorXd zs(kScan), fs(kScan);
    for (int i = 0; i < kScan; ++i) {
        zs[i] = bracket.lo + width * i / (kScan - 1);
        fs[i] = obj.eval(zs[i]);
    }
    int best = 0;
    fs.maxCoeff(&best);
    if (fs.maxCoeff() - fs.minCoeff() < 1e-14)
        throw FlatObjective("maximize_lb: objective is flat over the bracket");

    const double lo = zs[std::max(0, best - 1)];
    const double hi = zs[std::min(kScan - 1, best + 1)];
    int iters = kScan;
    auto [z, fz] = golden_max(obj.eval, lo, hi, 1e-8 * width, &iters);

    BoundResult res;
    if (fz >= fs[best]) {
        res.value = fz;
        res.optimizer = z;
    } else {  // refinement may not beat the scan on non-unimodal shapes
        res.value = fs[best];
        res.optimizer = zs[best];
    }
    res.diag.iterations = iters;
    res.diag.bracketLo = bracket.lo;
    res.diag.bracketHi = bracket.hi;
    return res;
}

double gaussian_exp_indicator(double mG, double vG, double mW, double vW, double cGW,
                              double z) {
    if (vW <= 0.0) throw DegenerateW("gaussian_exp_indicator: Var(W) must be > 0");
    if (vG < 0.0) throw SpecError("gaussian_exp_indicator: Var(G) must be >= 0");
    if (cGW * cGW > vG * vW * (1.0 + 1e-12))
        throw SpecError("gaussian_exp_indicator: covariance exceeds Cauchy-Schwarz bound");
    return std::exp(mG + 0.5 * vG) * math::norm_cdf((mW + cGW - z) / std::sqrt(vW));
}

UbObjective::UbObjective(Eigen::MatrixXd y, Eigen::MatrixXd h, Eigen::VectorXd w,
                         double strike, double discount)
    : y_(std::move(y)), h_(std::move(h)), w_(std::move(w)), strike_(strike),
      discount_(discount) {
    if (y_.rows() != h_.rows() || y_.cols() != h_.cols() || y_.cols() != w_.size())
        throw SpecError("UbObjective: shape mismatch");
    hAvg_ = h_ * w_;
}

double UbObjective::eval(double a) const {
    const auto n = y_.rows();
    double sum = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
        double v = 0.0;
        const double ha = a * hAvg_[p];
        for (Eigen::Index j = 0; j < y_.cols(); ++j) {
            double term = y_(p, j) - strike_ + ha - a * h_(p, j);
            if (term > 0.0) v += w_[j] * term;
        }
        sum += v;
    }
    return discount_ * sum / static_cast<double>(n);
}

double UbObjective::standardError(double a) const {
    const auto n = y_.rows();
    double sum = 0.0, sum2 = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
        double v = 0.0;
        const double ha = a * hAvg_[p];
        for (Eigen::Index j = 0; j < y_.cols(); ++j) {
            double term = y_(p, j) - strike_ + ha - a * h_(p, j);
            if (term > 0.0) v += w_[j] * term;
        }
        v *= discount_;
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = sum2 / static_cast<double>(n) - mean * mean;
    return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
}

BoundResult minimize_ub(const UbObjective& obj, Interval bracket) {
    if (!(bracket.hi > bracket.lo)) throw SpecError("minimize_ub: empty bracket");
    auto neg = [&](double a) { return -obj.eval(a); };

    int iters = 0;
    bool expanded = false;
    for (;;) {
        auto [a, negF] = golden_max(neg, bracket.lo, bracket.hi, 1e-6, &iters);
        const double width = bracket.hi - bracket.lo;
        const bool atEdge = (a - bracket.lo < 1e-3 * width) || (bracket.hi - a < 1e-3 * width);
        if (!atEdge) {
            BoundResult res;
            res.value = -negF;
            res.optimizer = a;
            res.diag.iterations = iters;
            res.diag.quadError = obj.standardError(a);
            res.diag.bracketLo = bracket.lo;
            res.diag.bracketHi = bracket.hi;
            return res;
        }
        if (expanded)
            throw BracketTooSmall("minimize_ub: minimum at bracket edge after expansion");
        expanded = true;
        const double mid = 0.5 * (bracket.lo + bracket.hi);
        bracket = {mid - width, mid + width};  // double the width both ways
    }
}

}  // namespace avb::bounds

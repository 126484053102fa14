#include "avb/rng.hpp"

#include <cmath>

namespace avb::rng {

double Stream::gamma(double shape, double rate) {
    double boost = 1.0;
    if (shape < 1.0) {
        boost = std::pow(uniform(), 1.0 / shape);
        shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return boost * d * v / rate;  // squeeze
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return boost * d * v / rate;
    }
}

double Stream::inverse_gaussian(double mu, double lambda) {
    const double n = normal();
    const double y = n * n;
    const double x = mu + 0.5 * mu * mu * y / lambda -
                     0.5 * mu / lambda * std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
    if (uniform() <= mu / (mu + x)) return x;
    return mu * mu / x;
}

std::int64_t Stream::poisson(double mean) {
    if (mean <= 0.0) return 0;
    double p = std::exp(-mean);
    double cdf = p;
    const double u = uniform();
    std::int64_t k = 0;
    while (u > cdf) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
        if (k > 1000000) break;  // cdf saturated numerically
    }
    return k;
}

}  // namespace avb::rng

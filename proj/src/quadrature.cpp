#include "avb/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace avb::quad {

namespace {

// Newton iteration on the Legendre polynomial, symmetric pairs filled in.
Rule build(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        r.nodes[i] = -z;
        r.nodes[n - 1 - i] = z;
        r.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.weights[n - 1 - i] = r.weights[i];
    }
    return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, Rule> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build(n)).first;
    return it->second;
}

Rule gauss_legendre(int n, double a, double b) {
    const Rule& base = gauss_legendre(n);
    Rule r;
    r.nodes = 0.5 * (b - a) * base.nodes.array() + 0.5 * (a + b);
    r.weights = 0.5 * (b - a) * base.weights;
    return r;
}

}  // namespace avb::quad

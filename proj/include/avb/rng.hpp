#pragma once

#include <cstdint>
#include <random>

#include "avb/math.hpp"

namespace avb::rng {

// splitmix64 mix, used to derive independent per-chunk seeds from
// (seed, chunk index) so that a fixed chunk layout fully determines
// every stream regardless of how chunks are assigned to workers.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    return mix(mix(seed) ^ mix(chunk + 0x51ed2701a9b3c1e5ULL));
}

// Deterministic sampling stream. All distributions are hand-rolled on top
// of raw mt19937_64 output so results do not depend on the standard
// library's implementation-defined distributions.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : eng_(seed) {}

    // Uniform on (0, 1); never returns 0 or 1.
    double uniform() {
        // 53-bit mantissa, shifted into (0,1) by half an ulp.
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() { return math::norm_inv_fast(uniform()); }

    // Gamma(shape a, rate b) via Marsaglia-Tsang squeeze/accept; shapes
    // below 1 are boosted with the U^{1/a} identity, which is exact and
    // keeps the sampler valid for the tiny shapes a = alpha*dt that show
    // up on fine volume schedules.
    double gamma(double shape, double rate);

    // Inverse Gaussian(mu, lambda) via the Michael-Schucany-Haas transform.
    double inverse_gaussian(double mu, double lambda);

    // Poisson by CDF inversion (exact, deterministic draw count per value).
    std::int64_t poisson(double mean);

private:
    std::mt19937_64 eng_;
};

}  // namespace avb::rng

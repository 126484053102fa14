#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace avb {

// Numerical failures. The CLI maps these to exit code 3; anything thrown
// by scenario validation (SpecError) maps to exit code 2.
struct PricingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StripViolation : PricingError { using PricingError::PricingError; };
struct NonIntegrable : PricingError { using PricingError::PricingError; };
struct FlatObjective : PricingError { using PricingError::PricingError; };
struct BracketTooSmall : PricingError { using PricingError::PricingError; };
struct DegenerateW : PricingError { using PricingError::PricingError; };
struct SlowDecay : PricingError { using PricingError::PricingError; };
struct NoRoot : PricingError { using PricingError::PricingError; };
struct CholeskyFailure : PricingError { using PricingError::PricingError; };
struct EmptyLongLeg : PricingError { using PricingError::PricingError; };
struct DegenerateVolume : PricingError { using PricingError::PricingError; };

// Input/validation failure (bad scenario file, bad parameters).
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Diagnostics {
    int iterations = 0;
    double quadError = 0.0;   // quadrature / refinement error estimate
    double bracketLo = 0.0;
    double bracketHi = 0.0;
};

// A priced one-sided bound: value plus the optimizer location (z or a).
struct BoundResult {
    double value = 0.0;
    double optimizer = 0.0;
    Diagnostics diag;
};

struct ChunkLayout {
    std::int64_t chunkSize = 0;
    std::int64_t nChunks = 0;
};

// Monte Carlo estimate; se = sample std / sqrt(paths).
struct MCEstimate {
    double mean = 0.0;
    double se = 0.0;
    std::int64_t paths = 0;
    std::uint64_t seed = 0;
    ChunkLayout layout;
    std::int64_t degenerateRedraws = 0;  // paths regenerated (zero total volume)
};

}  // namespace avb

#pragma once

// Capacity formulas and rate-detection regions. Rates are in bits per use,
// detection exponents in nats per use.

#include <string>
#include <vector>

#include "blbc/classical.hpp"
#include "blbc/types.hpp"

namespace blbc {

/// Gordon function (x+1) log2(x+1) - x log2 x, g(0) = 0.
double gordon_g(double x);

struct QuantumRegion {
    RateDetectionRegion region;
    cplx k{};
    cplx k_prime{};  // minimizing pair, lexicographic tie-break
};

/// R = g(nu E); D = (E/2) min |k - k'|^2 (paper) or E min |k - k'|^2 (overlap).
QuantumRegion quantum_region(const ChannelFamily& family, ExponentConvention conv = ExponentConvention::paper);

struct ComparisonMetrics {
    double detection_ratio;  // classical D / quantum (paper) D
    double capacity_ratio;   // 1/2 log2(1 + nu E) / g(nu E)
};

ComparisonMetrics comparison_metrics(const ChannelFamily& family, const HomodyneModel& model);

struct FrontierPoint {
    RegionKind kind;
    std::string series;  // "corner" or "timesharing"
    double rate_bits;
    double exponent_nats;
};

/// Rectangle corners plus `points` samples along the time-sharing segment
/// from (R, 0) to (0, D).
std::vector<FrontierPoint> frontier_samples(const std::vector<RateDetectionRegion>& regions, int points);

}  // namespace blbc

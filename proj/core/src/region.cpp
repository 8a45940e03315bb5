#include "blbc/region.hpp"

#include <cmath>
#include <numbers>

#include "blbc/chernoff.hpp"

namespace blbc {

double gordon_g(double x)
{
    require(std::isfinite(x) && x >= 0.0, "gordon_g: argument must be finite and >= 0");
    if (x == 0.0)
        return 0.0;
    // log2(1 + x) + x log2(1 + 1/x) avoids cancelling two large terms.
    return (std::log1p(x) + x * std::log1p(1.0 / x)) / std::numbers::ln2;
}

QuantumRegion quantum_region(const ChannelFamily& family, ExponentConvention conv)
{
    const auto seq = sequence_exponent(TypeDistribution::point_mass(Amplitude(std::sqrt(family.energy()))),
                                       family.reflectivities(), conv);
    QuantumRegion out;
    out.region.rate_bits = gordon_g(family.transmissivity() * family.energy());
    // E (or E/2) times the minimal squared gap, taken directly rather than via sqrt(E)^2.
    double gap = std::norm(seq.k - seq.k_prime);
    out.region.exponent_nats = conv == ExponentConvention::paper ? family.energy() / 2.0 * gap : family.energy() * gap;
    out.region.kind = conv == ExponentConvention::paper ? RegionKind::quantum_paper : RegionKind::quantum_overlap;
    out.k = seq.k;
    out.k_prime = seq.k_prime;
    return out;
}

ComparisonMetrics comparison_metrics(const ChannelFamily& family, const HomodyneModel& model)
{
    require(family.energy() > 0.0, "comparison_metrics: energy must be > 0");
    require(family.transmissivity() > 0.0, "comparison_metrics: transmissivity must be > 0");
    const auto quantum = quantum_region(family, ExponentConvention::paper).region;
    const auto classical = classical_region(family, model, false);
    const double x = family.transmissivity() * family.energy();
    return {classical.exponent_nats / quantum.exponent_nats, 0.5 * std::log2(1.0 + x) / gordon_g(x)};
}

std::vector<FrontierPoint> frontier_samples(const std::vector<RateDetectionRegion>& regions, int points)
{
    require(points >= 2, "frontier_samples: need at least 2 points");
    std::vector<FrontierPoint> out;
    for (const auto& r : regions) {
        out.push_back({r.kind, "corner", 0.0, 0.0});
        out.push_back({r.kind, "corner", r.rate_bits, 0.0});
        out.push_back({r.kind, "corner", r.rate_bits, r.exponent_nats});
        out.push_back({r.kind, "corner", 0.0, r.exponent_nats});
        for (int i = 0; i < points; ++i) {
            const double t = static_cast<double>(i) / (points - 1);
            // Endpoints are assigned exactly.
            const double rate = i == points - 1 ? 0.0 : (1.0 - t) * r.rate_bits;
            const double exponent = i == points - 1 ? r.exponent_nats : t * r.exponent_nats;
            out.push_back({r.kind, "timesharing", rate, exponent});
        }
    }
    return out;
}

}  // namespace blbc

#include "blbc/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace blbc {

std::string_view to_string(ExponentConvention c)
{
    return c == ExponentConvention::paper ? "paper" : "overlap";
}

ExponentConvention parse_convention(std::string_view text)
{
    if (text == "paper")
        return ExponentConvention::paper;
    if (text == "overlap")
        return ExponentConvention::overlap;
    throw ValidationError("unknown exponent convention '" + std::string(text) + "' (expected paper|overlap)");
}

TypeDistribution::TypeDistribution(std::vector<Amplitude> support, std::vector<double> weights)
    : support_(std::move(support)), weights_(std::move(weights))
{
    require(!support_.empty(), "TypeDistribution: empty support");
    require(support_.size() == weights_.size(), "TypeDistribution: support and weights differ in length");
    for (double w : weights_)
        require(std::isfinite(w) && w >= 0.0, "TypeDistribution: weights must be finite and non-negative");
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    require(std::abs(total - 1.0) <= 1e-12, "TypeDistribution: weights must sum to 1");
    std::set<std::pair<double, double>> seen;
    for (const auto& a : support_)
        require(seen.emplace(a.re(), a.im()).second, "TypeDistribution: support points must be distinct");
}

double TypeDistribution::mean_energy() const
{
    double sum = 0.0;
    for (std::size_t i = 0; i < support_.size(); ++i)
        sum += weights_[i] * support_[i].energy();
    return sum;
}

std::vector<cplx> deduplicate(const std::vector<cplx>& values)
{
    std::vector<cplx> out;
    for (const auto& v : values)
        if (std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
    return out;
}

ChannelFamily::ChannelFamily(double transmissivity, std::vector<cplx> reflectivities, double energy)
    : nu_(transmissivity), k_(deduplicate(reflectivities)), energy_(energy)
{
    require(std::isfinite(nu_) && nu_ >= 0.0 && nu_ <= 1.0, "ChannelFamily: transmissivity must lie in [0, 1]");
    require(std::isfinite(energy_) && energy_ >= 0.0, "ChannelFamily: energy must be >= 0");
    require(k_.size() >= 2, "ChannelFamily: need at least 2 distinct reflectivities");
    for (const auto& k : k_)
        require(std::isfinite(k.real()) && std::isfinite(k.imag()) && std::abs(k) <= 1.0,
                "ChannelFamily: reflectivities must satisfy |k| <= 1");
}

std::string_view to_string(RegionKind kind)
{
    switch (kind) {
    case RegionKind::quantum_paper:
        return "quantum_paper";
    case RegionKind::quantum_overlap:
        return "quantum_overlap";
    case RegionKind::classical_default:
        return "classical_default";
    case RegionKind::classical_strict:
        return "classical_strict";
    }
    return "unknown";
}

}  // namespace blbc

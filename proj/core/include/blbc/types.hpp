#pragma once

// Domain types shared across modules.

#include <string>
#include <string_view>
#include <vector>

#include "blbc/amplitude.hpp"

namespace blbc {

/// Which coherent-pair Chernoff value to use.
/// paper:   |k - k'|^2 |a|^2 / 2 (displacement in quadrature units)
/// overlap: -ln |<ka|k'a>|^2 = |k - k'|^2 |a|^2
enum class ExponentConvention { paper, overlap };

std::string_view to_string(ExponentConvention c);
ExponentConvention parse_convention(std::string_view text);

/// Finite distribution over a set of distinct amplitudes.
class TypeDistribution {
public:
    TypeDistribution(std::vector<Amplitude> support, std::vector<double> weights);

    static TypeDistribution point_mass(const Amplitude& a) { return TypeDistribution({a}, {1.0}); }

    const std::vector<Amplitude>& support() const { return support_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return support_.size(); }

    /// sum_b f(b) |b|^2
    double mean_energy() const;

private:
    std::vector<Amplitude> support_;
    std::vector<double> weights_;
};

/// Removes exact duplicates, keeping first occurrences in order.
std::vector<cplx> deduplicate(const std::vector<cplx>& values);

/// K-family of bidirectional lossy bosonic channels.
class ChannelFamily {
public:
    ChannelFamily(double transmissivity, std::vector<cplx> reflectivities, double energy);

    double transmissivity() const { return nu_; }
    const std::vector<cplx>& reflectivities() const { return k_; }
    double energy() const { return energy_; }

private:
    double nu_;
    std::vector<cplx> k_;
    double energy_;
};

enum class RegionKind { quantum_paper, quantum_overlap, classical_default, classical_strict };

std::string_view to_string(RegionKind kind);

/// Rectangle [0, rate_bits] x [0, exponent_nats].
struct RateDetectionRegion {
    double rate_bits = 0.0;
    double exponent_nats = 0.0;
    RegionKind kind = RegionKind::quantum_paper;
};

}  // namespace blbc

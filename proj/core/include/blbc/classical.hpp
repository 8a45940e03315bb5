#pragma once

// Classical bidirectional AWGN baseline: homodyne outcomes y_i = kappa k x_i + Z_i,
// Z_i ~ N(0, sigma^2), and its rate/exponent region.

#include <array>
#include <cstdint>
#include <vector>

#include "blbc/fit.hpp"
#include "blbc/types.hpp"

namespace blbc {

enum class HomodyneBranch { sense, comm };

struct HomodyneModel {
    double kappa = 1.0;   // mean of an outcome is kappa * k * x
    double sigma2 = 1.0;  // outcome noise variance
    HomodyneBranch branch = HomodyneBranch::sense;

    void validate() const;
};

struct MCConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    std::uint64_t chunk_size = 65536;
    unsigned threads = 1;

    void validate() const;
};

struct MCResult {
    std::uint64_t errors = 0;
    std::uint64_t trials = 0;
    double error_rate = 0.0;
    double wilson_low = 0.0;
    double wilson_high = 0.0;
};

struct Interval {
    double low;
    double high;
};

/// Wilson score interval; z = 1.96 gives the 95% interval.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

/// R = 1/2 log2(1 + SNR_c) bits, D = SNR_s / 8 nats. The strict form drops the "1+".
RateDetectionRegion classical_region(double snr_comm, double snr_sense, bool strict_form = false);

/// Classical region of a channel family under a homodyne model:
/// SNR_c = kappa^2 nu E / sigma^2, SNR_s = kappa^2 E min|dk|^2 / sigma^2.
RateDetectionRegion classical_region(const ChannelFamily& family, const HomodyneModel& model, bool strict_form = false);

/// Equal-prior LRT error Phi(-kappa |k1 - k0| sqrt(sum x^2) / (2 sigma)).
double detection_error_exact(const std::array<double, 2>& k, const std::vector<double>& word,
                             const HomodyneModel& model);

/// Monte Carlo of the equal-prior likelihood-ratio test under k_true (must be in k).
/// Trial t draws from CounterStream(seed, t, index of k_true); counts aggregate as
/// integers, so results do not depend on threads or chunking.
MCResult simulate_detection(double k_true, const std::array<double, 2>& k, const std::vector<double>& word,
                            const HomodyneModel& model, const MCConfig& cfg);

/// Error averaged over both hypotheses, cfg.trials trials each.
MCResult simulate_detection_mean(const std::array<double, 2>& k, const std::vector<double>& word,
                                 const HomodyneModel& model, const MCConfig& cfg);

struct ClassicalExponentFit {
    ExponentFit plain;  // least squares of -ln P_e on n
    /// Least squares of -ln P_e - (1/2) ln n on n. The Gaussian tail
    /// Phi(-c sqrt(n)) ~ exp(-c^2 n/2) / (c sqrt(2 pi n)) carries a sqrt(n)
    /// prefactor that biases the plain slope at moderate n.
    LinearFit corrected;
    double analytic_nats = 0.0;  // kappa^2 (k0 - k1)^2 E / (8 sigma^2)
    std::vector<MCResult> points;
};

/// Constant-energy real words x_i = sqrt(E). Smallest error must rest on >= 100 error events.
ClassicalExponentFit classical_exponent_regression(const std::array<double, 2>& k, double per_mode_energy,
                                                   const HomodyneModel& model, const std::vector<int>& n_list,
                                                   const MCConfig& cfg);

}  // namespace blbc

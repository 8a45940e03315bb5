#pragma once

#include <span>
#include <vector>

namespace blbc {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Unweighted least squares y = slope * x + intercept. Needs >= 2 distinct x.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Error-exponent regression of -ln P_e on block length.
struct ExponentFit {
    std::vector<int> block_lengths;
    std::vector<double> error_probs;
    std::vector<double> neg_log;
    double slope_nats = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Fills neg_log and the fit from block_lengths and error_probs.
ExponentFit fit_exponent(std::vector<int> block_lengths, std::vector<double> error_probs);

}  // namespace blbc

#include "blbc/fit.hpp"

#include <cmath>

#include "blbc/errors.hpp"

namespace blbc {

LinearFit fit_line(std::span<const double> x, std::span<const double> y)
{
    require(x.size() == y.size(), "fit_line: length mismatch");
    require(x.size() >= 2, "fit_line: need at least 2 points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    require(sxx > 0.0, "fit_line: x values are all equal");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

ExponentFit fit_exponent(std::vector<int> block_lengths, std::vector<double> error_probs)
{
    require(block_lengths.size() == error_probs.size(), "fit_exponent: length mismatch");
    ExponentFit out;
    out.block_lengths = std::move(block_lengths);
    out.error_probs = std::move(error_probs);
    std::vector<double> x;
    for (std::size_t i = 0; i < out.block_lengths.size(); ++i) {
        require(out.error_probs[i] > 0.0, "fit_exponent: error probabilities must be strictly positive");
        x.push_back(out.block_lengths[i]);
        out.neg_log.push_back(-std::log(out.error_probs[i]));
    }
    const LinearFit line = fit_line(x, out.neg_log);
    out.slope_nats = line.slope;
    out.intercept = line.intercept;
    out.r_squared = line.r_squared;
    return out;
}

}  // namespace blbc

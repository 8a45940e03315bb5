#pragma once

// Chernoff exponents: numeric Q_s curves on truncated operators and closed forms
// for coherent, Gaussian and classical equal-variance Gaussian hypotheses.
// All exponents are in nats.

#include <limits>
#include <span>
#include <vector>

#include "blbc/fock.hpp"
#include "blbc/types.hpp"

namespace blbc {

struct ChernoffCurve {
    std::vector<double> s_grid;
    std::vector<double> q_values;
    double exponent_nats = 0.0;  // -ln min_s Q_s, +inf for orthogonal supports
    double argmax_s = 0.0;       // maximizer of -ln Q_s
};

struct GaussianStateParams {
    double squeeze_r = 0.0;
    double squeeze_angle = 0.0;  // radians
    double inverse_temperature = std::numeric_limits<double>::infinity();
    cplx displacement{0.0, 0.0};  // relative displacement between hypotheses
};

struct SequenceExponent {
    double exponent_nats = 0.0;
    cplx k{};
    cplx k_prime{};
};

inline constexpr int kChernoffGridPoints = 65;
inline constexpr double kChernoffSTolerance = 1e-6;

/// Tr rho^s sigma^(1-s). Imaginary residue above 1e-8 throws NumericalError.
double q_s(const DensityOperator& rho, const DensityOperator& sigma, double s);

/// Minimizes Q_s over a 65-point grid, then golden-section refines to |ds| <= 1e-6.
ChernoffCurve chernoff_exponent_numeric(const DensityOperator& rho, const DensityOperator& sigma);

double coherent_pair_exponent(const Amplitude& alpha, cplx k, cplx k_prime, ExponentConvention conv);

/// |d|^2/2 (e^{-2r} cos^2 t + e^{2r} sin^2 t) tanh(beta/4); beta = +inf gives tanh = 1.
double gaussian_exponent(const GaussianStateParams& p);

/// min over distinct pairs (k, k') of sum_b f(b) |b|^2 |k - k'|^2 (/2 in paper mode).
/// Duplicates in K are collapsed; ties go to the lexicographically smallest pair.
SequenceExponent sequence_exponent(const TypeDistribution& f, const std::vector<cplx>& reflectivities,
                                   ExponentConvention conv);

/// (mu1 - mu2)^2 / (8 sigma^2), maximizer s = 1/2.
double classical_gaussian_exponent(double mu1, double mu2, double variance);

/// Per-letter sum for n-letter product hypotheses.
double classical_gaussian_exponent(std::span<const double> mu1, std::span<const double> mu2, double variance);

}  // namespace blbc

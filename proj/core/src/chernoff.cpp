#include "blbc/chernoff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace blbc {

namespace {

void check_pair(const DensityOperator& rho, const DensityOperator& sigma, const char* where)
{
    require(rho.dimension() == sigma.dimension(), std::string(where) + ": dimension mismatch");
}

// Tr rho^s sigma^(1-s) = sum_ij a_i^s b_j^(1-s) |<u_i|v_j>|^2 from cached spectra.
class SpectralPair {
public:
    SpectralPair(const DensityOperator& rho, const DensityOperator& sigma)
    {
        const auto er = hermitian_eigen(rho.matrix());
        const auto es = hermitian_eigen(sigma.matrix());
        a_ = er.values;
        b_ = es.values;
        overlap_ = (er.vectors.adjoint() * es.vectors).cwiseAbs2();
    }

    double operator()(double s) const
    {
        double total = 0.0;
        for (Eigen::Index i = 0; i < a_.size(); ++i) {
            if (a_(i) < kEigenClip)
                continue;
            const double ai = std::pow(a_(i), s);
            for (Eigen::Index j = 0; j < b_.size(); ++j) {
                if (b_(j) < kEigenClip)
                    continue;
                total += ai * std::pow(b_(j), 1.0 - s) * overlap_(i, j);
            }
        }
        return total;
    }

private:
    Eigen::VectorXd a_;
    Eigen::VectorXd b_;
    Eigen::MatrixXd overlap_;
};

}  // namespace

double q_s(const DensityOperator& rho, const DensityOperator& sigma, double s)
{
    check_pair(rho, sigma, "q_s");
    require(s >= 0.0 && s <= 1.0, "q_s: s must lie in [0, 1]");
    const cplx value = (matrix_power(rho, s) * matrix_power(sigma, 1.0 - s)).trace();
    if (std::abs(value.imag()) > 1e-8)
        throw NumericalError("q_s: imaginary residue " + std::to_string(value.imag()) + " exceeds 1e-8");
    return value.real();
}

ChernoffCurve chernoff_exponent_numeric(const DensityOperator& rho, const DensityOperator& sigma)
{
    check_pair(rho, sigma, "chernoff_exponent_numeric");
    const SpectralPair q(rho, sigma);

    ChernoffCurve curve;
    curve.s_grid.resize(kChernoffGridPoints);
    curve.q_values.resize(kChernoffGridPoints);
    for (int i = 0; i < kChernoffGridPoints; ++i) {
        curve.s_grid[i] = static_cast<double>(i) / (kChernoffGridPoints - 1);
        curve.q_values[i] = q(curve.s_grid[i]);
    }
    const auto best = std::min_element(curve.q_values.begin(), curve.q_values.end());
    const auto idx = std::distance(curve.q_values.begin(), best);
    double best_s = curve.s_grid[idx];
    double best_q = *best;

    // Q_s is log-convex in s, so the grid minimum brackets the true minimum.
    double lo = curve.s_grid[std::max<std::ptrdiff_t>(idx - 1, 0)];
    double hi = curve.s_grid[std::min<std::ptrdiff_t>(idx + 1, kChernoffGridPoints - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = q(x1);
    double f2 = q(x2);
    while (hi - lo > kChernoffSTolerance) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = q(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = q(x2);
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double fmid = q(mid);
    if (fmid < best_q) {
        best_q = fmid;
        best_s = mid;
    }

    curve.argmax_s = best_s;
    if (best_q <= 0.0)
        curve.exponent_nats = std::numeric_limits<double>::infinity();
    else
        curve.exponent_nats = std::max(0.0, -std::log(best_q));
    return curve;
}

double coherent_pair_exponent(const Amplitude& alpha, cplx k, cplx k_prime, ExponentConvention conv)
{
    const double overlap_value = std::norm(k - k_prime) * alpha.energy();
    return conv == ExponentConvention::paper ? overlap_value / 2.0 : overlap_value;
}

double gaussian_exponent(const GaussianStateParams& p)
{
    require(p.inverse_temperature > 0.0, "gaussian_exponent: inverse temperature must be > 0");
    const double c = std::cos(p.squeeze_angle);
    const double s = std::sin(p.squeeze_angle);
    const double squeeze = std::exp(-2.0 * p.squeeze_r) * c * c + std::exp(2.0 * p.squeeze_r) * s * s;
    const double thermal = std::isinf(p.inverse_temperature) ? 1.0 : std::tanh(p.inverse_temperature / 4.0);
    return std::norm(p.displacement) / 2.0 * squeeze * thermal;
}

SequenceExponent sequence_exponent(const TypeDistribution& f, const std::vector<cplx>& reflectivities,
                                   ExponentConvention conv)
{
    std::vector<cplx> k = deduplicate(reflectivities);
    require(k.size() >= 2, "sequence_exponent: need at least 2 distinct reflectivities");
    std::sort(k.begin(), k.end(), lex_less);

    // Pairs are enumerated in lexicographic order, so a strict < keeps the first minimizer.
    double best_gap = std::numeric_limits<double>::infinity();
    SequenceExponent out;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j) {
            const double gap = std::norm(k[i] - k[j]);
            if (gap < best_gap) {
                best_gap = gap;
                out.k = k[i];
                out.k_prime = k[j];
            }
        }
    const double value = f.mean_energy() * best_gap;
    out.exponent_nats = conv == ExponentConvention::paper ? value / 2.0 : value;
    return out;
}

double classical_gaussian_exponent(double mu1, double mu2, double variance)
{
    require(variance > 0.0, "classical_gaussian_exponent: variance must be > 0");
    const double d = mu1 - mu2;
    return d * d / (8.0 * variance);
}

double classical_gaussian_exponent(std::span<const double> mu1, std::span<const double> mu2, double variance)
{
    require(mu1.size() == mu2.size(), "classical_gaussian_exponent: length mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < mu1.size(); ++i)
        total += classical_gaussian_exponent(mu1[i], mu2[i], variance);
    return total;
}

}  // namespace blbc

#include "blbc/truncation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace blbc {

namespace {

double log_poisson_term(double mean, int j)
{
    return -mean + j * std::log(mean) - std::lgamma(j + 1.0);
}

// exp(-x) sum_{j=0}^{N} x^j/j!
double poisson_head(double mean, int cutoff)
{
    double sum = 0.0;
    for (int j = 0; j <= cutoff; ++j)
        sum += std::exp(log_poisson_term(mean, j));
    return sum;
}

// exp(-x) sum_{j>N} x^j/j!, only used when N + 1 > x so terms decrease.
double poisson_tail(double mean, int cutoff)
{
    double sum = 0.0;
    for (int j = cutoff + 1;; ++j) {
        const double term = std::exp(log_poisson_term(mean, j));
        sum += term;
        if (term <= sum * std::numeric_limits<double>::epsilon() * 0.25 || term == 0.0)
            break;
    }
    return sum;
}

}  // namespace

ProjectorSpec::ProjectorSpec(int local_cutoff_, int modes_) : local_cutoff(local_cutoff_), modes(modes_)
{
    require(local_cutoff >= 0, "ProjectorSpec: local cutoff must be >= 0");
    require(modes >= 1, "ProjectorSpec: modes must be >= 1");
}

double truncation_tail_exact(const Amplitude& alpha, int cutoff)
{
    require(cutoff >= 0, "truncation_tail_exact: cutoff must be >= 0");
    const double mean = alpha.energy();
    if (mean == 0.0)
        return 0.0;
    if (cutoff + 1 > mean)
        return poisson_tail(mean, cutoff);
    return std::max(0.0, 1.0 - poisson_head(mean, cutoff));
}

double truncation_fidelity_exact(const Amplitude& alpha, int cutoff)
{
    require(cutoff >= 0, "truncation_fidelity_exact: cutoff must be >= 0");
    const double mean = alpha.energy();
    if (mean == 0.0)
        return 1.0;
    const double head = poisson_head(mean, cutoff);
    if (head < 0.5)
        return head;
    return 1.0 - truncation_tail_exact(alpha, cutoff);
}

double truncation_fidelity_bound(const Amplitude& alpha, int cutoff)
{
    require(cutoff >= 1, "truncation_fidelity_bound: cutoff must be >= 1");
    const double base = std::numbers::e * std::max(2.0, alpha.energy()) / cutoff;
    return 1.0 - std::pow(base, cutoff);
}

ProductFidelity product_fidelity_bound(double eps, int modes)
{
    require(eps >= 0.0 && eps < 1.0, "product_fidelity_bound: eps must lie in [0, 1)");
    require(modes >= 1, "product_fidelity_bound: modes must be >= 1");
    return {1.0 - modes * eps, std::pow(1.0 - eps, modes)};
}

ApproximatedCodeword approximate_codeword(const std::vector<Amplitude>& word, const ProjectorSpec& spec)
{
    require(static_cast<int>(word.size()) == spec.modes, "approximate_codeword: word length differs from spec.modes");
    ApproximatedCodeword out;
    out.original = word;
    out.state.reserve(word.size());
    for (const auto& alpha : word) {
        const FockVector projected = coherent_fock_vector(alpha, spec.local_cutoff);
        const Vector& v = projected.coefficients();
        Matrix rho = v * v.adjoint();
        rho(0, 0) += std::max(0.0, 1.0 - v.squaredNorm());
        out.state.emplace_back(std::move(rho), true);

        const double retained = truncation_fidelity_exact(alpha, spec.local_cutoff);
        out.fidelity_to_original *= retained;
        // <a|rho|a> = |<a|Qa>|^2 + |<a|0>|^2 (1 - |Qa|^2), and <a|Qa> = |Qa|^2.
        out.state_fidelity *= retained * retained + std::exp(-alpha.energy()) * (1.0 - retained);
    }
    return out;
}

int log_cutoff_for(long long n, double log_base)
{
    require(n >= 2, "log_cutoff_for: n must be >= 2");
    require(log_base > 1.0, "log_cutoff_for: log base must exceed 1");
    if (log_base == 2.0)
        return std::bit_width(static_cast<unsigned long long>(n)) - 1;
    int k = static_cast<int>(std::floor(std::log(static_cast<double>(n)) / std::log(log_base)));
    // Correct floating-point edge cases around exact powers.
    while (k > 0 && std::pow(log_base, k) > static_cast<double>(n))
        --k;
    while (std::pow(log_base, k + 1) <= static_cast<double>(n))
        ++k;
    return k;
}

}  // namespace blbc

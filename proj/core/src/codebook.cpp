#include "blbc/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "blbc/philox.hpp"

namespace blbc {

namespace {
constexpr std::uint32_t kCodebookTag = 0xC0DEu;
}

Codebook::Codebook(int words, int block_length, std::vector<Amplitude> symbols, double energy_budget)
    : words_(words), n_(block_length), symbols_(std::move(symbols)), budget_(energy_budget)
{
    require(words_ >= 1 && n_ >= 1, "Codebook: M and n must be >= 1");
    require(symbols_.size() == static_cast<std::size_t>(words_) * static_cast<std::size_t>(n_),
            "Codebook: symbol count differs from M * n");
    require(std::isfinite(budget_) && budget_ >= 0.0, "Codebook: energy budget must be >= 0");
}

std::span<const Amplitude> Codebook::word(int m) const
{
    require(m >= 0 && m < words_, "Codebook::word: index out of range");
    return std::span<const Amplitude>(symbols_).subspan(static_cast<std::size_t>(m) * n_, n_);
}

double Codebook::mean_word_energy() const
{
    long double total = 0.0L;
    for (const auto& a : symbols_)
        total += a.energy();
    return static_cast<double>(total / words_);
}

bool Codebook::power_constraint_holds(double rel_tol) const
{
    const double limit = n_ * budget_;
    return mean_word_energy() <= limit * (1.0 + rel_tol);
}

CodeParameters CodeParameters::make(int n, std::uint64_t M, double com_error, double sen_error)
{
    require(n >= 1 && M >= 1, "CodeParameters: n and M must be >= 1");
    return {n, M, std::log2(static_cast<double>(M)) / n, com_error, sen_error};
}

Discretization discretize_circular_gaussian(double F, double halfwidth, double step)
{
    require(std::isfinite(F) && F > 0.0, "discretize_circular_gaussian: F must be > 0");
    require(std::isfinite(step) && step > 0.0, "discretize_circular_gaussian: step must be > 0");
    require(std::isfinite(halfwidth) && halfwidth > 0.0, "discretize_circular_gaussian: halfwidth must be > 0");

    const int cells = std::max(1, static_cast<int>(std::ceil(2.0 * halfwidth / step - 1e-9)));
    const double h = 0.5 * cells * step;
    const double scale = std::sqrt(F);

    std::vector<double> centres(cells), axis_mass(cells), axis_density(cells);
    for (int i = 0; i < cells; ++i) {
        const double lo = -h + i * step;
        centres[i] = lo + 0.5 * step;
        // Each axis is N(0, F/2): P(a < X < b) = (erf(b/sqrt F) - erf(a/sqrt F)) / 2.
        axis_mass[i] = 0.5 * (std::erf((lo + step) / scale) - std::erf(lo / scale));
        axis_density[i] = std::exp(-centres[i] * centres[i] / F);
    }

    std::vector<Amplitude> support;
    std::vector<double> weights;
    support.reserve(static_cast<std::size_t>(cells) * cells);
    weights.reserve(support.capacity());
    double total = 0.0;
    for (int i = 0; i < cells; ++i)
        for (int j = 0; j < cells; ++j) {
            support.emplace_back(centres[i], centres[j]);
            weights.push_back(axis_density[i] * axis_density[j]);
            total += weights.back();
        }
    for (auto& w : weights)
        w /= total;

    double gap = 0.0;
    for (int i = 0; i < cells; ++i)
        for (int j = 0; j < cells; ++j)
            gap += std::abs(weights[static_cast<std::size_t>(i) * cells + j] - axis_mass[i] * axis_mass[j]);
    // 1 - erf(h)^2 written through erfc to keep the tiny tail accurate.
    const double tail = std::erfc(h / scale);
    const double outside = tail * (2.0 - tail);

    // Renormalize against the accumulated rounding so the weights sum to 1.
    double sum = 0.0;
    for (double w : weights)
        sum += w;
    for (auto& w : weights)
        w /= sum;

    return {TypeDistribution(std::move(support), std::move(weights)), 0.5 * gap + outside, outside, step, h};
}

double default_shaping_variance(double energy, double eps)
{
    require(energy > 0.0, "default_shaping_variance: energy must be > 0");
    require(eps > 0.0 && eps < 1.0, "default_shaping_variance: eps must lie in (0, 1)");
    return energy * (1.0 - eps);
}

Codebook sample_codebook(const TypeDistribution& p, int words, int block_length, std::uint64_t seed,
                         double energy_budget, unsigned threads)
{
    require(words >= 1 && block_length >= 1, "sample_codebook: M and n must be >= 1");
    require(threads >= 1, "sample_codebook: threads must be >= 1");
    const auto& weights = p.weights();
    std::vector<double> cumulative(weights.size());
    double running = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        running += weights[i];
        cumulative[i] = running;
    }
    const auto last = cumulative.size() - 1;

    std::vector<Amplitude> symbols(static_cast<std::size_t>(words) * block_length);
    auto fill = [&](unsigned worker, unsigned stride) {
        for (int m = static_cast<int>(worker); m < words; m += static_cast<int>(stride)) {
            CounterStream stream(seed, static_cast<std::uint64_t>(m), kCodebookTag);
            for (int j = 0; j < block_length; ++j) {
                const double u = stream.next_uniform() * running;
                const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
                const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), last);
                symbols[static_cast<std::size_t>(m) * block_length + j] = p.support()[idx];
            }
        }
    };
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(words));
    if (workers <= 1) {
        fill(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(fill, w, workers);
    }
    return Codebook(words, block_length, std::move(symbols), energy_budget);
}

TypeDistribution empirical_type(std::span<const Amplitude> word)
{
    require(!word.empty(), "empirical_type: empty word");
    std::map<std::pair<double, double>, std::size_t> counts;
    for (const auto& a : word)
        ++counts[{a.re(), a.im()}];
    std::vector<Amplitude> support;
    std::vector<double> weights;
    const double n = static_cast<double>(word.size());
    for (const auto& [key, count] : counts) {
        support.emplace_back(key.first, key.second);
        weights.push_back(static_cast<double>(count) / n);
    }
    return TypeDistribution(std::move(support), std::move(weights));
}

namespace {

// sqrt(E) exp(2 pi i j / q), exact on quarter turns.
Amplitude phase_symbol(double magnitude, int j, int q)
{
    if ((4 * j) % q == 0) {
        switch ((4 * j / q) % 4) {
        case 0:
            return {magnitude, 0.0};
        case 1:
            return {0.0, magnitude};
        case 2:
            return {-magnitude, 0.0};
        default:
            return {0.0, -magnitude};
        }
    }
    return Amplitude::polar(magnitude, 2.0 * std::numbers::pi * j / q);
}

}  // namespace

Codebook constant_energy_codebook(double energy, std::uint64_t words, int block_length, int phases)
{
    require(std::isfinite(energy) && energy >= 0.0, "constant_energy_codebook: energy must be >= 0");
    require(phases >= 2, "constant_energy_codebook: need at least 2 phases");
    require(block_length >= 1 && words >= 1, "constant_energy_codebook: M and n must be >= 1");
    std::uint64_t capacity = 1;
    for (int i = 0; i < block_length && capacity < words; ++i)
        capacity *= static_cast<std::uint64_t>(phases);
    require(words <= capacity, "constant_energy_codebook: M exceeds q^n");
    require(words <= static_cast<std::uint64_t>(std::numeric_limits<int>::max()),
            "constant_energy_codebook: M too large");

    const double magnitude = std::sqrt(energy);
    std::vector<Amplitude> alphabet;
    for (int j = 0; j < phases; ++j)
        alphabet.push_back(phase_symbol(magnitude, j, phases));

    std::vector<Amplitude> symbols;
    symbols.reserve(words * static_cast<std::uint64_t>(block_length));
    for (std::uint64_t m = 0; m < words; ++m) {
        std::uint64_t digits = m;
        for (int j = 0; j < block_length; ++j) {
            symbols.push_back(alphabet[digits % static_cast<std::uint64_t>(phases)]);
            digits /= static_cast<std::uint64_t>(phases);
        }
    }
    return Codebook(static_cast<int>(words), block_length, std::move(symbols), energy);
}

}  // namespace blbc

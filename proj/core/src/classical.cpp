#include "blbc/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "blbc/philox.hpp"

namespace blbc {

void HomodyneModel::validate() const
{
    require(std::isfinite(kappa) && kappa > 0.0, "HomodyneModel: kappa must be > 0");
    require(std::isfinite(sigma2) && sigma2 > 0.0, "HomodyneModel: sigma2 must be > 0");
}

void MCConfig::validate() const
{
    require(trials >= 1000, "MCConfig: trials must be >= 1000");
    require(chunk_size >= 1, "MCConfig: chunk_size must be >= 1");
    require(threads >= 1, "MCConfig: threads must be >= 1");
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    require(trials > 0 && successes <= trials, "wilson_interval: need 0 <= successes <= trials, trials > 0");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
    const double half = z / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    // The endpoints are exact at k = 0 and k = n; rounding would leave them a few ulps off.
    const double low = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    const double high = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return {low, high};
}

RateDetectionRegion classical_region(double snr_comm, double snr_sense, bool strict_form)
{
    require(snr_comm >= 0.0 && snr_sense >= 0.0, "classical_region: SNRs must be >= 0");
    RateDetectionRegion region;
    region.exponent_nats = snr_sense / 8.0;
    if (strict_form) {
        require(snr_comm >= 1.0, "classical_region: strict form needs SNR_c >= 1 (rate would be negative)");
        region.rate_bits = 0.5 * std::log2(snr_comm);
        region.kind = RegionKind::classical_strict;
    } else {
        region.rate_bits = 0.5 * std::log2(1.0 + snr_comm);
        region.kind = RegionKind::classical_default;
    }
    return region;
}

RateDetectionRegion classical_region(const ChannelFamily& family, const HomodyneModel& model, bool strict_form)
{
    model.validate();
    const auto& k = family.reflectivities();
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            gap = std::min(gap, std::norm(k[i] - k[j]));
    const double gain = model.kappa * model.kappa / model.sigma2;
    return classical_region(gain * family.transmissivity() * family.energy(), gain * family.energy() * gap,
                            strict_form);
}

double detection_error_exact(const std::array<double, 2>& k, const std::vector<double>& word,
                             const HomodyneModel& model)
{
    model.validate();
    double energy = 0.0;
    for (double x : word)
        energy += x * x;
    const double separation = model.kappa * std::abs(k[1] - k[0]) * std::sqrt(energy) / std::sqrt(model.sigma2);
    // Phi(-d/2) = erfc(d / (2 sqrt 2)) / 2
    return 0.5 * std::erfc(separation / (2.0 * std::sqrt(2.0)));
}

namespace {

// Decide k1 iff sum_i x_i (y_i - kappa (k0 + k1) x_i / 2) (k1 - k0) > 0: the
// log-likelihood ratio of two equal-variance Gaussians is linear in y, so the
// exact equal-prior LRT is a threshold on this statistic. Ties are split by a coin.
std::uint64_t count_errors(std::uint64_t first, std::uint64_t last, double k_true, std::uint32_t tag,
                           const std::array<double, 2>& k, const std::vector<double>& word,
                           const HomodyneModel& model, std::uint64_t seed)
{
    const double sigma = std::sqrt(model.sigma2);
    const double midpoint = 0.5 * (k[0] + k[1]);
    const double direction = k[1] - k[0];
    std::uint64_t errors = 0;
    for (std::uint64_t t = first; t < last; ++t) {
        CounterStream stream(seed, t, tag);
        double statistic = 0.0;
        for (double x : word) {
            const double y = model.kappa * k_true * x + sigma * stream.next_normal();
            statistic += x * (y - model.kappa * midpoint * x);
        }
        statistic *= direction;
        bool decide_k1;
        if (statistic > 0.0)
            decide_k1 = true;
        else if (statistic < 0.0)
            decide_k1 = false;
        else
            decide_k1 = (stream.next_u32() & 1u) != 0;
        const bool truth_k1 = tag == 1;
        if (decide_k1 != truth_k1)
            ++errors;
    }
    return errors;
}

}  // namespace

MCResult simulate_detection(double k_true, const std::array<double, 2>& k, const std::vector<double>& word,
                            const HomodyneModel& model, const MCConfig& cfg)
{
    model.validate();
    cfg.validate();
    require(k[0] != k[1], "simulate_detection: hypotheses must be distinct");
    require(k_true == k[0] || k_true == k[1], "simulate_detection: k_true must be one of the hypotheses");
    for (double x : word)
        require(std::isfinite(x), "simulate_detection: non-finite word entry");
    const std::uint32_t tag = k_true == k[1] ? 1u : 0u;

    const std::uint64_t chunks = (cfg.trials + cfg.chunk_size - 1) / cfg.chunk_size;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(cfg.threads, chunks));
    std::vector<std::uint64_t> per_chunk(chunks, 0);
    auto run = [&](unsigned w) {
        for (std::uint64_t c = w; c < chunks; c += workers) {
            const std::uint64_t first = c * cfg.chunk_size;
            const std::uint64_t last = std::min(cfg.trials, first + cfg.chunk_size);
            per_chunk[c] = count_errors(first, last, k_true, tag, k, word, model, cfg.seed);
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }

    MCResult out;
    out.trials = cfg.trials;
    for (auto e : per_chunk)
        out.errors += e;
    out.error_rate = static_cast<double>(out.errors) / static_cast<double>(out.trials);
    const auto ci = wilson_interval(out.errors, out.trials);
    out.wilson_low = ci.low;
    out.wilson_high = ci.high;
    return out;
}

MCResult simulate_detection_mean(const std::array<double, 2>& k, const std::vector<double>& word,
                                 const HomodyneModel& model, const MCConfig& cfg)
{
    const MCResult a = simulate_detection(k[0], k, word, model, cfg);
    const MCResult b = simulate_detection(k[1], k, word, model, cfg);
    MCResult out;
    out.errors = a.errors + b.errors;
    out.trials = a.trials + b.trials;
    out.error_rate = static_cast<double>(out.errors) / static_cast<double>(out.trials);
    const auto ci = wilson_interval(out.errors, out.trials);
    out.wilson_low = ci.low;
    out.wilson_high = ci.high;
    return out;
}

ClassicalExponentFit classical_exponent_regression(const std::array<double, 2>& k, double per_mode_energy,
                                                   const HomodyneModel& model, const std::vector<int>& n_list,
                                                   const MCConfig& cfg)
{
    model.validate();
    require(k[0] != k[1], "classical_exponent_regression: hypotheses must be distinct");
    require(per_mode_energy > 0.0, "classical_exponent_regression: energy must be > 0");
    require(n_list.size() >= 2, "classical_exponent_regression: need at least 2 block lengths");

    ClassicalExponentFit out;
    std::vector<double> probs;
    const double amplitude = std::sqrt(per_mode_energy);
    for (int n : n_list) {
        require(n >= 1, "classical_exponent_regression: block lengths must be >= 1");
        const MCResult point = simulate_detection_mean(k, std::vector<double>(n, amplitude), model, cfg);
        require(point.errors >= 100, "classical_exponent_regression: fewer than 100 error events at n = " +
                                         std::to_string(n) + "; increase trials or shrink n");
        out.points.push_back(point);
        probs.push_back(point.error_rate);
    }
    out.plain = fit_exponent(n_list, std::move(probs));

    std::vector<double> x, y;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        x.push_back(n_list[i]);
        y.push_back(out.plain.neg_log[i] - 0.5 * std::log(static_cast<double>(n_list[i])));
    }
    out.corrected = fit_line(x, y);
    const double d = k[0] - k[1];
    out.analytic_nats = model.kappa * model.kappa * d * d * per_mode_energy / (8.0 * model.sigma2);
    return out;
}

}  // namespace blbc

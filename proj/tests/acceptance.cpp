// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: acceptance [path-to-blbc-cli]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "blbc/chernoff.hpp"
#include "blbc/classical.hpp"
#include "blbc/codebook.hpp"
#include "blbc/discrimination.hpp"
#include "blbc/fock.hpp"
#include "blbc/region.hpp"
#include "blbc/truncation.hpp"

using namespace blbc;
namespace fs = std::filesystem;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    o.detail.precision(10);
    const auto start = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_s > 0.0)
        o.check(seconds < budget_s, "runtime " + std::to_string(seconds) + " s over budget");
    if (!o.pass)
        ++failures;
    std::printf("%s %d %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), seconds, o.detail.str().c_str());
    std::fflush(stdout);
}

big gordon_big(const big& x)
{
    using boost::multiprecision::log;
    return ((x + 1) * log(x + 1) - x * log(x)) / log(big(2));
}

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

cplx random_in_disk(std::mt19937_64& rng, double radius)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

// ---------------------------------------------------------------------------

void region_corners(Outcome& o)
{
    const ChannelFamily family(1.0, {0.0, 1.0}, 1e6);
    const auto q = quantum_region(family).region;
    const auto c = classical_region(family, HomodyneModel{});
    const auto m = comparison_metrics(family, HomodyneModel{});
    o.check(q.rate_bits == gordon_g(1e6), "quantum R == g(1e6)");
    o.check(rel_err(q.rate_bits, gordon_big(big(1e6)).convert_to<double>()) < 1e-14, "g(1e6) vs 50-digit oracle");
    o.check(q.exponent_nats == 5e5, "quantum D == 5e5");
    o.check(c.rate_bits == 0.5 * std::log2(1.0 + 1e6), "classical R == log2(1+1e6)/2");
    o.check(c.exponent_nats == 1.25e5, "classical D == 1.25e5");
    o.check(m.detection_ratio == 0.25, "detection ratio == 0.25");
    o.detail << " R_q=" << q.rate_bits << " D_q=" << q.exponent_nats << " R_c=" << c.rate_bits
             << " D_c=" << c.exponent_nats << " ratio=" << m.detection_ratio;
}

void pure_state_chernoff(Outcome& o)
{
    std::mt19937_64 rng(20240601);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const cplx beta = random_in_disk(rng, 2.0), gamma = random_in_disk(rng, 2.0);
        const auto rho = DensityOperator::pure(coherent_fock_vector(Amplitude(beta), 60));
        const auto sigma = DensityOperator::pure(coherent_fock_vector(Amplitude(gamma), 60));
        const double numeric = chernoff_exponent_numeric(rho, sigma).exponent_nats;
        const double expected = std::norm(beta - gamma);
        worst = std::max(worst, rel_err(numeric, expected));
        const double paper = coherent_pair_exponent(Amplitude(1.0), beta, gamma, ExponentConvention::paper);
        const double overlap = coherent_pair_exponent(Amplitude(1.0), beta, gamma, ExponentConvention::overlap);
        o.check(paper == overlap / 2.0, "paper == overlap / 2 identity");
    }
    o.check(worst <= 1e-6, "relative error <= 1e-6");
    o.detail << " worst_rel_err=" << worst;
}

void sequence_formula(Outcome& o)
{
    std::mt19937_64 rng(77);
    double worst = 0.0;
    int exact = 0, total = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<cplx> k;
        const int r = 2 + trial % 4;
        for (int i = 0; i < r; ++i)
            k.push_back(random_in_disk(rng, 1.0));
        const double energy = std::pow(10.0, -2.0 + 6.0 * std::uniform_real_distribution<double>(0, 1)(rng));
        const int q = 2 + trial % 7;
        const int n = 3 + trial % 9;
        // A random word over the q-phase alphabet.
        std::vector<Amplitude> word;
        std::uniform_int_distribution<int> pick(0, q - 1);
        const auto alphabet = constant_energy_codebook(energy, static_cast<std::uint64_t>(q), 1, q);
        for (int j = 0; j < n; ++j)
            word.push_back(alphabet.word(pick(rng))[0]);

        double gap = INFINITY;
        for (std::size_t a = 0; a < k.size(); ++a)
            for (std::size_t b = a + 1; b < k.size(); ++b)
                gap = std::min(gap, std::norm(k[a] - k[b]));
        const double expected = energy / 2.0 * gap;
        const auto got = sequence_exponent(empirical_type(word), k, ExponentConvention::paper);
        worst = std::max(worst, rel_err(got.exponent_nats, expected));
        exact += got.exponent_nats == expected;
        ++total;

        for (int s = 0; s < (trial == 0 ? 100 : 2); ++s) {
            std::shuffle(word.begin(), word.end(), rng);
            const auto shuffled = sequence_exponent(empirical_type(word), k, ExponentConvention::paper);
            o.check(shuffled.exponent_nats == got.exponent_nats && shuffled.k == got.k &&
                        shuffled.k_prime == got.k_prime,
                    "permutation invariance");
        }
    }
    // Sum over a type of |b|^2 reorders the roundings, so allow a few ulps.
    o.check(worst <= 1e-14, "matches (E/2) min |dk|^2 to rounding");
    o.detail << " worst_rel_err=" << worst << " bit_exact=" << exact << "/" << total;
}

void finite_n_regression(Outcome& o)
{
    const ChannelFamily family(1.0, {0.0, 1.0}, 1.0);
    std::vector<int> n_list(56);
    std::iota(n_list.begin(), n_list.end(), 5);
    const auto h = exponent_regression(family, 1.0, n_list, DiscriminationMethod::helstrom);
    const auto p = exponent_regression(family, 1.0, n_list, DiscriminationMethod::pgm);
    o.check(std::abs(h.slope_nats - 1.0) <= 0.02, "Helstrom slope 1.00 +- 2%");
    o.check(h.r_squared >= 0.999, "Helstrom r2 >= 0.999");
    o.check(std::abs(p.slope_nats / h.slope_nats - 1.0) <= 0.02, "PGM slope within 2%");
    int below = 0;
    for (std::size_t i = 0; i < n_list.size(); ++i)
        // Two pure states: PGM and Helstrom coincide, so compare to rounding.
        below += p.error_probs[i] < h.error_probs[i] * (1.0 - 1e-9);
    o.check(below == 0, "PGM >= Helstrom at every n");
    o.detail << " helstrom_slope=" << h.slope_nats << " r2=" << h.r_squared << " pgm_slope=" << p.slope_nats;
}

void classical_monte_carlo(Outcome& o)
{
    const HomodyneModel model;
    MCConfig cfg;
    cfg.trials = 1'000'000;
    cfg.seed = 1;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    const auto fit = classical_exponent_regression({0.0, 1.0}, 1.0, model, {4, 8, 12, 16, 20, 24, 28, 32, 36, 40}, cfg);
    o.check(std::abs(fit.corrected.slope / 0.125 - 1.0) <= 0.10, "prefactor-corrected slope 0.125 +- 10%");

    const std::vector<double> word(20, 1.0);
    const double exact = detection_error_exact({0.0, 1.0}, word, model);
    int covered = 0;
    MCConfig c = cfg;
    c.trials = 100'000;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        c.seed = seed;
        const auto r = simulate_detection_mean({0.0, 1.0}, word, model, c);
        covered += r.wilson_low <= exact && exact <= r.wilson_high;
    }
    o.check(covered >= 95, "Wilson coverage >= 95/100");
    o.detail << " corrected_slope=" << fit.corrected.slope << " plain_slope=" << fit.plain.slope_nats
             << " analytic=" << fit.analytic_nats << " coverage=" << covered << "/100";
}

void truncation_bounds(Outcome& o)
{
    int violations = 0, checked = 0;
    for (int i = 0; i < 60; ++i) {
        const double x = std::pow(10.0, -3.0 + 5.0 * i / 59.0);
        const Amplitude a(std::sqrt(x));
        for (int n = 1; n <= 300; ++n) {
            violations += truncation_fidelity_bound(a, n) > truncation_fidelity_exact(a, n);
            ++checked;
        }
    }
    o.check(violations == 0, "bound <= exact on the grid");

    const Amplitude one(1.0);
    double previous_bound = INFINITY, previous_tail = INFINITY, last = 0.0;
    bool decreasing = true;
    for (int p = 4; p <= 20; ++p) {
        const long long n = 1LL << p;
        const int cutoff = log_cutoff_for(n);
        const double nb = static_cast<double>(n) * (1.0 - truncation_fidelity_bound(one, cutoff));
        const double nt = static_cast<double>(n) * truncation_tail_exact(one, cutoff);
        decreasing = decreasing && nb < previous_bound && nt < previous_tail;
        previous_bound = nb;
        previous_tail = nt;
        last = nb;
    }
    o.check(decreasing, "n eps_n decreasing");
    o.check(last < 1e-3, "n eps_n < 1e-3 at n = 2^20");

    int product_bad = 0;
    for (int i = 0; i <= 200; ++i) {
        const double eps = i < 200 ? i / 200.0 : 1.0 - 1e-12;
        for (int n : {1, 2, 3, 5, 10, 50, 100, 1000, 100000}) {
            const auto pb = product_fidelity_bound(eps, n);
            product_bad += pb.bound > pb.exact;
        }
    }
    o.check(product_bad == 0, "1 - n eps <= (1 - eps)^n");
    o.detail << " grid=" << checked << " n_eps(2^20)=" << last;
}

void gordon_properties(Outcome& o)
{
    o.check(gordon_g(1.0) == 2.0, "g(1) == 2");
    std::vector<double> xs, gs;
    for (int i = 0; i < 100; ++i) {
        xs.push_back(std::pow(10.0, -6.0 + 12.0 * i / 99.0));
        gs.push_back(gordon_g(xs.back()));
        o.check(gs.back() >= 0.5 * std::log2(1.0 + xs.back()), "g(x) >= log2(1+x)/2");
    }
    for (int i = 1; i + 1 < 100; ++i) {
        const double left = (gs[i] - gs[i - 1]) / (xs[i] - xs[i - 1]);
        const double right = (gs[i + 1] - gs[i]) / (xs[i + 1] - xs[i]);
        o.check(right <= left, "concavity");
    }
    const double ratio = comparison_metrics(ChannelFamily(1.0, {0.0, 1.0}, 1e6), HomodyneModel{}).capacity_ratio;
    using boost::multiprecision::log;
    const big x(1e6);
    const double oracle = (log(x + 1) / log(big(2)) / 2 / gordon_big(x)).convert_to<double>();
    o.check(std::abs(ratio - oracle) <= 1e-9, "capacity ratio vs 50-digit oracle");
    o.detail << " capacity_ratio=" << ratio << " oracle=" << oracle;
}

void codebook_constraints(Outcome& o)
{
    double worst = 0.0;
    for (double energy : {0.01, 1.0, 7.3, 1e6})
        for (int q : {2, 3, 4, 6, 8})
            for (int n : {1, 5, 16}) {
                const std::uint64_t words = std::min<std::uint64_t>(64, static_cast<std::uint64_t>(std::pow(q, n)));
                const auto book = constant_energy_codebook(energy, words, n, q);
                for (int m = 0; m < book.size(); ++m) {
                    double total = 0.0;
                    for (const auto& a : book.word(m))
                        total += a.energy();
                    worst = std::max(worst, rel_err(total, n * energy));
                }
            }
    o.check(worst <= 1e-12, "constant-energy words meet n E to 1e-12");

    const auto d = discretize_circular_gaussian(1.0, 5.0, 0.25);
    o.check(d.tv_gap <= 0.01, "TV gap <= 0.01");
    double previous = INFINITY;
    bool monotone = true;
    for (double step : {1.0, 0.5, 0.25, 0.125, 0.0625}) {
        const double gap = discretize_circular_gaussian(1.0, 5.0, step).tv_gap;
        monotone = monotone && gap < previous;
        previous = gap;
    }
    o.check(monotone, "TV gap monotone under refinement");

    // M = 512 words of length 1e4 per seed; see README for the choice of M.
    const double energy = 1.0;
    const double F = default_shaping_variance(energy, 1e-3);
    const auto shaped = discretize_circular_gaussian(F, 5.0 * std::sqrt(F), 0.25 * std::sqrt(F));
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    int within = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto book = sample_codebook(shaped.distribution, 512, 10'000, seed, energy, threads);
        within += book.average_energy() <= energy;
    }
    o.check(within >= 95, "sampled average energy <= E in >= 95/100 seeds");
    o.detail << " worst_rel=" << worst << " tv_gap=" << d.tv_gap << " within=" << within << "/100";
}

void determinism(Outcome& o, const std::string& cli)
{
    o.check(!cli.empty() && fs::exists(cli), "CLI binary available");
    if (cli.empty() || !fs::exists(cli))
        return;
    const fs::path root = fs::temp_directory_path() / ("blbc_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    const std::vector<std::pair<std::string, std::string>> commands{
        {"region", "region --energy 1e6 --k-list 0,0.5+0.5i,1 --strict-classical"},
        {"figure1", "figure1 --points 21"},
        {"chernoff", "chernoff --beta 1.2-0.4i --gamma -0.3+0.9i --cutoff 60"},
        {"discriminate", "discriminate --k-list 0,0.5,1 --energy 1 --n-list 5:40:5"},
        {"mc", "mc-homodyne --trials 20000 --n-list 2,4,6,8 --threads 4 --chunk-size 3000 --seed 99"},
        {"truncation", "truncation --alpha2 3 --n-list 1:80"},
        {"codebook", "codebook --mode gaussian --energy 2 --words 16 --block-length 200 --seed 5 --threads 3"},
    };
    int compared = 0;
    for (const auto& [name, args] : commands) {
        const auto first = root / name / "a";
        const auto second = root / name / "b";
        const int rc1 = std::system((cli + " " + args + " --out-dir " + first.string() + " > /dev/null").c_str());
        o.check(rc1 == 0, name + " exit status");
        const int rc2 = std::system(
            (cli + " replay --manifest " + (first / "manifest.json").string() + " --out-dir " + second.string())
                .c_str());
        o.check(rc2 == 0, name + " replay exit status");
        for (const auto& entry : fs::directory_iterator(first)) {
            if (entry.path().filename() == "manifest.json")
                continue;
            const auto other = second / entry.path().filename();
            o.check(fs::exists(other) && slurp(entry.path()) == slurp(other), name + "/" +
                                                                                entry.path().filename().string() +
                                                                                " byte-identical");
            ++compared;
        }
    }
    // Thread count is not part of the numeric contract.
    const auto one = root / "threads1";
    const int rc = std::system((cli + " mc-homodyne --trials 20000 --n-list 2,4,6,8 --threads 1 --seed 99 --out-dir " +
                                one.string())
                                   .c_str());
    o.check(rc == 0 && slurp(one / "mc_points.csv") == slurp(root / "mc" / "a" / "mc_points.csv"),
            "mc-homodyne threads 1 vs 4 byte-identical");
    fs::remove_all(root);
    o.detail << " files_compared=" << compared;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    run(1, "region corners and detection ratio", 1.0, region_corners);
    run(2, "pure-state Chernoff oracle", 10.0, pure_state_chernoff);
    run(3, "sequence exponent of constant-energy types", 0.0, sequence_formula);
    run(4, "finite-n Helstrom/PGM regression", 5.0, finite_n_regression);
    run(5, "classical Monte Carlo exponent and Wilson coverage", 120.0, classical_monte_carlo);
    run(6, "truncation and product fidelity bounds", 1.0, truncation_bounds);
    run(7, "Gordon function and capacity ratio", 0.0, gordon_properties);
    run(8, "codebook power constraint and shaping", 0.0, codebook_constraints);
    run(9, "manifest replay determinism", 0.0, [&](Outcome& o) { determinism(o, cli); });
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

#include <benchmark/benchmark.h>

#include "blbc/chernoff.hpp"
#include "blbc/classical.hpp"
#include "blbc/codebook.hpp"
#include "blbc/discrimination.hpp"
#include "blbc/fock.hpp"
#include "blbc/region.hpp"

using namespace blbc;

static void BM_ChernoffNumeric(benchmark::State& state)
{
    const int cutoff = static_cast<int>(state.range(0));
    const auto rho = DensityOperator::pure(coherent_fock_vector(Amplitude(1.2, -0.3), cutoff));
    const auto sigma = DensityOperator::pure(coherent_fock_vector(Amplitude(-0.4, 0.8), cutoff));
    for (auto _ : state)
        benchmark::DoNotOptimize(chernoff_exponent_numeric(rho, sigma).exponent_nats);
}
BENCHMARK(BM_ChernoffNumeric)->Arg(20)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_PgmError(benchmark::State& state)
{
    std::vector<cplx> k;
    for (int i = 0; i < state.range(0); ++i)
        k.push_back(std::polar(1.0, 6.283185307179586 * i / static_cast<double>(state.range(0))));
    const HypothesisEnsemble ensemble(std::vector<Amplitude>(20, Amplitude(0.5)), k);
    for (auto _ : state) {
        const auto g = gram_matrix(ensemble);
        benchmark::DoNotOptimize(pgm_error(g));
    }
}
BENCHMARK(BM_PgmError)->Arg(2)->Arg(8)->Arg(32)->Arg(128);

static void BM_HomodyneMonteCarlo(benchmark::State& state)
{
    MCConfig cfg;
    cfg.trials = 100'000;
    const std::vector<double> word(static_cast<std::size_t>(state.range(0)), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_detection(1.0, {0.0, 1.0}, word, HomodyneModel{}, cfg).errors);
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(cfg.trials) * state.range(0));
}
BENCHMARK(BM_HomodyneMonteCarlo)->Arg(4)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_SampleCodebook(benchmark::State& state)
{
    const auto d = discretize_circular_gaussian(0.999, 5.0, 0.25);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_codebook(d.distribution, 16, 10'000, 1, 1.0).average_energy());
    state.SetItemsProcessed(state.iterations() * 160'000);
}
BENCHMARK(BM_SampleCodebook)->Unit(benchmark::kMillisecond);

static void BM_Gordon(benchmark::State& state)
{
    double x = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gordon_g(x));
        x = x < 1e6 ? x * 1.001 : 1e-6;
    }
}
BENCHMARK(BM_Gordon);
BENCHMARK_MAIN();

#pragma once

// Codeword and codebook construction over finite amplitude alphabets.

#include <cstdint>
#include <span>
#include <vector>

#include "blbc/types.hpp"

namespace blbc {

/// M words of n amplitudes each, stored row-major.
class Codebook {
public:
    Codebook(int words, int block_length, std::vector<Amplitude> symbols, double energy_budget);

    int size() const { return words_; }
    int block_length() const { return n_; }
    double energy_budget() const { return budget_; }
    std::span<const Amplitude> word(int m) const;
    const std::vector<Amplitude>& symbols() const { return symbols_; }

    /// (1/M) sum_m sum_j |x_mj|^2
    double mean_word_energy() const;
    /// mean_word_energy / n
    double average_energy() const { return mean_word_energy() / n_; }
    /// (1/M) sum_m sum_j |x_mj|^2 <= n E, allowing rel_tol relative excess.
    bool power_constraint_holds(double rel_tol = 1e-9) const;

private:
    int words_;
    int n_;
    std::vector<Amplitude> symbols_;
    double budget_;
};

struct CodeParameters {
    int n = 1;
    std::uint64_t M = 1;
    double rate_bits = 0.0;  // log2(M) / n
    double com_error = 0.0;
    double sen_error = 0.0;

    static CodeParameters make(int n, std::uint64_t M, double com_error = 0.0, double sen_error = 0.0);
};

struct Discretization {
    TypeDistribution distribution;
    double tv_gap;        // 1/2 sum_cells |p - mu(cell)| + mu(outside grid)
    double outside_mass;  // mu_F outside the grid
    double step;
    double halfwidth;     // effective, after rounding to whole cells
};

/// Cell-centre discretization of mu_F(x) = exp(-|x|^2/F) / (pi F) on a square grid.
Discretization discretize_circular_gaussian(double F, double halfwidth, double step);

/// F = E (1 - eps); keeps the sampled power constraint satisfied with high probability.
double default_shaping_variance(double energy, double eps = 1e-3);

/// i.i.d. symbols from p; word m draws from CounterStream(seed, m), so output is
/// identical for any thread count.
Codebook sample_codebook(const TypeDistribution& p, int words, int block_length, std::uint64_t seed,
                         double energy_budget, unsigned threads = 1);

/// Exact symbol frequencies, support sorted lexicographically by (Re, Im).
TypeDistribution empirical_type(std::span<const Amplitude> word);

/// Every symbol sqrt(E) exp(2 pi i j / q); word m spells m in base q.
Codebook constant_energy_codebook(double energy, std::uint64_t words, int block_length, int phases);

}  // namespace blbc

#pragma once

// Finite-blocklength discrimination of back-scattered coherent codewords
// |k a^n>, k in K. Pure-state ensembles reduce to their |K| x |K| Gram matrix,
// so error probabilities stay exact at block lengths in the hundreds.

#include <optional>
#include <vector>

#include "blbc/fit.hpp"
#include "blbc/fock.hpp"
#include "blbc/types.hpp"

namespace blbc {

class HypothesisEnsemble {
public:
    /// Duplicate reflectivities are collapsed. Priors default to uniform over the
    /// distinct set; explicit priors must match it in length.
    HypothesisEnsemble(std::vector<Amplitude> codeword, std::vector<cplx> reflectivities,
                       std::optional<std::vector<double>> priors = std::nullopt);

    const std::vector<Amplitude>& codeword() const { return codeword_; }
    const std::vector<cplx>& reflectivities() const { return k_; }
    const std::vector<double>& priors() const { return priors_; }
    double total_energy() const;

private:
    std::vector<Amplitude> codeword_;
    std::vector<cplx> k_;
    std::vector<double> priors_;
};

/// Hermitian PSD with unit diagonal.
class GramMatrix {
public:
    explicit GramMatrix(Matrix entries);

    const Matrix& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.rows()); }

private:
    Matrix entries_;
};

GramMatrix gram_matrix(const HypothesisEnsemble& e);

/// Minimum error for two pure states: (1 - sqrt(1 - 4p(1-p)|o|^2)) / 2,
/// evaluated without cancellation for small overlaps.
double helstrom_error(cplx overlap, double prior = 0.5);

/// G^{1/2}: binomial series near the identity, eigendecomposition otherwise.
Matrix gram_sqrt(const GramMatrix& g);

/// Pretty-good measurement error under uniform priors:
/// 1 - (1/r) sum_i (G^{1/2})_ii^2 = (1/r) sum_{i != j} |(G^{1/2})_ij|^2.
double pgm_error(const GramMatrix& g);

enum class DiscriminationMethod { helstrom, pgm };

/// Fits -ln P_e against n for constant-energy words (real amplitude sqrt(E) per mode).
ExponentFit exponent_regression(const ChannelFamily& family, double word_energy, const std::vector<int>& n_list,
                                DiscriminationMethod method);

/// 10 (r-1)^2 T^2 * sum_{i<j} q_ij / r^2.
double li_error_bound(const Eigen::MatrixXd& pairwise_q, int r, long long T);

/// ln T for the type-count bound T <= (n+1)^(floor(log2 n) |X|).
double type_count_log_bound(long long n, int alphabet_size);

struct OverheadCheck {
    double log_type_count;
    double log_f;
    double per_use_overhead;  // (1/n)[ln f(r,T) + ln C(r,2) + ln r]
    bool below_delta;
};

OverheadCheck detection_overhead(long long n, int r, int alphabet_size, double delta);

}  // namespace blbc

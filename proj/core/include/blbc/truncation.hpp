#pragma once

// Finite-dimensional approximation of coherent-state sequences: exact and bounded
// truncation fidelities and projectively approximated codewords.

#include <vector>

#include "blbc/fock.hpp"

namespace blbc {

/// Per-mode projector onto {|0>, ..., |local_cutoff>}, applied on `modes` modes.
struct ProjectorSpec {
    int local_cutoff = 0;
    int modes = 1;

    ProjectorSpec(int local_cutoff, int modes);
};

struct ApproximatedCodeword {
    std::vector<Amplitude> original;
    std::vector<DensityOperator> state;  // one unit-trace operator per mode
    /// Product of per-mode retained Poisson mass Tr(P |a><a|).
    double fidelity_to_original = 1.0;
    /// Product of per-mode <a|rho_a|a>.
    double state_fidelity = 1.0;
};

/// Tr(P_N |a><a|) = exp(-|a|^2) sum_{j<=N} |a|^{2j}/j!.
double truncation_fidelity_exact(const Amplitude& alpha, int cutoff);

/// 1 - truncation_fidelity_exact, summed from the tail when that side is small.
double truncation_tail_exact(const Amplitude& alpha, int cutoff);

/// 1 - (e * max{2, |a|^2} / N)^N. Negative (vacuous) values are returned as-is.
double truncation_fidelity_bound(const Amplitude& alpha, int cutoff);

struct ProductFidelity {
    double bound;  // 1 - n eps
    double exact;  // (1 - eps)^n
};

/// Product-state fidelity from a per-mode lower bound 1 - eps, eps in [0, 1).
ProductFidelity product_fidelity_bound(double eps, int modes);

/// Per mode: Q|a><a|Q + |0><0| (1 - Tr Q|a><a|Q).
ApproximatedCodeword approximate_codeword(const std::vector<Amplitude>& word, const ProjectorSpec& spec);

/// floor(log_base n) for n >= 2. Exact integer arithmetic for base 2.
int log_cutoff_for(long long n, double log_base = 2.0);

}  // namespace blbc

#include "blbc/discrimination.hpp"

#include <bit>
#include <cmath>
#include <numeric>

namespace blbc {

HypothesisEnsemble::HypothesisEnsemble(std::vector<Amplitude> codeword, std::vector<cplx> reflectivities,
                                       std::optional<std::vector<double>> priors)
    : codeword_(std::move(codeword))
{
    const std::size_t given = reflectivities.size();
    k_ = deduplicate(reflectivities);
    require(k_.size() >= 2, "HypothesisEnsemble: need at least 2 distinct reflectivities");
    if (priors) {
        require(k_.size() == given, "HypothesisEnsemble: explicit priors require distinct reflectivities");
        require(priors->size() == k_.size(), "HypothesisEnsemble: priors length differs from |K|");
        for (double p : *priors)
            require(std::isfinite(p) && p >= 0.0, "HypothesisEnsemble: priors must be non-negative");
        const double total = std::accumulate(priors->begin(), priors->end(), 0.0);
        require(std::abs(total - 1.0) <= 1e-12, "HypothesisEnsemble: priors must sum to 1");
        priors_ = std::move(*priors);
    } else {
        priors_.assign(k_.size(), 1.0 / static_cast<double>(k_.size()));
    }
}

double HypothesisEnsemble::total_energy() const
{
    double total = 0.0;
    for (const auto& a : codeword_)
        total += a.energy();
    return total;
}

GramMatrix::GramMatrix(Matrix entries) : entries_(std::move(entries))
{
    require(entries_.rows() >= 1 && entries_.rows() == entries_.cols(), "GramMatrix: must be square");
    for (Eigen::Index i = 0; i < entries_.rows(); ++i)
        require(std::abs(entries_(i, i) - 1.0) <= 1e-12, "GramMatrix: diagonal must be 1");
    const auto eig = hermitian_eigen(entries_, 1e-12);
    if (eig.values.minCoeff() < -1e-10)
        throw NumericalError("GramMatrix: not positive semidefinite");
}

GramMatrix gram_matrix(const HypothesisEnsemble& e)
{
    // <k a^n | k' a^n> = exp(S (-(|k|^2 + |k'|^2)/2 + conj(k) k')), S = sum_j |a_j|^2.
    const double total = e.total_energy();
    const auto& k = e.reflectivities();
    const auto r = static_cast<Eigen::Index>(k.size());
    Matrix g(r, r);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) {
            if (i == j) {
                g(i, j) = 1.0;
                continue;
            }
            const cplx log_entry = total * (-0.5 * (std::norm(k[i]) + std::norm(k[j])) + std::conj(k[i]) * k[j]);
            g(i, j) = std::exp(log_entry);
        }
    return GramMatrix(std::move(g));
}

double helstrom_error(cplx overlap, double prior)
{
    require(prior >= 0.0 && prior <= 1.0, "helstrom_error: prior must lie in [0, 1]");
    const double mag2 = std::norm(overlap);
    require(std::sqrt(mag2) <= 1.0 + 1e-12, "helstrom_error: |overlap| exceeds 1");
    const double x = std::min(1.0, 4.0 * prior * (1.0 - prior) * mag2);
    // 1 - sqrt(1 - x) = x / (1 + sqrt(1 - x))
    return 0.5 * x / (1.0 + std::sqrt(1.0 - x));
}

Matrix gram_sqrt(const GramMatrix& g)
{
    const Matrix& G = g.entries();
    const auto r = G.rows();
    const Matrix delta = G - Matrix::Identity(r, r);
    const double norm = delta.norm();  // Frobenius >= spectral
    if (norm <= 0.5) {
        // (I + D)^{1/2} = sum_m binom(1/2, m) D^m keeps tiny off-diagonals accurate.
        Matrix result = Matrix::Identity(r, r);
        Matrix power = delta;
        double coeff = 0.5;
        const double first = coeff * norm;
        for (int m = 1; m < 200; ++m) {
            const Matrix term = coeff * power;
            result += term;
            if (term.norm() <= 1e-18 * first || first == 0.0)
                break;
            power = power * delta;
            coeff *= (0.5 - m) / (m + 1.0);
        }
        return result;
    }
    return matrix_power(G, 0.5);
}

double pgm_error(const GramMatrix& g)
{
    const Matrix root = gram_sqrt(g);
    const auto r = root.rows();
    double off = 0.0;
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j)
            if (i != j)
                off += std::norm(root(i, j));
    return off / static_cast<double>(r);
}

ExponentFit exponent_regression(const ChannelFamily& family, double word_energy, const std::vector<int>& n_list,
                                DiscriminationMethod method)
{
    require(n_list.size() >= 2, "exponent_regression: need at least 2 block lengths");
    require(word_energy >= 0.0 && std::isfinite(word_energy), "exponent_regression: energy must be >= 0");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        require(n_list[i] >= 1, "exponent_regression: block lengths must be >= 1");
        if (i > 0)
            require(n_list[i] > n_list[i - 1], "exponent_regression: block lengths must increase");
    }
    const auto& k = family.reflectivities();
    if (method == DiscriminationMethod::helstrom)
        require(k.size() == 2, "exponent_regression: helstrom requires |K| = 2");

    const Amplitude symbol(std::sqrt(word_energy));
    std::vector<double> probs;
    for (int n : n_list) {
        const HypothesisEnsemble ensemble(std::vector<Amplitude>(n, symbol), k);
        const GramMatrix g = gram_matrix(ensemble);
        const double p = method == DiscriminationMethod::helstrom ? helstrom_error(g.entries()(0, 1)) : pgm_error(g);
        if (!(p >= 1e-300))
            throw NumericalError("exponent_regression: error probability underflows at n = " + std::to_string(n) +
                                 "; shrink the block-length list");
        probs.push_back(p);
    }
    return fit_exponent(n_list, std::move(probs));
}

double li_error_bound(const Eigen::MatrixXd& pairwise_q, int r, long long T)
{
    require(r >= 2, "li_error_bound: r must be >= 2");
    require(T >= 1, "li_error_bound: T must be >= 1");
    require(pairwise_q.rows() == r && pairwise_q.cols() == r, "li_error_bound: q must be r x r");
    double sum = 0.0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const double q = pairwise_q(i, j);
            require(q >= 0.0 && q <= 1.0, "li_error_bound: q entries must lie in [0, 1]");
            require(std::abs(q - pairwise_q(j, i)) <= 1e-12, "li_error_bound: q must be symmetric");
            if (i < j)
                sum += q;
        }
    const double rm1 = r - 1.0;
    const double t = static_cast<double>(T);
    return 10.0 * rm1 * rm1 * t * t * sum / (static_cast<double>(r) * r);
}

double type_count_log_bound(long long n, int alphabet_size)
{
    require(n >= 2, "type_count_log_bound: n must be >= 2");
    require(alphabet_size >= 1, "type_count_log_bound: alphabet size must be >= 1");
    const int local = std::bit_width(static_cast<unsigned long long>(n)) - 1;
    return static_cast<double>(local) * alphabet_size * std::log(static_cast<double>(n) + 1.0);
}

OverheadCheck detection_overhead(long long n, int r, int alphabet_size, double delta)
{
    require(r >= 2, "detection_overhead: r must be >= 2");
    OverheadCheck out{};
    out.log_type_count = type_count_log_bound(n, alphabet_size);
    const double rm1 = r - 1.0;
    out.log_f = std::log(10.0 * rm1 * rm1) + 2.0 * out.log_type_count;
    const double log_pairs = std::log(r * (r - 1.0) / 2.0);
    out.per_use_overhead = (out.log_f + log_pairs + std::log(static_cast<double>(r))) / static_cast<double>(n);
    out.below_delta = out.per_use_overhead < delta;
    return out;
}

}  // namespace blbc

#pragma once

// Dense linear algebra for single-mode states in a truncated photon-number basis.

#include <Eigen/Dense>

#include "blbc/amplitude.hpp"

namespace blbc {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct FockTolerances {
    double hermitian = 1e-12;
    double negative_eigenvalue = 1e-10;
    double trace = 1e-9;
    double norm_excess = 1e-12;
};

/// Coefficients of a state in {|0>, ..., |N>}. Truncation may only lose mass.
class FockVector {
public:
    FockVector(Vector coefficients, const FockTolerances& tol = {});

    int cutoff() const { return static_cast<int>(coefficients_.size()) - 1; }
    int dimension() const { return static_cast<int>(coefficients_.size()); }
    const Vector& coefficients() const { return coefficients_; }
    double squared_norm() const { return coefficients_.squaredNorm(); }

private:
    Vector coefficients_;
};

/// Hermitian PSD matrix on a truncated Fock space.
class DensityOperator {
public:
    /// Validates hermiticity and positivity. The unit-trace check applies only
    /// when require_unit_trace is set; truncated pure states carry trace < 1.
    explicit DensityOperator(Matrix m, bool require_unit_trace = true, const FockTolerances& tol = {});

    static DensityOperator pure(const FockVector& psi);

    int cutoff() const { return static_cast<int>(matrix_.rows()) - 1; }
    int dimension() const { return static_cast<int>(matrix_.rows()); }
    const Matrix& matrix() const { return matrix_; }
    double trace() const { return matrix_.trace().real(); }

private:
    struct Unchecked {};
    DensityOperator(Matrix m, Unchecked) : matrix_(std::move(m)) {}

    Matrix matrix_;
};

/// Eigenvalues below this are treated as exact zeros before fractional powers.
inline constexpr double kEigenClip = 1e-14;

/// <beta|gamma> = exp(-|beta|^2/2 - |gamma|^2/2 + conj(beta) gamma).
cplx coherent_overlap(const Amplitude& beta, const Amplitude& gamma);

/// Coefficient j = exp(-|a|^2/2) a^j / sqrt(j!), assembled in log space.
FockVector coherent_fock_vector(const Amplitude& alpha, int cutoff);

/// Hermitian eigendecomposition with ascending real eigenvalues.
struct HermitianEigen {
    Eigen::VectorXd values;
    Matrix vectors;
};
HermitianEigen hermitian_eigen(const Matrix& m, double hermitian_tol = FockTolerances{}.hermitian);

/// rho^s through the spectral decomposition. Eigenvalues below kEigenClip map
/// to 0 for every s in [0, 1] (0^0 := 0), so s = 0 yields the support projector.
Matrix matrix_power(const Matrix& m, double s);
Matrix matrix_power(const DensityOperator& rho, double s);

/// <psi|rho|psi>.
double fidelity(const DensityOperator& rho, const FockVector& psi);

/// Half the sum of absolute eigenvalues of rho - sigma.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

}  // namespace blbc

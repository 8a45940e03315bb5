#include "blbc/fock.hpp"

#include <cmath>
#include <string>

namespace blbc {

namespace {

double hermitian_defect(const Matrix& m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_same_dimension(int a, int b, const char* where)
{
    require(a == b, std::string(where) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                        std::to_string(b) + ")");
}

}  // namespace

FockVector::FockVector(Vector coefficients, const FockTolerances& tol) : coefficients_(std::move(coefficients))
{
    require(coefficients_.size() >= 1, "FockVector: empty coefficient vector");
    require(coefficients_.allFinite(), "FockVector: non-finite coefficient");
    require(coefficients_.squaredNorm() <= 1.0 + tol.norm_excess, "FockVector: squared norm exceeds 1");
}

DensityOperator::DensityOperator(Matrix m, bool require_unit_trace, const FockTolerances& tol) : matrix_(std::move(m))
{
    require(matrix_.rows() >= 1 && matrix_.rows() == matrix_.cols(), "DensityOperator: matrix must be square");
    require(matrix_.allFinite(), "DensityOperator: non-finite entry");
    require(hermitian_defect(matrix_) <= tol.hermitian, "DensityOperator: not Hermitian");
    const auto eig = hermitian_eigen(matrix_, tol.hermitian);
    require(eig.values.minCoeff() >= -tol.negative_eigenvalue, "DensityOperator: negative eigenvalue");
    if (require_unit_trace)
        require(std::abs(trace() - 1.0) <= tol.trace, "DensityOperator: trace differs from 1");
}

DensityOperator DensityOperator::pure(const FockVector& psi)
{
    const Vector& v = psi.coefficients();
    return DensityOperator(Matrix(v * v.adjoint()), Unchecked{});
}

cplx coherent_overlap(const Amplitude& beta, const Amplitude& gamma)
{
    const cplx exponent = -0.5 * beta.energy() - 0.5 * gamma.energy() + std::conj(beta.value()) * gamma.value();
    return std::exp(exponent);
}

FockVector coherent_fock_vector(const Amplitude& alpha, int cutoff)
{
    require(cutoff >= 0, "coherent_fock_vector: cutoff must be >= 0");
    Vector c = Vector::Zero(cutoff + 1);
    const double energy = alpha.energy();
    if (energy == 0.0) {
        c(0) = 1.0;
        return FockVector(std::move(c));
    }
    const double log_mag = 0.5 * std::log(energy);
    const double phase = std::arg(alpha.value());
    for (int j = 0; j <= cutoff; ++j) {
        const double log_abs = -0.5 * energy + j * log_mag - 0.5 * std::lgamma(j + 1.0);
        c(j) = std::polar(std::exp(log_abs), j * phase);
    }
    return FockVector(std::move(c));
}

HermitianEigen hermitian_eigen(const Matrix& m, double hermitian_tol)
{
    require(m.rows() == m.cols(), "hermitian_eigen: matrix must be square");
    require(hermitian_defect(m) <= hermitian_tol, "hermitian_eigen: matrix is not Hermitian within tolerance");
    // Symmetrize so the solver sees an exactly Hermitian input.
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("hermitian_eigen: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix matrix_power(const Matrix& m, double s)
{
    require(s >= 0.0 && s <= 1.0, "matrix_power: exponent must lie in [0, 1]");
    const auto eig = hermitian_eigen(m);
    Eigen::VectorXd powered(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        const double lambda = eig.values(i);
        powered(i) = lambda < kEigenClip ? 0.0 : std::pow(lambda, s);
    }
    return eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
}

Matrix matrix_power(const DensityOperator& rho, double s)
{
    return matrix_power(rho.matrix(), s);
}

double fidelity(const DensityOperator& rho, const FockVector& psi)
{
    require_same_dimension(rho.dimension(), psi.dimension(), "fidelity");
    const Vector& v = psi.coefficients();
    return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma)
{
    require_same_dimension(rho.dimension(), sigma.dimension(), "trace_distance");
    const auto eig = hermitian_eigen(rho.matrix() - sigma.matrix());
    return 0.5 * eig.values.cwiseAbs().sum();
}

}  // namespace blbc

#include "mltomo/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace mltomo {

namespace {

// Eigenvalues of a physical state may dip to -1e-10 from round-off; anything
// lower is a genuine violation, not noise.
constexpr double kEigenvalueNoise = 1e-10;

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, RealVector eigenvalues,
                             ComplexMatrix eigenvectors)
    : matrix_(std::move(m)), eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)) {}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix &m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw DimensionMismatch("density matrix must be square with dim >= 1");
    }
    if (hermiticity_defect(m) > kHermitianTol) {
        throw NonHermitianInput("density matrix is not Hermitian");
    }
    const double trace = m.trace().real();
    if (std::abs(trace - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "density matrix trace " << trace << " is not 1";
        throw PhysicalityViolation(msg.str());
    }
    Eigensystem eig = hermitian_eigendecomposition(m);
    if (eig.eigenvalues.minCoeff() < -kEigenvalueNoise) {
        std::ostringstream msg;
        msg << "density matrix has negative eigenvalue "
            << eig.eigenvalues.minCoeff();
        throw PhysicalityViolation(msg.str());
    }
    RealVector clamped = eig.eigenvalues.cwiseMax(0.0);
    return DensityMatrix(hermitize(m), std::move(clamped),
                         std::move(eig.eigenvectors));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (dim < 1) {
        throw DimensionMismatch("dim must be >= 1");
    }
    const double p = 1.0 / static_cast<double>(dim);
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) * p,
                         RealVector::Constant(dim, p),
                         ComplexMatrix::Identity(dim, dim));
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
    const double len = std::sqrt(x * x + y * y + z * z);
    if (len > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "Bloch vector length " << len << " exceeds 1";
        throw PhysicalityViolation(msg.str());
    }
    ComplexMatrix m(2, 2);
    m(0, 0) = Complex(0.5 * (1.0 + z), 0.0);
    m(1, 1) = Complex(0.5 * (1.0 - z), 0.0);
    m(0, 1) = Complex(0.5 * x, -0.5 * y);
    m(1, 0) = Complex(0.5 * x, 0.5 * y);
    return from_matrix(m);
}

std::array<double, 3> DensityMatrix::bloch_vector() const {
    if (dim() != 2) {
        throw DimensionMismatch("Bloch vector is defined for dim 2 only");
    }
    return {2.0 * matrix_(1, 0).real(), 2.0 * matrix_(1, 0).imag(),
            (matrix_(0, 0) - matrix_(1, 1)).real()};
}

int DensityMatrix::support_dimension(double rank_tol) const {
    return static_cast<int>((eigenvalues_.array() > rank_tol).count());
}

ComplexMatrix DensityMatrix::support_projector(double rank_tol) const {
    ComplexMatrix p = ComplexMatrix::Zero(dim(), dim());
    for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
        if (eigenvalues_(k) > rank_tol) {
            p += eigenvectors_.col(k) * eigenvectors_.col(k).adjoint();
        }
    }
    return p;
}

double born_probability(const DensityMatrix &state, const Effect &effect) {
    if (state.dim() != effect.dim()) {
        std::ostringstream msg;
        msg << "state dim " << state.dim() << " != effect dim "
            << effect.dim();
        throw DimensionMismatch(msg.str());
    }
    const Complex value =
        (effect.vector().adjoint() * state.matrix() * effect.vector())(0, 0);
    if (std::abs(value.imag()) > 1e-12) {
        throw Error("Born probability has a non-real residue");
    }
    return std::clamp(value.real(), 0.0, 1.0);
}

DensityMatrix project_to_physical(const ComplexMatrix &m) {
    Eigensystem eig = hermitian_eigendecomposition(m);
    RealVector clamped = eig.eigenvalues.cwiseMax(0.0);
    const double total = clamped.sum();
    if (total <= 0.0) {
        throw ZeroTraceAfterClamp(
            "no positive eigenvalue survives the physicality clamp");
    }
    clamped /= total;
    ComplexMatrix repaired = eig.eigenvectors *
                             clamped.asDiagonal().toDenseMatrix().cast<Complex>() *
                             eig.eigenvectors.adjoint();
    return DensityMatrix::from_matrix(hermitize(repaired));
}

} // namespace mltomo

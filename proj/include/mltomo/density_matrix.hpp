#pragma once

#include <array>

#include "mltomo/effect.hpp"
#include "mltomo/linalg.hpp"

namespace mltomo {

/// Unit-trace positive-semidefinite Hermitian matrix, kept together with its
/// eigendecomposition (eigenvalues ascending, clamped at zero).
class DensityMatrix {
  public:
    /// Validates Hermiticity, unit trace within 1e-10 and eigenvalues
    /// >= -1e-10; eigenvalues within that margin are clamped to zero.
    static DensityMatrix from_matrix(const ComplexMatrix &m);

    static DensityMatrix maximally_mixed(Eigen::Index dim);

    /// Qubit state (I + v.sigma)/2 for a Bloch vector with |v| <= 1.
    static DensityMatrix from_bloch(double x, double y, double z);

    const ComplexMatrix &matrix() const { return matrix_; }
    const RealVector &eigenvalues() const { return eigenvalues_; }
    const ComplexMatrix &eigenvectors() const { return eigenvectors_; }
    Eigen::Index dim() const { return matrix_.rows(); }

    /// (Tr(rho sigma_x), Tr(rho sigma_y), Tr(rho sigma_z)); dim 2 only.
    std::array<double, 3> bloch_vector() const;

    /// Number of eigenvalues above rank_tol.
    int support_dimension(double rank_tol) const;

    /// Projector onto the span of eigenvectors with eigenvalue > rank_tol.
    ComplexMatrix support_projector(double rank_tol) const;

  private:
    DensityMatrix(ComplexMatrix m, RealVector eigenvalues,
                  ComplexMatrix eigenvectors);

    ComplexMatrix matrix_;
    RealVector eigenvalues_;
    ComplexMatrix eigenvectors_;
};

/// Born rule <y|rho|y>, clamped to [0, 1].
double born_probability(const DensityMatrix &state, const Effect &effect);

/// Nearest-physical repair: clamps negative eigenvalues at zero and rescales
/// to unit trace. Idempotent on already-physical input. Raises
/// ZeroTraceAfterClamp when nothing positive survives.
DensityMatrix project_to_physical(const ComplexMatrix &m);

} // namespace mltomo

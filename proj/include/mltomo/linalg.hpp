#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mltomo/errors.hpp"

namespace mltomo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Relative tolerance for treating a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

/// Max-entry norm: the largest absolute value over all entries.
double max_abs(const ComplexMatrix &m);

/// Largest |m - m^dagger| entry relative to the largest |m| entry.
double hermiticity_defect(const ComplexMatrix &m);

bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTol);

/// (m + m^dagger) / 2. Removes accumulated asymmetry noise.
ComplexMatrix hermitize(const ComplexMatrix &m);

struct Eigensystem {
    RealVector eigenvalues;   // ascending
    ComplexMatrix eigenvectors; // column k pairs with eigenvalues[k]
};

/// Diagonalizes a Hermitian matrix. The input is symmetrized before the
/// decomposition; asymmetry beyond tolerance raises NonHermitianInput.
/// Eigenvalues come back ascending with orthonormal eigenvector columns.
Eigensystem hermitian_eigendecomposition(const ComplexMatrix &m,
                                         double tol = 1e-10);

} // namespace mltomo

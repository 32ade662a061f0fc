#include "mltomo/linalg.hpp"

#include <sstream>

namespace mltomo {

double max_abs(const ComplexMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix &m) {
    const double scale = max_abs(m);
    if (scale == 0.0) {
        return 0.0;
    }
    return max_abs(m - m.adjoint()) / scale;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

ComplexMatrix hermitize(const ComplexMatrix &m) {
    return 0.5 * (m + m.adjoint().eval());
}

Eigensystem hermitian_eigendecomposition(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw DimensionMismatch("eigendecomposition requires a square matrix");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: relative asymmetry " << defect
            << " exceeds tolerance " << tol;
        throw NonHermitianInput(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(m));
    if (solver.info() != Eigen::Success) {
        throw Error("Hermitian eigendecomposition failed to converge");
    }
    return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

} // namespace mltomo

#include "mltomo/metrics.hpp"

#include <cmath>

namespace mltomo {

namespace {

ComplexMatrix matrix_sqrt(const ComplexMatrix &m) {
    Eigensystem eig = hermitian_eigendecomposition(m);
    RealVector roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors *
           roots.asDiagonal().toDenseMatrix().cast<Complex>() *
           eig.eigenvectors.adjoint();
}

double fidelity_2x2(const ComplexMatrix &a, const ComplexMatrix &b) {
    const double overlap = (a * b).trace().real();
    const double det_a = a.determinant().real();
    const double det_b = b.determinant().real();
    const double cross = std::max(0.0, det_a) * std::max(0.0, det_b);
    return overlap + 2.0 * std::sqrt(std::max(0.0, cross));
}

double fidelity_general(const ComplexMatrix &a, const ComplexMatrix &b) {
    const ComplexMatrix root_a = matrix_sqrt(a);
    Eigensystem inner = hermitian_eigendecomposition(root_a * b * root_a);
    const double trace_root =
        inner.eigenvalues.cwiseMax(0.0).cwiseSqrt().sum();
    return trace_root * trace_root;
}

} // namespace

double fidelity(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("fidelity needs matching dimensions");
    }
    const double value = a.dim() == 2
                             ? fidelity_2x2(a.matrix(), b.matrix())
                             : fidelity_general(a.matrix(), b.matrix());
    return std::clamp(value, 0.0, 1.0);
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("trace distance needs matching dimensions");
    }
    Eigensystem eig = hermitian_eigendecomposition(a.matrix() - b.matrix());
    return 0.5 * eig.eigenvalues.cwiseAbs().sum();
}

} // namespace mltomo

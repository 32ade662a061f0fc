#include "mltomo/linear_inversion.hpp"

#include <cmath>

namespace mltomo {

namespace {

constexpr double kSingularValueCutoff = 1e-10;

// Orthonormal real coordinates for Hermitian matrices under Tr(AB): the
// diagonal entries, then sqrt(2) Re / sqrt(2) Im of each upper off-diagonal.
RealVector hermitian_coordinates(const ComplexMatrix &h) {
    const Eigen::Index d = h.rows();
    RealVector x(d * d);
    Eigen::Index idx = 0;
    for (Eigen::Index j = 0; j < d; ++j) {
        x(idx++) = h(j, j).real();
    }
    const double s = std::sqrt(2.0);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            x(idx++) = s * h(j, k).real();
            x(idx++) = s * h(j, k).imag();
        }
    }
    return x;
}

ComplexMatrix hermitian_from_coordinates(const RealVector &x, Eigen::Index d) {
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    Eigen::Index idx = 0;
    for (Eigen::Index j = 0; j < d; ++j) {
        h(j, j) = x(idx++);
    }
    const double s = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = j + 1; k < d; ++k) {
            const double re = x(idx++) * s;
            const double im = x(idx++) * s;
            h(j, k) = Complex(re, im);
            h(k, j) = Complex(re, -im);
        }
    }
    return h;
}

} // namespace

ComplexMatrix linear_inversion_raw(const Dataset &data) {
    const Eigen::Index d = data.dim();
    const Eigen::Index n_coords = d * d;
    const Eigen::Index n_rows = static_cast<Eigen::Index>(data.size()) + 1;

    RealMatrix a(n_rows, n_coords);
    RealVector b(n_rows);
    for (std::size_t i = 0; i < data.size(); ++i) {
        a.row(static_cast<Eigen::Index>(i)) =
            hermitian_coordinates(data.records()[i].effect.projector());
        b(static_cast<Eigen::Index>(i)) = data.frequency(i);
    }
    a.row(n_rows - 1) =
        hermitian_coordinates(ComplexMatrix::Identity(d, d));
    b(n_rows - 1) = 1.0;

    Eigen::BDCSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector &sigma = svd.singularValues();
    RealVector projected = svd.matrixU().transpose() * b;
    for (Eigen::Index k = 0; k < sigma.size(); ++k) {
        projected(k) =
            sigma(k) > kSingularValueCutoff ? projected(k) / sigma(k) : 0.0;
    }
    const RealVector x = svd.matrixV() * projected;
    return hermitian_from_coordinates(x, d);
}

DensityMatrix estimate_linear_inversion(const Dataset &data) {
    return project_to_physical(linear_inversion_raw(data));
}

} // namespace mltomo

#pragma once

#include "mltomo/dataset.hpp"
#include "mltomo/density_matrix.hpp"

namespace mltomo {

/// Least-norm least-squares solution of <y_i|rho|y_i> = f_i together with
/// Tr rho = 1 as an extra equation, over the real coordinate space of
/// Hermitian matrices. Singular values below 1e-10 are treated as zero.
/// The result is Hermitian but not necessarily physical.
ComplexMatrix linear_inversion_raw(const Dataset &data);

/// linear_inversion_raw followed by the physicality projection.
DensityMatrix estimate_linear_inversion(const Dataset &data);

} // namespace mltomo

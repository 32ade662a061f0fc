#pragma once

#include "mltomo/density_matrix.hpp"

namespace mltomo {

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2 in [0, 1]. Dim 2 uses the
/// closed form Tr(ab) + 2 sqrt(det a det b); higher dims take matrix square
/// roots through the eigendecomposition.
double fidelity(const DensityMatrix &a, const DensityMatrix &b);

/// Half the sum of absolute eigenvalues of a - b.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

} // namespace mltomo

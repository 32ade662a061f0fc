#pragma once

#include <array>

#include "mltomo/plan.hpp"

namespace mltomo {

/// Parametrizations understood by the Fisher-information calculator.
enum class Parametrization {
    BlochCoordinates, // qubit rho = (I + theta.sigma)/2
};

/// Bloch direction n of a qubit rank-one projector |y><y| = (I + n.sigma)/2.
std::array<double, 3> bloch_direction(const Effect &effect);

/// Per-shot Fisher information matrix of the plan at the true state,
/// I_jk = sum_o w_o sum_i (1/p_i) dp_i/dtheta_j dp_i/dtheta_k with
/// w_o = shots_o / N_total and analytic derivatives of
/// p_i = (1 + n_i.theta)/2. Dim 2 only. Raises SingularProbability when an
/// outcome probability falls to zero.
RealMatrix fisher_information(const DensityMatrix &true_state,
                              const MeasurementPlan &plan,
                              Parametrization parametrization =
                                  Parametrization::BlochCoordinates);

} // namespace mltomo

#pragma once

#include <vector>

#include "mltomo/effect.hpp"

namespace mltomo {

/// Qubit eigenbasis of sigma_x, sigma_y or sigma_z. Labels are "x+", "x-", ...
ObservableBasis pauli_basis(char axis);

/// The three Pauli bases in x, y, z order: the standard six-outcome qubit
/// tomography plan.
std::vector<ObservableBasis> pauli6_bases();

/// Mutually unbiased bases for prime dimension d: the computational basis
/// plus d quadratic-phase bases, d+1 in total. Every cross-basis overlap has
/// |<a|b>|^2 = 1/d.
std::vector<ObservableBasis> mub_bases(int dim);

} // namespace mltomo

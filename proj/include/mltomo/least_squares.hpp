#pragma once

#include <string>
#include <vector>

#include "mltomo/likelihood.hpp"

namespace mltomo {

struct LsResult {
    DensityMatrix estimate;
    double objective = 0.0;         // sum_i (rho_ii - f_i)^2
    double extremal_residual = 0.0; // max-entry norm of G rho - lambda rho
    double lambda = 0.0;            // 2 sum_i (rho_ii - f_i) rho_ii
    bool converged = false;
    int iterations = 0;
};

/// sum_i (<y_i|rho|y_i> - f_i)^2.
double ls_objective(const DensityMatrix &state, const Dataset &data);

/// 2 sum_i (rho_ii - f_i) rho_ii, the least-squares Lagrange multiplier.
double ls_lambda(const DensityMatrix &state, const Dataset &data);

/// Residual of the least-squares extremal equation,
/// max-entry norm of 2 sum_i (rho_ii - f_i)|y_i><y_i| rho - lambda rho.
double ls_extremal_residual(const DensityMatrix &state, const Dataset &data);

/// Minimizes the squared probability misfit over physical states by descent
/// on rho = T^dagger T / Tr(T^dagger T). Each step backtracks from a fixed
/// step size until the objective decreases.
LsResult estimate_ls(const Dataset &data, const EstimatorConfig &config = {});

struct LsPovmCheck {
    std::string outcome;
    double expectation = 0.0;  // Tr(rho E_i), E_i = 2 (rho_ii - f_i)/lambda |y_i><y_i|
    double frequency = 0.0;    // f_i, for comparison against the expectation
    double identity_gap = 0.0; // |Tr(rho E_i) - 2 (rho_ii - f_i) rho_ii / lambda|
};

/// Builds the least-squares POVM elements and evaluates their expectation
/// values against the closed form. The point of the exercise: the
/// expectations are an implicit function of the data, not the frequencies
/// themselves. Raises DegenerateLambda on exact fits (lambda = 0).
std::vector<LsPovmCheck> check_ls_povm(const DensityMatrix &state,
                                       const Dataset &data);

std::vector<LsPovmCheck> check_ls_povm(const LsResult &result,
                                       const Dataset &data);

} // namespace mltomo

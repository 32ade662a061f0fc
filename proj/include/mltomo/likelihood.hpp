#pragma once

#include <optional>
#include <vector>

#include "mltomo/dataset.hpp"
#include "mltomo/density_matrix.hpp"

namespace mltomo {

enum class InitialState {
    MaximallyMixed,
    Provided,
};

struct EstimatorConfig {
    double tolerance = 1e-8;       // fixed-point residual threshold
    int max_iterations = 10000;
    double dilution = 1.0;         // 1.0 = undiluted R rho R step
    double floor = 1e-12;          // probability floor for rho_ii
    InitialState initial_state = InitialState::MaximallyMixed;
    std::optional<DensityMatrix> provided_state;

    void validate() const;
};

struct EstimationResult {
    DensityMatrix estimate;
    std::vector<double> log_likelihood_trace; // nats per shot, one per iterate
    int iterations = 0;
    double fixed_point_residual = 0.0; // max-entry norm of R rho - rho
    bool converged = false;
};

/// Log likelihood per shot, sum_i f_i ln rho_ii. Records with f_i = 0
/// contribute nothing; rho_ii below the floor is clamped inside the log so
/// boundary states score -inf-like but finite.
double log_likelihood(const DensityMatrix &state, const Dataset &data,
                      double floor = 1e-12);

/// The nonlinear-equation operator R = sum_i (f_i / rho_ii) |y_i><y_i|,
/// zero-frequency records omitted, rho_ii floored.
ComplexMatrix build_r(const DensityMatrix &state, const Dataset &data,
                      double floor = 1e-12);

/// Maximum-likelihood state via the diluted fixed-point iteration
/// rho -> normalize(R_mu rho R_mu), R_mu = (1-mu) I + mu R. Each step starts
/// at mu = config.dilution and halves on likelihood decrease (up to 30
/// times) before declaring stagnation.
EstimationResult estimate_ml(const Dataset &data,
                             const EstimatorConfig &config = {});

/// Max-entry norm of R rho - rho; zero exactly at a solution of the
/// extremal equation with the multiplier normalized to 1.
double extremal_residual(const DensityMatrix &state, const Dataset &data,
                         double floor = 1e-12);

struct ExpectationCheck {
    std::string outcome;
    double lhs = 0.0;       // Tr((f_i / rho_ii) |y_i><y_i| rho)
    double frequency = 0.0; // f_i
    double gap = 0.0;       // |lhs - f_i|
    bool floored = false;   // rho_ii fell below the floor with f_i > 0
};

/// Per-record check of the expectation-value condition. At any state with
/// un-floored rho_ii the identity Tr(|y><y| rho) = rho_ii makes every gap
/// vanish; floored records are reported with the clamped ratio.
std::vector<ExpectationCheck>
check_expectation_condition(const DensityMatrix &state, const Dataset &data,
                            double floor = 1e-12);

/// Residual of the identity decomposition on the state's support: max-entry
/// norm of P R P - P where P projects onto eigenvalues above rank_tol.
double check_subspace_completeness(const DensityMatrix &state,
                                   const Dataset &data, double rank_tol,
                                   double floor = 1e-12);

} // namespace mltomo

#pragma once

#include <map>
#include <string>
#include <vector>

#include "mltomo/fisher.hpp"
#include "mltomo/likelihood.hpp"
#include "mltomo/plan.hpp"

namespace mltomo {

enum class EstimatorKind {
    MaximumLikelihood,
    LeastSquares,
    LinearInversion,
};

std::string estimator_name(EstimatorKind kind);

enum class SamplingMode {
    Sampled,
    ExactFrequencies,
};

/// Accumulated Monte Carlo statistics for one estimator.
struct EstimatorStats {
    double mean_fidelity = 0.0;
    double mean_trace_distance = 0.0;
    std::array<double, 3> bias{0.0, 0.0, 0.0};     // mean(v_hat - v_true)
    std::array<double, 3> variance{0.0, 0.0, 0.0}; // per Bloch component
    int excluded_trials = 0; // non-converged runs, left out of the means
};

struct EnsembleReport {
    int trials = 0;
    std::uint64_t shots_per_trial = 0;
    std::map<EstimatorKind, EstimatorStats> statistics;
    std::array<double, 3> crb_variance{0.0, 0.0, 0.0}; // diag(I^-1)/N, dim 2
    bool has_crb = false;
};

/// Runs `trials` independent synthetic experiments. Trial t reseeds the plan
/// deterministically from plan.seed + t, samples a dataset, runs every
/// requested estimator and accumulates bias/variance/fidelity statistics in
/// trial order. Bias and variance apply to dim 2 (Bloch coordinates); the
/// Cramer-Rao prediction is attached whenever the Fisher matrix exists.
EnsembleReport run_ensemble(const DensityMatrix &true_state,
                            const MeasurementPlan &plan, int trials,
                            const std::vector<EstimatorKind> &estimators,
                            const EstimatorConfig &config = {},
                            SamplingMode mode = SamplingMode::Sampled);

} // namespace mltomo

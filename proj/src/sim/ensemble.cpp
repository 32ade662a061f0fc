#include "mltomo/ensemble.hpp"

#include <cmath>

#include "mltomo/least_squares.hpp"
#include "mltomo/linear_inversion.hpp"
#include "mltomo/metrics.hpp"

namespace mltomo {

namespace {

struct Accumulator {
    int included = 0;
    int excluded = 0;
    double fidelity_sum = 0.0;
    double distance_sum = 0.0;
    std::array<double, 3> delta_sum{0.0, 0.0, 0.0};
    std::array<double, 3> delta_sq_sum{0.0, 0.0, 0.0};
};

struct TrialEstimate {
    DensityMatrix state;
    bool converged;
};

TrialEstimate run_estimator(EstimatorKind kind, const Dataset &data,
                            const EstimatorConfig &config) {
    switch (kind) {
    case EstimatorKind::MaximumLikelihood: {
        EstimationResult r = estimate_ml(data, config);
        return {std::move(r.estimate), r.converged};
    }
    case EstimatorKind::LeastSquares: {
        LsResult r = estimate_ls(data, config);
        return {std::move(r.estimate), r.converged};
    }
    case EstimatorKind::LinearInversion:
        return {estimate_linear_inversion(data), true};
    }
    throw InvalidConfig("unknown estimator kind");
}

} // namespace

std::string estimator_name(EstimatorKind kind) {
    switch (kind) {
    case EstimatorKind::MaximumLikelihood:
        return "ml";
    case EstimatorKind::LeastSquares:
        return "ls";
    case EstimatorKind::LinearInversion:
        return "linear";
    }
    return "unknown";
}

EnsembleReport run_ensemble(const DensityMatrix &true_state,
                            const MeasurementPlan &plan, int trials,
                            const std::vector<EstimatorKind> &estimators,
                            const EstimatorConfig &config, SamplingMode mode) {
    if (trials < 1) {
        throw InvalidConfig("trials must be >= 1");
    }
    plan.validate();
    const bool bloch = true_state.dim() == 2;
    std::array<double, 3> v_true{0.0, 0.0, 0.0};
    if (bloch) {
        v_true = true_state.bloch_vector();
    }

    std::map<EstimatorKind, Accumulator> accumulators;
    for (EstimatorKind kind : estimators) {
        accumulators.emplace(kind, Accumulator{});
    }

    EnsembleReport report;
    report.trials = trials;
    for (std::uint64_t s : plan.shots_per_observable) {
        report.shots_per_trial += s;
    }

    for (int t = 0; t < trials; ++t) {
        MeasurementPlan trial_plan = plan;
        trial_plan.seed = plan.seed + static_cast<std::uint64_t>(t);
        const Dataset data = mode == SamplingMode::Sampled
                                 ? sample_dataset(true_state, trial_plan)
                                 : exact_dataset(true_state, trial_plan);
        for (EstimatorKind kind : estimators) {
            Accumulator &acc = accumulators.at(kind);
            const TrialEstimate estimate = run_estimator(kind, data, config);
            if (!estimate.converged) {
                ++acc.excluded;
                continue;
            }
            ++acc.included;
            acc.fidelity_sum += fidelity(estimate.state, true_state);
            acc.distance_sum += trace_distance(estimate.state, true_state);
            if (bloch) {
                const std::array<double, 3> v = estimate.state.bloch_vector();
                for (int j = 0; j < 3; ++j) {
                    const double delta = v[j] - v_true[j];
                    acc.delta_sum[j] += delta;
                    acc.delta_sq_sum[j] += delta * delta;
                }
            }
        }
    }

    for (EstimatorKind kind : estimators) {
        const Accumulator &acc = accumulators.at(kind);
        EstimatorStats stats;
        stats.excluded_trials = acc.excluded;
        if (acc.included > 0) {
            const double n = static_cast<double>(acc.included);
            stats.mean_fidelity = acc.fidelity_sum / n;
            stats.mean_trace_distance = acc.distance_sum / n;
            for (int j = 0; j < 3; ++j) {
                const double mean = acc.delta_sum[j] / n;
                stats.bias[j] = mean;
                stats.variance[j] =
                    std::max(0.0, acc.delta_sq_sum[j] / n - mean * mean);
            }
        }
        report.statistics.emplace(kind, stats);
    }

    if (bloch) {
        try {
            const RealMatrix info = fisher_information(true_state, plan);
            const RealMatrix inverse = info.inverse();
            const double n = static_cast<double>(report.shots_per_trial);
            for (int j = 0; j < 3; ++j) {
                report.crb_variance[j] = inverse(j, j) / n;
            }
            report.has_crb = true;
        } catch (const SingularProbability &) {
            report.has_crb = false;
        }
    }
    return report;
}

} // namespace mltomo

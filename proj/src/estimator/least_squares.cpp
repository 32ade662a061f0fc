#include "mltomo/least_squares.hpp"

#include <cmath>
#include <utility>

namespace mltomo {

namespace {

constexpr double kInitialStep = 0.5;
constexpr int kMaxHalvings = 40;

struct Misfit {
    double objective = 0.0;
    double lambda = 0.0;
    ComplexMatrix gradient; // G = 2 sum_i (rho_ii - f_i) |y_i><y_i|
};

Misfit evaluate_misfit(const ComplexMatrix &rho, const Dataset &data) {
    const Eigen::Index d = rho.rows();
    Misfit m;
    m.gradient = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const ComplexVector &y = data.records()[i].effect.vector();
        const double p = (y.adjoint() * rho * y)(0, 0).real();
        const double delta = p - data.frequency(i);
        m.objective += delta * delta;
        m.gradient += 2.0 * delta * (y * y.adjoint());
        m.lambda += 2.0 * delta * p;
    }
    return m;
}

ComplexMatrix state_of(const ComplexMatrix &t) {
    ComplexMatrix s = t.adjoint() * t;
    return s / s.trace().real();
}

double objective_of(const ComplexMatrix &t, const Dataset &data) {
    double objective = 0.0;
    const ComplexMatrix rho = state_of(t);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const ComplexVector &y = data.records()[i].effect.vector();
        const double delta =
            (y.adjoint() * rho * y)(0, 0).real() - data.frequency(i);
        objective += delta * delta;
    }
    return objective;
}

} // namespace

double ls_objective(const DensityMatrix &state, const Dataset &data) {
    if (state.dim() != data.dim()) {
        throw DimensionMismatch("state and dataset dimensions differ");
    }
    return evaluate_misfit(state.matrix(), data).objective;
}

double ls_lambda(const DensityMatrix &state, const Dataset &data) {
    if (state.dim() != data.dim()) {
        throw DimensionMismatch("state and dataset dimensions differ");
    }
    return evaluate_misfit(state.matrix(), data).lambda;
}

double ls_extremal_residual(const DensityMatrix &state, const Dataset &data) {
    if (state.dim() != data.dim()) {
        throw DimensionMismatch("state and dataset dimensions differ");
    }
    const Misfit m = evaluate_misfit(state.matrix(), data);
    return max_abs(m.gradient * state.matrix() - m.lambda * state.matrix());
}

LsResult estimate_ls(const Dataset &data, const EstimatorConfig &config) {
    config.validate();
    const Eigen::Index d = data.dim();

    // T = I/sqrt(d) gives the maximally mixed starting state.
    ComplexMatrix t = ComplexMatrix::Identity(d, d) /
                      std::sqrt(static_cast<double>(d));
    ComplexMatrix rho = state_of(t);
    Misfit m = evaluate_misfit(rho, data);

    int iterations = 0;
    bool converged = false;
    double residual = max_abs(m.gradient * rho - m.lambda * rho);

    for (; iterations < config.max_iterations; ++iterations) {
        if (residual <= config.tolerance) {
            converged = true;
            break;
        }
        // Descent direction on the factor: d/dT* of the objective is
        // 2 T (G - Tr(G rho) I) / Tr(T^dagger T).
        const ComplexMatrix centered =
            m.gradient - m.lambda * ComplexMatrix::Identity(d, d);
        const ComplexMatrix grad =
            2.0 * t * centered / (t.adjoint() * t).trace().real();

        double step = kInitialStep;
        bool accepted = false;
        for (int halving = 0; halving <= kMaxHalvings; ++halving) {
            const ComplexMatrix candidate = t - step * grad;
            if (candidate.squaredNorm() > 0.0 &&
                objective_of(candidate, data) < m.objective) {
                t = candidate;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break; // stagnation at the backtracking resolution
        }
        rho = state_of(t);
        m = evaluate_misfit(rho, data);
        residual = max_abs(m.gradient * rho - m.lambda * rho);
    }
    if (!converged) {
        converged = residual <= config.tolerance;
    }

    return LsResult{project_to_physical(hermitize(rho)), m.objective, residual,
                    m.lambda, converged, iterations};
}

std::vector<LsPovmCheck> check_ls_povm(const DensityMatrix &state,
                                       const Dataset &data) {
    if (state.dim() != data.dim()) {
        throw DimensionMismatch("state and dataset dimensions differ");
    }
    const double lambda = ls_lambda(state, data);
    if (std::abs(lambda) < 1e-12) {
        throw DegenerateLambda(
            "least-squares multiplier vanishes (exact fit); POVM elements "
            "are undefined");
    }
    std::vector<LsPovmCheck> checks;
    checks.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const Effect &effect = data.records()[i].effect;
        const double f = data.frequency(i);
        const double p = born_probability(state, effect);
        const ComplexMatrix e_i =
            (2.0 * (p - f) / lambda) * effect.projector();
        const double expectation = (state.matrix() * e_i).trace().real();
        const double closed_form = 2.0 * (p - f) * p / lambda;
        checks.push_back(LsPovmCheck{effect.label(), expectation, f,
                                     std::abs(expectation - closed_form)});
    }
    return checks;
}

std::vector<LsPovmCheck> check_ls_povm(const LsResult &result,
                                       const Dataset &data) {
    return check_ls_povm(result.estimate, data);
}

} // namespace mltomo

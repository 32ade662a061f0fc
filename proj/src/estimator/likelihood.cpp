#include "mltomo/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mltomo {

namespace {

// Likelihood comparisons tolerate FP noise well below the 1e-12 monotonicity
// budget of the reported trace.
constexpr double kAcceptSlack = 1e-13;
constexpr int kMaxHalvings = 30;

void check_dims(const DensityMatrix &state, const Dataset &data) {
    if (state.dim() != data.dim()) {
        std::ostringstream msg;
        msg << "state dim " << state.dim() << " != dataset dim " << data.dim();
        throw DimensionMismatch(msg.str());
    }
}

double log_likelihood_raw(const ComplexMatrix &rho, const Dataset &data,
                          double floor) {
    double total = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double f = data.frequency(i);
        if (f == 0.0) {
            continue;
        }
        const ComplexVector &y = data.records()[i].effect.vector();
        const double p = std::clamp((y.adjoint() * rho * y)(0, 0).real(), 0.0, 1.0);
        total += f * std::log(std::max(p, floor));
    }
    return total;
}

ComplexMatrix build_r_raw(const ComplexMatrix &rho, const Dataset &data,
                          double floor) {
    const Eigen::Index d = rho.rows();
    ComplexMatrix r = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double f = data.frequency(i);
        if (f == 0.0) {
            continue;
        }
        const ComplexVector &y = data.records()[i].effect.vector();
        const double p = std::clamp((y.adjoint() * rho * y)(0, 0).real(), 0.0, 1.0);
        r += (f / std::max(p, floor)) * (y * y.adjoint());
    }
    return r;
}

// One diluted update normalize(R_mu rho R_mu); keeps Hermiticity by
// construction and trace by explicit renormalization.
ComplexMatrix diluted_step(const ComplexMatrix &rho, const ComplexMatrix &r,
                           double mu) {
    const Eigen::Index d = rho.rows();
    const ComplexMatrix r_mu =
        (1.0 - mu) * ComplexMatrix::Identity(d, d) + mu * r;
    ComplexMatrix next = hermitize(r_mu * rho * r_mu);
    const double trace = next.trace().real();
    if (!(trace > 0.0)) {
        throw Error("fixed-point step lost all trace");
    }
    return next / trace;
}

void assert_physical_iterate(const ComplexMatrix &rho) {
    if (hermiticity_defect(rho) > 1e-10) {
        throw Error("iterate drifted away from Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-10) {
        throw Error("iterate drifted away from unit trace");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho,
                                                        Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw Error("iterate left the positive-semidefinite set");
    }
}

} // namespace

void EstimatorConfig::validate() const {
    if (!(tolerance > 0.0)) {
        throw InvalidConfig("tolerance must be positive");
    }
    if (max_iterations < 1) {
        throw InvalidConfig("max_iterations must be >= 1");
    }
    if (!(dilution > 0.0) || dilution > 1.0) {
        throw InvalidConfig("dilution must lie in (0, 1]");
    }
    if (!(floor > 0.0) || floor >= 1e-6) {
        throw InvalidConfig("floor must lie in (0, 1e-6)");
    }
    if (initial_state == InitialState::Provided && !provided_state) {
        throw InvalidConfig("initial_state Provided needs provided_state");
    }
}

double log_likelihood(const DensityMatrix &state, const Dataset &data,
                      double floor) {
    check_dims(state, data);
    return log_likelihood_raw(state.matrix(), data, floor);
}

ComplexMatrix build_r(const DensityMatrix &state, const Dataset &data,
                      double floor) {
    check_dims(state, data);
    return build_r_raw(state.matrix(), data, floor);
}

EstimationResult estimate_ml(const Dataset &data,
                             const EstimatorConfig &config) {
    config.validate();
    const Eigen::Index d = data.dim();
    if (config.initial_state == InitialState::Provided &&
        config.provided_state->dim() != d) {
        throw InconsistentDimensions(
            "provided initial state does not match the dataset dimension");
    }

    ComplexMatrix rho =
        config.initial_state == InitialState::Provided
            ? config.provided_state->matrix()
            : DensityMatrix::maximally_mixed(d).matrix();

    std::vector<double> trace;
    trace.reserve(64);
    double ll = log_likelihood_raw(rho, data, config.floor);
    trace.push_back(ll);

    double residual = 0.0;
    int iterations = 0;
    bool converged = false;

    for (; iterations < config.max_iterations; ++iterations) {
        const ComplexMatrix r = build_r_raw(rho, data, config.floor);
        residual = max_abs(r * rho - rho);
        if (residual <= config.tolerance) {
            converged = true;
            break;
        }

        double mu = config.dilution;
        bool accepted = false;
        for (int halving = 0; halving <= kMaxHalvings; ++halving) {
            const ComplexMatrix candidate = diluted_step(rho, r, mu);
            const double candidate_ll =
                log_likelihood_raw(candidate, data, config.floor);
            if (candidate_ll >= ll - kAcceptSlack) {
                rho = candidate;
                ll = candidate_ll;
                accepted = true;
                break;
            }
            mu *= 0.5;
        }
        if (!accepted) {
            // Stagnation: no dilution improves the likelihood anymore.
            residual = max_abs(build_r_raw(rho, data, config.floor) * rho - rho);
            converged = residual <= config.tolerance;
            break;
        }
        assert_physical_iterate(rho);
        trace.push_back(ll);
    }

    if (!converged && iterations == config.max_iterations) {
        residual = max_abs(build_r_raw(rho, data, config.floor) * rho - rho);
        converged = residual <= config.tolerance;
    }

    return EstimationResult{DensityMatrix::from_matrix(rho), std::move(trace),
                            iterations, residual, converged};
}

double extremal_residual(const DensityMatrix &state, const Dataset &data,
                         double floor) {
    check_dims(state, data);
    const ComplexMatrix r = build_r_raw(state.matrix(), data, floor);
    return max_abs(r * state.matrix() - state.matrix());
}

std::vector<ExpectationCheck>
check_expectation_condition(const DensityMatrix &state, const Dataset &data,
                            double floor) {
    check_dims(state, data);
    std::vector<ExpectationCheck> checks;
    checks.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double f = data.frequency(i);
        const double p = born_probability(state, data.records()[i].effect);
        ExpectationCheck check;
        check.outcome = data.records()[i].effect.label();
        check.frequency = f;
        check.floored = f > 0.0 && p < floor;
        const double ratio = f == 0.0 ? 0.0 : f / std::max(p, floor);
        check.lhs = ratio * p;
        check.gap = std::abs(check.lhs - f);
        checks.push_back(std::move(check));
    }
    return checks;
}

double check_subspace_completeness(const DensityMatrix &state,
                                   const Dataset &data, double rank_tol,
                                   double floor) {
    check_dims(state, data);
    const ComplexMatrix p = state.support_projector(rank_tol);
    const ComplexMatrix r = build_r(state, data, floor);
    return max_abs(p * r * p - p);
}

} // namespace mltomo

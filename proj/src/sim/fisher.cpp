#include "mltomo/fisher.hpp"

#include <cmath>
#include <sstream>

namespace mltomo {

namespace {

// Affine outcome probability p(theta) = offset + 0.5 * direction.theta.
struct AffineOutcome {
    double offset;
    std::array<double, 3> direction;
};

double probability(const AffineOutcome &out, const std::array<double, 3> &v) {
    return out.offset + 0.5 * (out.direction[0] * v[0] +
                               out.direction[1] * v[1] +
                               out.direction[2] * v[2]);
}

} // namespace

std::array<double, 3> bloch_direction(const Effect &effect) {
    if (effect.dim() != 2) {
        throw DimensionMismatch("Bloch direction is defined for dim 2 only");
    }
    const Complex y0 = effect.vector()(0);
    const Complex y1 = effect.vector()(1);
    const Complex cross = std::conj(y0) * y1;
    return {2.0 * cross.real(), 2.0 * cross.imag(),
            std::norm(y0) - std::norm(y1)};
}

RealMatrix fisher_information(const DensityMatrix &true_state,
                              const MeasurementPlan &plan,
                              Parametrization parametrization) {
    if (parametrization != Parametrization::BlochCoordinates) {
        throw InvalidConfig("unsupported parametrization");
    }
    plan.validate();
    if (true_state.dim() != 2 || plan.dim() != 2) {
        throw DimensionMismatch(
            "Fisher information is implemented for dim 2 only");
    }
    const std::array<double, 3> v = true_state.bloch_vector();

    double total_shots = 0.0;
    for (std::uint64_t s : plan.shots_per_observable) {
        total_shots += static_cast<double>(s);
    }

    RealMatrix info = RealMatrix::Zero(3, 3);
    for (std::size_t o = 0; o < plan.observables.size(); ++o) {
        std::vector<AffineOutcome> outcomes;
        const auto *basis = std::get_if<ObservableBasis>(&plan.observables[o]);
        const std::vector<Effect> &effects =
            basis ? basis->effects()
                  : std::get<std::vector<Effect>>(plan.observables[o]);
        std::array<double, 3> rest_direction{0.0, 0.0, 0.0};
        for (const Effect &e : effects) {
            const std::array<double, 3> n = bloch_direction(e);
            outcomes.push_back(AffineOutcome{0.5, n});
            rest_direction[0] -= n[0];
            rest_direction[1] -= n[1];
            rest_direction[2] -= n[2];
        }
        if (!basis) {
            // The implicit discard outcome completes the distribution.
            outcomes.push_back(AffineOutcome{
                1.0 - 0.5 * static_cast<double>(effects.size()),
                rest_direction});
        }

        const double weight =
            static_cast<double>(plan.shots_per_observable[o]) / total_shots;
        for (const AffineOutcome &out : outcomes) {
            const double p = probability(out, v);
            if (p <= 1e-12) {
                std::ostringstream msg;
                msg << "outcome probability " << p
                    << " is singular for the Fisher information";
                throw SingularProbability(msg.str());
            }
            for (int j = 0; j < 3; ++j) {
                for (int k = 0; k < 3; ++k) {
                    info(j, k) += weight * 0.25 * out.direction[j] *
                                  out.direction[k] / p;
                }
            }
        }
    }
    return info;
}

} // namespace mltomo

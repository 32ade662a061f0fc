#include "mltomo/plan.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "mltomo/rng.hpp"

namespace mltomo {

namespace {

const std::vector<Effect> &effects_of(const PlanObservable &obs) {
    if (const auto *basis = std::get_if<ObservableBasis>(&obs)) {
        return basis->effects();
    }
    return std::get<std::vector<Effect>>(obs);
}

bool is_full_basis(const PlanObservable &obs) {
    return std::holds_alternative<ObservableBasis>(obs);
}

std::string observable_name(const PlanObservable &obs, std::size_t index) {
    if (const auto *basis = std::get_if<ObservableBasis>(&obs)) {
        return basis->name();
    }
    return "effects" + std::to_string(index);
}

/// Complement I - sum |y_k><y_k| as a rank-one effect, if it is one.
std::optional<Effect> rank_one_complement(const std::vector<Effect> &effects,
                                          const std::string &name) {
    const Eigen::Index d = effects.front().dim();
    ComplexMatrix c = ComplexMatrix::Identity(d, d);
    for (const Effect &e : effects) {
        c -= e.projector();
    }
    Eigensystem eig = hermitian_eigendecomposition(c);
    const Eigen::Index top = d - 1;
    if (std::abs(eig.eigenvalues(top) - 1.0) > 1e-10) {
        return std::nullopt;
    }
    for (Eigen::Index k = 0; k < top; ++k) {
        if (std::abs(eig.eigenvalues(k)) > 1e-10) {
            return std::nullopt;
        }
    }
    return Effect(eig.eigenvectors.col(top), name + ":rest");
}

struct OutcomeTable {
    std::vector<double> probabilities; // one per listed effect, plus rest
    bool has_rest = false;
};

OutcomeTable outcome_probabilities(const DensityMatrix &state,
                                   const PlanObservable &obs) {
    OutcomeTable table;
    double sum = 0.0;
    for (const Effect &e : effects_of(obs)) {
        const double p = born_probability(state, e);
        table.probabilities.push_back(p);
        sum += p;
    }
    if (is_full_basis(obs)) {
        if (std::abs(sum - 1.0) > 1e-10) {
            throw InvalidPlan("full-basis probabilities do not sum to 1");
        }
    } else {
        if (sum > 1.0 + 1e-10) {
            throw InvalidPlan(
                "bare effect list has probabilities summing beyond 1");
        }
        table.probabilities.push_back(std::max(0.0, 1.0 - sum));
        table.has_rest = true;
    }
    return table;
}

Dataset assemble(const DensityMatrix &true_state, const MeasurementPlan &plan,
                 bool exact) {
    plan.validate();
    if (true_state.dim() != plan.dim()) {
        throw InvalidPlan("state and plan dimensions differ");
    }

    SeededRng rng(plan.seed);
    std::vector<Record> records;
    for (std::size_t o = 0; o < plan.observables.size(); ++o) {
        const PlanObservable &obs = plan.observables[o];
        const std::vector<Effect> &effects = effects_of(obs);
        const std::uint64_t shots = plan.shots_per_observable[o];
        const OutcomeTable table = outcome_probabilities(true_state, obs);

        std::optional<Effect> rest;
        if (table.has_rest && plan.include_complement) {
            rest = rank_one_complement(effects, observable_name(obs, o));
            if (!rest) {
                throw InvalidPlan(
                    "complement of the bare effect list is not rank-one");
            }
        }

        std::vector<std::uint64_t> counts(table.probabilities.size(), 0);
        if (exact) {
            for (std::size_t k = 0; k < counts.size(); ++k) {
                counts[k] = static_cast<std::uint64_t>(std::llround(
                    table.probabilities[k] * static_cast<double>(shots)));
            }
        } else {
            for (std::uint64_t s = 0; s < shots; ++s) {
                ++counts[rng.next_category(table.probabilities)];
            }
        }

        for (std::size_t k = 0; k < effects.size(); ++k) {
            records.push_back(Record{effects[k], counts[k]});
        }
        if (rest) {
            records.push_back(Record{*rest, counts.back()});
        }
    }
    return Dataset(std::move(records));
}

} // namespace

Eigen::Index MeasurementPlan::dim() const {
    if (observables.empty()) {
        throw InvalidPlan("plan has no observables");
    }
    return effects_of(observables.front()).front().dim();
}

void MeasurementPlan::validate() const {
    if (observables.empty()) {
        throw InvalidPlan("plan has no observables");
    }
    if (observables.size() != shots_per_observable.size()) {
        std::ostringstream msg;
        msg << "plan lists " << observables.size() << " observables but "
            << shots_per_observable.size() << " shot budgets";
        throw InvalidPlan(msg.str());
    }
    const Eigen::Index d = dim();
    for (std::size_t o = 0; o < observables.size(); ++o) {
        if (shots_per_observable[o] == 0) {
            throw InvalidPlan("shot budgets must be positive");
        }
        const std::vector<Effect> &effects = effects_of(observables[o]);
        if (effects.empty()) {
            throw InvalidPlan("observable has no effects");
        }
        for (const Effect &e : effects) {
            if (e.dim() != d) {
                throw InvalidPlan("plan effects differ in dimension");
            }
        }
    }
}

MeasurementPlan pauli6_plan(std::uint64_t shots_per_axis, std::uint64_t seed) {
    MeasurementPlan plan;
    for (ObservableBasis &basis : pauli6_bases()) {
        plan.observables.emplace_back(std::move(basis));
        plan.shots_per_observable.push_back(shots_per_axis);
    }
    plan.seed = seed;
    return plan;
}

Dataset sample_dataset(const DensityMatrix &true_state,
                       const MeasurementPlan &plan) {
    return assemble(true_state, plan, false);
}

Dataset exact_dataset(const DensityMatrix &true_state,
                      const MeasurementPlan &plan) {
    return assemble(true_state, plan, true);
}

} // namespace mltomo

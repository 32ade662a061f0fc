#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mltomo/bases.hpp"
#include "mltomo/dataset.hpp"
#include "mltomo/density_matrix.hpp"

namespace mltomo {

/// One measured observable: either a complete orthonormal basis or a bare
/// list of rank-one effects. Bare lists get an implicit discard outcome so
/// the per-observable probabilities close to one.
using PlanObservable = std::variant<ObservableBasis, std::vector<Effect>>;

struct MeasurementPlan {
    std::vector<PlanObservable> observables;
    std::vector<std::uint64_t> shots_per_observable;
    std::uint64_t seed = 0;
    /// When set, the complement of a bare effect list is recorded as a
    /// "rest" outcome instead of being discarded. Requires the complement to
    /// be rank-one.
    bool include_complement = false;

    Eigen::Index dim() const;
    void validate() const;
};

MeasurementPlan pauli6_plan(std::uint64_t shots_per_axis, std::uint64_t seed);

/// Draws categorical outcomes per observable from the Born probabilities and
/// pools everything into one Dataset. Deterministic for a fixed seed.
Dataset sample_dataset(const DensityMatrix &true_state,
                       const MeasurementPlan &plan);

/// No sampling: counts are the Born probabilities times the shot budget,
/// rounded to the nearest integer. Exact whenever those products are whole
/// numbers, which is how the tests use it.
Dataset exact_dataset(const DensityMatrix &true_state,
                      const MeasurementPlan &plan);

} // namespace mltomo

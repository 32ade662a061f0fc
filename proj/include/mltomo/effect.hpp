#pragma once

#include <string>
#include <vector>

#include "mltomo/linalg.hpp"

namespace mltomo {

/// Rank-one measurement outcome |y><y| carried around as its unit vector
/// together with an outcome label. Effects from different observables may
/// overlap: <y_i|y_j> != delta_ij is allowed and is the interesting case.
class Effect {
  public:
    /// Requires a vector already normalized within 1e-12; the stored copy is
    /// renormalized exactly so the induced projector is idempotent.
    Effect(ComplexVector vector, std::string label);

    const ComplexVector &vector() const { return vector_; }
    const std::string &label() const { return label_; }
    Eigen::Index dim() const { return vector_.size(); }

    /// |y><y| as a dense matrix.
    ComplexMatrix projector() const;

  private:
    ComplexVector vector_;
    std::string label_;
};

/// A complete orthonormal measurement: dim mutually orthogonal effects
/// resolving the identity.
class ObservableBasis {
  public:
    ObservableBasis(std::string name, std::vector<Effect> effects);

    const std::string &name() const { return name_; }
    const std::vector<Effect> &effects() const { return effects_; }
    Eigen::Index dim() const { return effects_.front().dim(); }

  private:
    std::string name_;
    std::vector<Effect> effects_;
};

} // namespace mltomo

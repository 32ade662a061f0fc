#include "mltomo/effect.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace mltomo {

Effect::Effect(ComplexVector vector, std::string label)
    : vector_(std::move(vector)), label_(std::move(label)) {
    if (vector_.size() < 1) {
        throw DimensionMismatch("effect vector must have dim >= 1");
    }
    const double norm = vector_.norm();
    if (std::abs(norm - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "effect '" << label_ << "' is not a unit vector: |y| = " << norm;
        throw PhysicalityViolation(msg.str());
    }
    vector_ /= norm;
}

ComplexMatrix Effect::projector() const {
    return vector_ * vector_.adjoint();
}

ObservableBasis::ObservableBasis(std::string name, std::vector<Effect> effects)
    : name_(std::move(name)), effects_(std::move(effects)) {
    if (effects_.empty()) {
        throw DimensionMismatch("observable basis needs at least one effect");
    }
    const Eigen::Index d = effects_.front().dim();
    if (static_cast<Eigen::Index>(effects_.size()) != d) {
        std::ostringstream msg;
        msg << "basis '" << name_ << "' has " << effects_.size()
            << " effects but dim " << d;
        throw InconsistentDimensions(msg.str());
    }
    ComplexMatrix closure = ComplexMatrix::Zero(d, d);
    for (std::size_t a = 0; a < effects_.size(); ++a) {
        if (effects_[a].dim() != d) {
            throw InconsistentDimensions("basis effects differ in dimension");
        }
        for (std::size_t b = 0; b < a; ++b) {
            const Complex overlap =
                effects_[a].vector().dot(effects_[b].vector());
            if (std::abs(overlap) > 1e-12) {
                std::ostringstream msg;
                msg << "basis '" << name_ << "' effects '"
                    << effects_[a].label() << "' and '" << effects_[b].label()
                    << "' are not orthogonal: |<a|a'>| = " << std::abs(overlap);
                throw PhysicalityViolation(msg.str());
            }
        }
        closure += effects_[a].projector();
    }
    if (max_abs(closure - ComplexMatrix::Identity(d, d)) > 1e-10) {
        std::ostringstream msg;
        msg << "basis '" << name_ << "' does not resolve the identity";
        throw PhysicalityViolation(msg.str());
    }
}

} // namespace mltomo

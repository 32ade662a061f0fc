#include "mltomo/bases.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace mltomo {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

ObservableBasis pauli_basis(char axis) {
    ComplexVector plus(2), minus(2);
    switch (axis) {
    case 'x':
        plus << kInvSqrt2, kInvSqrt2;
        minus << kInvSqrt2, -kInvSqrt2;
        break;
    case 'y':
        plus << kInvSqrt2, Complex(0.0, kInvSqrt2);
        minus << kInvSqrt2, Complex(0.0, -kInvSqrt2);
        break;
    case 'z':
        plus << 1.0, 0.0;
        minus << 0.0, 1.0;
        break;
    default:
        throw InvalidPlan(std::string("unknown Pauli axis '") + axis + "'");
    }
    const std::string name(1, axis);
    return ObservableBasis(name, {Effect(plus, name + "+"),
                                  Effect(minus, name + "-")});
}

std::vector<ObservableBasis> pauli6_bases() {
    return {pauli_basis('x'), pauli_basis('y'), pauli_basis('z')};
}

std::vector<ObservableBasis> mub_bases(int dim) {
    if (!is_prime(dim)) {
        std::ostringstream msg;
        msg << "mutually unbiased basis preset needs a prime dim, got " << dim;
        throw InvalidPlan(msg.str());
    }
    if (dim == 2) {
        return {ObservableBasis("comp", pauli_basis('z').effects()),
                pauli_basis('x'), pauli_basis('y')};
    }
    std::vector<ObservableBasis> bases;
    bases.reserve(dim + 1);
    std::vector<Effect> comp;
    for (int j = 0; j < dim; ++j) {
        ComplexVector v = ComplexVector::Zero(dim);
        v(j) = 1.0;
        comp.emplace_back(v, "comp:" + std::to_string(j));
    }
    bases.emplace_back("comp", std::move(comp));
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int k = 0; k < dim; ++k) {
        std::vector<Effect> effects;
        const std::string name = "mub" + std::to_string(k);
        for (int j = 0; j < dim; ++j) {
            ComplexVector v(dim);
            for (int n = 0; n < dim; ++n) {
                // Quadratic Gauss phases; unbiased for odd prime dim.
                const long long phase =
                    (static_cast<long long>(k) * n * n +
                     static_cast<long long>(j) * n) %
                    dim;
                const double angle = 2.0 * std::numbers::pi *
                                     static_cast<double>(phase) /
                                     static_cast<double>(dim);
                v(n) = norm * Complex(std::cos(angle), std::sin(angle));
            }
            effects.emplace_back(v, name + ":" + std::to_string(j));
        }
        bases.emplace_back(name, std::move(effects));
    }
    return bases;
}

} // namespace mltomo

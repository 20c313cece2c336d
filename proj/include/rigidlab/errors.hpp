#pragma once

#include <stdexcept>
#include <string>

namespace rigidlab {

// Argument left the seed's holomorphy domain (branch cut, pole, strip edge).
struct OutsideSeedDomain : std::domain_error {
    using std::domain_error::domain_error;
};

// Affine composition a*f+b has no closed-form member in the seed catalog.
struct UnsupportedComposition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Point lies outside the closed-form domain of the requested quantity.
struct OutsideDomain : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleAtMinusI : std::domain_error {
    PoleAtMinusI() : std::domain_error("cayley: pole at lambda = -i") {}
};

struct PoleAtOne : std::domain_error {
    PoleAtOne() : std::domain_error("inverse_cayley: pole at mu = 1") {}
};

struct NonConvergence : std::runtime_error {
    NonConvergence(const std::string& what, int iters, double best_residual)
        : std::runtime_error(what), iterations(iters), residual(best_residual) {}
    int iterations;
    double residual;
};

// Propagator requested at a point where the characteristic Jacobian vanishes.
struct ShockError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solve needed by a higher-level check failed; carries where.
struct SolverFailure : std::runtime_error {
    SolverFailure(const std::string& what, double x_, double y_)
        : std::runtime_error(what), x(x_), y(y_) {}
    double x;
    double y;
};

}  // namespace rigidlab

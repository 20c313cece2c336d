#pragma once

#include <map>
#include <string>

#include "rigidlab/fields.hpp"

namespace rigidlab {

struct FDConfig {
    double step = 1e-5;
    enum class Scheme { Central2, Central4 } scheme = Scheme::Central2;
};

/// Named residual with the intermediates that produced it.
struct ResidualReport {
    std::string name;
    double x{}, y{};
    complex_t value{};
    double magnitude{};
    double fd_step{};
    std::map<std::string, complex_t> detail;
};

/// H = lambda_x + lambda*lambda_y with both derivatives by central differences
/// of the solver. Vanishes (up to FD truncation) iff the seed is holomorphic.
/// detail: lambda, lambda_x, lambda_y.
ResidualReport rigidity_residual(const SeedSpec& spec, double x, double y,
                                 const FDConfig& fd = {}, const SolverConfig& cfg = {});

/// Closed form of H on the initial slice: 2i * Im(f(y)) * f_wbar(y).
/// Exactly zero for every holomorphic family.
complex_t obstruction_initial(const SeedSpec& spec, double y);

/// mu_zbar - mu*mu_z with z = x + iy, d/dzbar = (d/dx + i d/dy)/2, applied to
/// mu(x,y) by central differences. detail: mu, mu_z, mu_zbar.
ResidualReport self_dilatation_residual(const SeedSpec& spec, double x, double y,
                                        const FDConfig& fd = {}, const SolverConfig& cfg = {});

/// Closed form of the Poincare residual R(mu) = mu_zbar - mu*mu_z on the
/// initial slice: -4i * Im(f) * f_wbar / (f(y) + i)^3. detail carries the
/// finite-difference evaluation of R(mu) at (0, y) as "R_fd" for comparison.
ResidualReport poincare_residual_initial(const SeedSpec& spec, double y,
                                         const FDConfig& fd = {}, const SolverConfig& cfg = {});

/// h(w0)/J at a Converged point. Throws ShockError when |J| <= shock_tol.
complex_t propagator(const SeedSpec& spec, const PerturbationSpec& h, double x,
                     double y, const SolverConfig& cfg = {});

/// propagator minus the symmetric difference quotient
/// (B[f + eps*h] - B[f - eps*h]) / (2 eps), the perturbed transforms solved by
/// Newton seeded with the base-point lambda. detail: P, P_fd.
ResidualReport propagator_fd_check(const SeedSpec& spec, const PerturbationSpec& h,
                                   double x, double y, double eps,
                                   const SolverConfig& cfg = {});

/// P[h1*h2] - J * P[h1] * P[h2]; the product h1*h2 is evaluated pointwise.
/// An algebraic identity, so the residual is rounding noise.
ResidualReport twisted_multiplicativity_residual(const SeedSpec& spec,
                                                 const PerturbationSpec& h1,
                                                 const PerturbationSpec& h2,
                                                 double x, double y,
                                                 const SolverConfig& cfg = {});

/// The deformed product J*v1*v2 (pointwise product at J = 1, zero product at J = 0).
complex_t deformed_product(complex_t jac, complex_t v1, complex_t v2);

/// B[a f + b](x, y) - (a * B[f](a x, y - b x) + b). Catalog compositions solve
/// closed-form; the rest via continuation on the composed map. detail: left, right.
ResidualReport affine_equivariance_residual(const SeedSpec& spec, double a, double b,
                                            double x, double y,
                                            const SolverConfig& cfg = {});

/// max over samples of |B[f](0, y) - f(y)|.
double seed_recovery_residual(const SeedSpec& spec, const std::vector<double>& y_samples,
                              const SolverConfig& cfg = {});

}  // namespace rigidlab

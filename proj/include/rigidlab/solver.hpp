#pragma once

#include <functional>

#include "rigidlab/seed.hpp"

namespace rigidlab {

enum class Outcome {
    Converged,
    Shock,             // characteristic Jacobian vanished (|J| < shock_tol)
    EllipticityLoss,   // solution found but Im lambda <= 0
    OutsideSeedDomain,
    NonConvergence,
};

struct SolveStatus {
    Outcome outcome{Outcome::NonConvergence};
    double jacobian_modulus{0.0};
    double im_lambda{0.0};
};

struct SolverConfig {
    double newton_tol = 1e-13;
    double shock_tol = 1e-10;
    int max_newton_iters = 40;
    int continuation_steps = 64;
};

struct SolveResult {
    complex_t lambda{0.0, 0.0};  // best available value even on failure
    SolveStatus status{};
    double x_reached{0.0};  // continuation: largest |x| reached before failure
    bool converged() const { return status.outcome == Outcome::Converged; }
};

const char* outcome_name(Outcome o);

/// w0 = y - lambda*x, the argument the seed is evaluated at.
complex_t characteristic_coordinate(complex_t lambda, double x, double y);

/// J = 1 + f'(w0)*x with w0 = y - lambda*x. Throws OutsideSeedDomain.
complex_t jacobian(const SeedSpec& spec, complex_t lambda, double x, double y);

/// Closed-form lambda for the six catalog families:
///   Constant       i*c everywhere
///   Affine (both)  (a*y + b + i*d)/(1 + a*x), shock at 1 + a*x <= tol
///   Epsilon        (-eps*y + i*sqrt(D))/(2(1-eps*x)), D = 4(1-eps*x) - eps^2 y^2;
///                  Shock past the vertex (eps*x >= 1), EllipticityLoss for D <= 0
///   Exponential    lambert_w0_over_x(x, y), global
///   CauchyKernel   (zeta - s)/(2x), zeta = y + i*delta, s = sign(y)*principal
///                  sqrt(zeta^2 + 4x); the sign keeps the root continuous along
///                  the characteristic march from x = 0 (the principal branch
///                  alone picks the wrong root for y < 0). Series -1/zeta + x/zeta^3
///                  for |x| < 1e-8. Shock only where |J| < shock_tol, i.e. the
///                  isolated point (delta^2/4, 0).
SolveResult solve_closed_form(const SeedSpec& spec, double x, double y,
                              const SolverConfig& cfg = {});

/// Newton iteration on F(lambda) = lambda - f(y - lambda*x) with J = 1 + f'(w)x.
/// Stops when both |F| < newton_tol*(1+|lambda|) and the Newton step is
/// negligible; reports Shock as soon as |J| < shock_tol (the iterate is still
/// returned, which near a coalescing root is the continued value).
/// NonHoloTest seeds are iterated with a numerically differentiated 2x2 real
/// Jacobian (the complex-linear derivative is wrong when f_wbar != 0) and are
/// restricted to |x| <= 0.5.
SolveResult solve_newton(const SeedSpec& spec, double x, double y,
                         complex_t lambda_init, const SolverConfig& cfg = {});

/// Marches x from 0 to the target in cfg.continuation_steps equal increments,
/// seeding each Newton solve with the previous lambda; y is held fixed.
/// On failure returns the failing step's result with x_reached set.
SolveResult solve_continuation(const SeedSpec& spec, double x, double y,
                               const SolverConfig& cfg = {});

/// Entry point used by grids, analysis and the CLI: x = 0 bypasses all
/// solvers and returns f(y); closed-form families dispatch to
/// solve_closed_form; NonHoloTest to the restricted real-Jacobian Newton.
SolveResult solve_point(const SeedSpec& spec, double x, double y,
                        const SolverConfig& cfg = {});

/// value/derivative pair of a custom seed-like map at w.
using EvalFn = std::function<std::pair<complex_t, complex_t>(complex_t)>;

/// Newton on lambda = g(y - lambda*x) for an arbitrary holomorphic g given by
/// fn; used for perturbed seeds f + eps*h and affine compositions a*f + b
/// outside the catalog. Domain violations must be thrown by fn itself.
SolveResult newton_custom(const EvalFn& fn, double x, double y,
                          complex_t lambda_init, const SolverConfig& cfg = {});

/// Continuation from the y-axis for a custom map (initial data g(y)).
SolveResult continuation_custom(const EvalFn& fn, double x, double y,
                                const SolverConfig& cfg = {});

}  // namespace rigidlab

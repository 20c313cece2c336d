#include "rigidlab/analysis.hpp"

#include <cmath>
#include <functional>

namespace rigidlab {

namespace {

const complex_t kI(0.0, 1.0);

complex_t lambda_at(const SeedSpec& spec, double x, double y, const SolverConfig& cfg) {
    const SolveResult r = solve_point(spec, x, y, cfg);
    if (!r.converged())
        throw SolverFailure(std::string("solve failed (") + outcome_name(r.status.outcome) +
                                ") at stencil point",
                            x, y);
    return r.lambda;
}

complex_t fd_derivative(const std::function<complex_t(double)>& g, double at,
                        const FDConfig& fd) {
    const double h = fd.step;
    if (fd.scheme == FDConfig::Scheme::Central4)
        return (-g(at + 2 * h) + 8.0 * g(at + h) - 8.0 * g(at - h) + g(at - 2 * h)) / (12.0 * h);
    return (g(at + h) - g(at - h)) / (2.0 * h);
}

}  // namespace

ResidualReport rigidity_residual(const SeedSpec& spec, double x, double y,
                                 const FDConfig& fd, const SolverConfig& cfg) {
    const complex_t lam = lambda_at(spec, x, y, cfg);
    const complex_t lam_x =
        fd_derivative([&](double t) { return lambda_at(spec, t, y, cfg); }, x, fd);
    const complex_t lam_y =
        fd_derivative([&](double t) { return lambda_at(spec, x, t, cfg); }, y, fd);
    const complex_t h = lam_x + lam * lam_y;

    ResidualReport rep;
    rep.name = "rigidity";
    rep.x = x;
    rep.y = y;
    rep.value = h;
    rep.magnitude = std::abs(h);
    rep.fd_step = fd.step;
    rep.detail = {{"lambda", lam}, {"lambda_x", lam_x}, {"lambda_y", lam_y}};
    return rep;
}

complex_t obstruction_initial(const SeedSpec& spec, double y) {
    const SeedEval e = eval_seed(spec, complex_t(y, 0.0));
    return 2.0 * kI * e.value.imag() * e.d_dwbar;
}

ResidualReport self_dilatation_residual(const SeedSpec& spec, double x, double y,
                                        const FDConfig& fd, const SolverConfig& cfg) {
    auto mu_at = [&](double px, double py) { return cayley(lambda_at(spec, px, py, cfg)); };
    const complex_t mu = mu_at(x, y);
    const complex_t mu_x = fd_derivative([&](double t) { return mu_at(t, y); }, x, fd);
    const complex_t mu_y = fd_derivative([&](double t) { return mu_at(x, t); }, y, fd);
    // z = x + iy
    const complex_t mu_z = 0.5 * (mu_x - kI * mu_y);
    const complex_t mu_zbar = 0.5 * (mu_x + kI * mu_y);
    const complex_t value = mu_zbar - mu * mu_z;

    ResidualReport rep;
    rep.name = "self_dilatation";
    rep.x = x;
    rep.y = y;
    rep.value = value;
    rep.magnitude = std::abs(value);
    rep.fd_step = fd.step;
    rep.detail = {{"mu", mu}, {"mu_z", mu_z}, {"mu_zbar", mu_zbar}};
    return rep;
}

ResidualReport poincare_residual_initial(const SeedSpec& spec, double y,
                                         const FDConfig& fd, const SolverConfig& cfg) {
    const SeedEval e = eval_seed(spec, complex_t(y, 0.0));
    const complex_t den = e.value + kI;
    const complex_t closed = -4.0 * kI * e.value.imag() * e.d_dwbar / (den * den * den);
    const ResidualReport fd_rep = self_dilatation_residual(spec, 0.0, y, fd, cfg);

    ResidualReport rep;
    rep.name = "poincare_residual";
    rep.x = 0.0;
    rep.y = y;
    rep.value = closed;
    rep.magnitude = std::abs(closed);
    rep.fd_step = fd.step;
    rep.detail = {{"lambda", e.value}, {"R_fd", fd_rep.value}};
    return rep;
}

complex_t propagator(const SeedSpec& spec, const PerturbationSpec& h, double x, double y,
                     const SolverConfig& cfg) {
    const complex_t lam = lambda_at(spec, x, y, cfg);
    const complex_t jac = jacobian(spec, lam, x, y);
    if (std::abs(jac) <= cfg.shock_tol)
        throw ShockError("propagator: characteristic Jacobian vanishes at the point");
    const complex_t w0 = characteristic_coordinate(lam, x, y);
    return eval_perturbation(h, w0) / jac;
}

ResidualReport propagator_fd_check(const SeedSpec& spec, const PerturbationSpec& h,
                                   double x, double y, double eps, const SolverConfig& cfg) {
    const complex_t lam0 = lambda_at(spec, x, y, cfg);
    const complex_t p = propagator(spec, h, x, y, cfg);

    auto perturbed = [&](double s) {
        EvalFn fn = [&spec, &h, s](complex_t w) {
            const SeedEval e = eval_seed(spec, w);
            return std::pair<complex_t, complex_t>(
                e.value + s * eval_perturbation(h, w),
                e.d_dw + s * perturbation_derivative(h, w));
        };
        const SolveResult r = newton_custom(fn, x, y, lam0, cfg);
        if (!r.converged())
            throw SolverFailure(std::string("perturbed solve failed (") +
                                    outcome_name(r.status.outcome) + ")",
                                x, y);
        return r.lambda;
    };
    const complex_t fd = (perturbed(eps) - perturbed(-eps)) / (2.0 * eps);
    const complex_t value = p - fd;

    ResidualReport rep;
    rep.name = "propagator_fd";
    rep.x = x;
    rep.y = y;
    rep.value = value;
    rep.magnitude = std::abs(value);
    rep.fd_step = eps;
    rep.detail = {{"P", p}, {"P_fd", fd}};
    return rep;
}

ResidualReport twisted_multiplicativity_residual(const SeedSpec& spec,
                                                 const PerturbationSpec& h1,
                                                 const PerturbationSpec& h2,
                                                 double x, double y,
                                                 const SolverConfig& cfg) {
    const complex_t lam = lambda_at(spec, x, y, cfg);
    const complex_t jac = jacobian(spec, lam, x, y);
    if (std::abs(jac) <= cfg.shock_tol)
        throw ShockError("twisted multiplicativity: Jacobian vanishes at the point");
    const complex_t w0 = characteristic_coordinate(lam, x, y);
    const complex_t v1 = eval_perturbation(h1, w0);
    const complex_t v2 = eval_perturbation(h2, w0);
    const complex_t p12 = v1 * v2 / jac;
    const complex_t value = p12 - jac * (v1 / jac) * (v2 / jac);

    ResidualReport rep;
    rep.name = "twisted_multiplicativity";
    rep.x = x;
    rep.y = y;
    rep.value = value;
    rep.magnitude = std::abs(value);
    rep.fd_step = 0.0;
    rep.detail = {{"J", jac}, {"P_h1", v1 / jac}, {"P_h2", v2 / jac}, {"P_h1h2", p12}};
    return rep;
}

complex_t deformed_product(complex_t jac, complex_t v1, complex_t v2) {
    return jac * v1 * v2;
}

ResidualReport affine_equivariance_residual(const SeedSpec& spec, double a, double b,
                                            double x, double y, const SolverConfig& cfg) {
    const SolveResult base = solve_point(spec, a * x, y - b * x, cfg);
    if (!base.converged())
        throw SolverFailure(std::string("right side failed (") +
                                outcome_name(base.status.outcome) + ")",
                            a * x, y - b * x);
    const complex_t right = a * base.lambda + b;

    complex_t left;
    try {
        const SeedSpec composed = apply_affine(spec, a, b);
        const SolveResult lr = solve_point(composed, x, y, cfg);
        if (!lr.converged())
            throw SolverFailure(std::string("left side failed (") +
                                    outcome_name(lr.status.outcome) + ")",
                                x, y);
        left = lr.lambda;
    } catch (const UnsupportedComposition&) {
        EvalFn fn = [&spec, a, b](complex_t w) {
            const SeedEval e = eval_seed(spec, w);
            return std::pair<complex_t, complex_t>(a * e.value + b, a * e.d_dw);
        };
        const SolveResult lr = continuation_custom(fn, x, y, cfg);
        if (!lr.converged())
            throw SolverFailure(std::string("left side (composed map) failed (") +
                                    outcome_name(lr.status.outcome) + ")",
                                x, y);
        left = lr.lambda;
    }

    const complex_t value = left - right;
    ResidualReport rep;
    rep.name = "affine_equivariance";
    rep.x = x;
    rep.y = y;
    rep.value = value;
    rep.magnitude = std::abs(value);
    rep.fd_step = 0.0;
    rep.detail = {{"left", left}, {"right", right}};
    return rep;
}

double seed_recovery_residual(const SeedSpec& spec, const std::vector<double>& y_samples,
                              const SolverConfig& cfg) {
    double worst = 0.0;
    for (double y : y_samples) {
        const SolveResult r = solve_point(spec, 0.0, y, cfg);
        const complex_t f = eval_seed(spec, complex_t(y, 0.0)).value;
        worst = std::fmax(worst, std::abs(r.lambda - f));
    }
    return worst;
}

}  // namespace rigidlab

#include "rigidlab/solver.hpp"

#include <cmath>

#include "rigidlab/lambert.hpp"

namespace rigidlab {

namespace {

SolveStatus classify(complex_t lambda, double abs_jac, const SolverConfig& cfg) {
    SolveStatus st;
    st.jacobian_modulus = abs_jac;
    st.im_lambda = lambda.imag();
    if (abs_jac < cfg.shock_tol)
        st.outcome = Outcome::Shock;  // shock dominates ellipticity loss
    else if (!(lambda.imag() > 0.0))
        st.outcome = Outcome::EllipticityLoss;
    else
        st.outcome = Outcome::Converged;
    return st;
}

double abs_jac_or_zero(const SeedSpec& spec, complex_t lambda, double x, double y) {
    try {
        return std::abs(jacobian(spec, lambda, x, y));
    } catch (const OutsideSeedDomain&) {
        return 0.0;
    }
}

EvalFn seed_eval_fn(const SeedSpec& spec) {
    return [spec](complex_t w) {
        if (!seed_domain_contains(spec, w))
            throw OutsideSeedDomain("argument left seed domain");
        const SeedEval e = eval_seed(spec, w);
        return std::pair<complex_t, complex_t>(e.value, e.d_dw);
    };
}

// Newton with a numerically differentiated 2x2 real Jacobian; the implicit
// map is only R-linearizable when f_wbar != 0.
SolveResult newton_non_holo(const SeedSpec& spec, double x, double y,
                            complex_t lambda_init, const SolverConfig& cfg) {
    SolveResult r;
    r.x_reached = x;
    complex_t lam = lambda_init;

    auto F = [&](complex_t l) {
        const complex_t w = complex_t(y, 0.0) - l * x;
        return l - eval_seed(spec, w).value;
    };

    const double h = 1e-7;
    for (int iter = 0; iter <= cfg.max_newton_iters; ++iter) {
        const complex_t f = F(lam);
        const double scale = cfg.newton_tol * (1.0 + std::abs(lam));
        if (std::abs(f) < scale) {
            r.lambda = lam;
            const double aj = std::abs(1.0 + eval_seed(spec, complex_t(y, 0.0) - lam * x).d_dw * x);
            r.status = classify(lam, aj, cfg);
            return r;
        }
        const complex_t fx = (F(lam + h) - F(lam - h)) / (2.0 * h);
        const complex_t fy = (F(lam + complex_t(0.0, h)) - F(lam - complex_t(0.0, h))) / (2.0 * h);
        const double det = fx.real() * fy.imag() - fy.real() * fx.imag();
        if (std::abs(det) < 1e-300) break;
        const double du = (f.real() * fy.imag() - fy.real() * f.imag()) / det;
        const double dv = (fx.real() * f.imag() - f.real() * fx.imag()) / det;
        lam -= complex_t(du, dv);
    }
    r.lambda = lam;
    r.status.outcome = Outcome::NonConvergence;
    r.status.im_lambda = lam.imag();
    return r;
}

}  // namespace

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Converged: return "Converged";
        case Outcome::Shock: return "Shock";
        case Outcome::EllipticityLoss: return "EllipticityLoss";
        case Outcome::OutsideSeedDomain: return "OutsideSeedDomain";
        case Outcome::NonConvergence: return "NonConvergence";
    }
    return "?";
}

complex_t characteristic_coordinate(complex_t lambda, double x, double y) {
    return complex_t(y, 0.0) - lambda * x;
}

complex_t jacobian(const SeedSpec& spec, complex_t lambda, double x, double y) {
    const complex_t w0 = characteristic_coordinate(lambda, x, y);
    if (!seed_domain_contains(spec, w0))
        throw OutsideSeedDomain("jacobian: w0 outside seed domain");
    return 1.0 + eval_seed(spec, w0).d_dw * x;
}

SolveResult solve_closed_form(const SeedSpec& spec, double x, double y,
                              const SolverConfig& cfg) {
    SolveResult r;
    r.x_reached = x;

    switch (spec.family()) {
        case SeedFamily::Constant: {
            r.lambda = complex_t(0.0, spec.p0());
            r.status = classify(r.lambda, 1.0, cfg);
            return r;
        }
        case SeedFamily::AffineDelta:
        case SeedFamily::GenericAffine: {
            const bool plain = spec.family() == SeedFamily::AffineDelta;
            const double a = plain ? 1.0 : spec.p0();
            const double b = plain ? 0.0 : spec.p1();
            const double d = plain ? spec.p0() : spec.p2();
            const double jac = 1.0 + a * x;
            if (jac <= cfg.shock_tol) {
                // at/past the shock line: characteristics have crossed
                r.lambda = jac > 1e-300 ? complex_t(a * y + b, d) / jac : complex_t(0.0, 0.0);
                r.status = SolveStatus{Outcome::Shock, std::abs(jac), r.lambda.imag()};
                return r;
            }
            r.lambda = complex_t(a * y + b, d) / jac;
            r.status = classify(r.lambda, std::abs(jac), cfg);
            return r;
        }
        case SeedFamily::Epsilon: {
            const double eps = spec.p0();
            const double q = 1.0 - eps * x;
            const double disc = 4.0 * q - eps * eps * y * y;
            if (q <= cfg.shock_tol) {
                // on/past the vertex: pure shock (Im lambda blows up, J -> 0)
                r.status = SolveStatus{Outcome::Shock, 0.0, 0.0};
                return r;
            }
            if (disc <= 0.0) {
                r.lambda = complex_t(-eps * y / (2.0 * q), 0.0);
                r.status = SolveStatus{Outcome::EllipticityLoss,
                                       abs_jac_or_zero(spec, r.lambda, x, y), 0.0};
                return r;
            }
            r.lambda = complex_t(-eps * y, std::sqrt(disc)) / (2.0 * q);
            r.status = classify(r.lambda, abs_jac_or_zero(spec, r.lambda, x, y), cfg);
            return r;
        }
        case SeedFamily::Exponential: {
            r.lambda = lambert_w0_over_x(x, y);
            r.status = classify(r.lambda, abs_jac_or_zero(spec, r.lambda, x, y), cfg);
            return r;
        }
        case SeedFamily::CauchyKernel: {
            const double delta = spec.p0();
            const complex_t zeta(y + 0.0, delta);  // +0.0 normalizes -0.0
            if (std::abs(x) <= 0.01 * std::norm(zeta)) {
                // series of the continued root, lambda = -(1/zeta) sum C_n (-x/zeta^2)^n
                // with Catalan numbers C_n; the direct quotient cancels
                // catastrophically as x -> 0
                const complex_t t = -x / (zeta * zeta);
                complex_t term(1.0, 0.0), acc(1.0, 0.0);
                double cat = 1.0;
                for (int n = 0; n < 40; ++n) {
                    cat *= 2.0 * (2 * n + 1) / (n + 2.0);  // C_{n+1}/C_n
                    term *= t;
                    const complex_t add = cat * term;
                    acc += add;
                    if (std::abs(add) < 1e-17 * std::abs(acc)) break;
                }
                r.lambda = -acc / zeta;
            } else {
                // principal sqrt is continuous along the horizontal march from
                // x = 0 (Im(zeta^2 + 4x) = 2*y*delta never changes sign), but it
                // returns the root with Re >= 0, which matches the initial value
                // zeta only when y >= 0. Flip for y < 0.
                complex_t s = std::sqrt(zeta * zeta + 4.0 * x);
                if (y < 0.0) s = -s;
                r.lambda = (zeta - s) / (2.0 * x);
            }
            r.status = classify(r.lambda, abs_jac_or_zero(spec, r.lambda, x, y), cfg);
            return r;
        }
        case SeedFamily::NonHoloTest:
            throw UnsupportedFamily("solve_closed_form: NonHoloTest has no closed form");
    }
    throw std::logic_error("solve_closed_form: unhandled family");
}

namespace {

// At a coalescing (double) root, F carries only O(|e|^2) of signal, so Newton
// stalls in a sqrt(machine-eps) basin. The coalescing lambda is however a
// *simple* zero of J(lambda) = 1 + g'(y - lambda x) x, which a secondary
// Newton (FD derivative) locates to near machine precision.
//
// Triggered only for |J| below ~sqrt(eps), where the two F-roots are no longer
// numerically resolvable; larger |J| means a legitimate near-shock simple root.
constexpr double kCoalesceJac = 1e-7;

bool polish_coalescing_root(const EvalFn& fn, double x, double y, complex_t& lam,
                            const SolverConfig& cfg, double& abs_jac_out) {
    auto jac_of = [&](complex_t l) { return 1.0 + fn(complex_t(y, 0.0) - l * x).second * x; };
    const double h = 1e-6;
    complex_t p = lam;
    bool settled = false;
    try {
        for (int it = 0; it < 25; ++it) {
            const complex_t g = jac_of(p);
            const complex_t gp = (jac_of(p + h) - jac_of(p - h)) / (2.0 * h);
            if (std::abs(gp) < 1e-300) return false;
            const complex_t step = g / gp;
            p -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(p))) {
                settled = true;
                break;
            }
        }
        if (!settled) return false;
        if (std::abs(p - lam) > 1e-6 * (1.0 + std::abs(lam))) return false;  // left the basin
        const auto [value, deriv] = fn(complex_t(y, 0.0) - p * x);
        if (std::abs(p - value) > 100.0 * cfg.newton_tol * (1.0 + std::abs(p)))
            return false;  // J vanishes here but the implicit equation does not hold
        lam = p;
        abs_jac_out = std::abs(1.0 + deriv * x);
        return true;
    } catch (const OutsideSeedDomain&) {
        return false;
    }
}

}  // namespace

SolveResult newton_custom(const EvalFn& fn, double x, double y,
                          complex_t lambda_init, const SolverConfig& cfg) {
    SolveResult r;
    r.x_reached = x;
    complex_t lam = lambda_init;
    double abs_jac = 0.0;
    bool fnorm_ok = false;

    for (int iter = 0; iter <= cfg.max_newton_iters; ++iter) {
        const complex_t w = complex_t(y, 0.0) - lam * x;
        complex_t value, deriv;
        try {
            std::tie(value, deriv) = fn(w);
        } catch (const OutsideSeedDomain&) {
            r.lambda = lam;
            r.status = SolveStatus{Outcome::OutsideSeedDomain, 0.0, lam.imag()};
            return r;
        }
        const complex_t f = lam - value;
        const complex_t jac = 1.0 + deriv * x;
        abs_jac = std::abs(jac);
        const double scale = cfg.newton_tol * (1.0 + std::abs(lam));
        fnorm_ok = std::abs(f) < scale;
        const double coalesce_jac = kCoalesceJac * (1.0 + std::abs(lam));
        if (abs_jac < cfg.shock_tol) {
            // report the shock; polishing recovers the coalescing value when
            // the iterate is already circling one
            polish_coalescing_root(fn, x, y, lam, cfg, abs_jac);
            r.lambda = lam;
            r.status = SolveStatus{Outcome::Shock, abs_jac, lam.imag()};
            return r;
        }
        const complex_t step = f / jac;
        if (fnorm_ok && std::abs(step) < scale) {
            r.lambda = lam;
            if (abs_jac < coalesce_jac && polish_coalescing_root(fn, x, y, lam, cfg, abs_jac)) {
                r.lambda = lam;
                r.status = SolveStatus{Outcome::Shock, abs_jac, lam.imag()};
                return r;
            }
            r.status = classify(lam, abs_jac, cfg);
            return r;
        }
        lam -= step;
    }

    r.lambda = lam;
    if (abs_jac < kCoalesceJac * (1.0 + std::abs(lam)) &&
        polish_coalescing_root(fn, x, y, lam, cfg, abs_jac)) {
        r.lambda = lam;
        r.status = SolveStatus{Outcome::Shock, abs_jac, lam.imag()};
        return r;
    }
    if (fnorm_ok) {  // step stalled on the rounding plateau but the root is found
        r.status = classify(lam, abs_jac, cfg);
    } else {
        r.status = SolveStatus{Outcome::NonConvergence, abs_jac, lam.imag()};
    }
    return r;
}

SolveResult solve_newton(const SeedSpec& spec, double x, double y,
                         complex_t lambda_init, const SolverConfig& cfg) {
    if (spec.family() == SeedFamily::NonHoloTest) {
        if (std::abs(x) > 0.5) {
            SolveResult r;
            r.x_reached = x;
            r.status.outcome = Outcome::NonConvergence;
            return r;
        }
        return newton_non_holo(spec, x, y, lambda_init, cfg);
    }
    return newton_custom(seed_eval_fn(spec), x, y, lambda_init, cfg);
}

namespace {

// True when the Shock result is a polished coalescing root (J driven to zero
// AND the implicit equation satisfied there) rather than an aborted iterate.
bool coalescing_value(const EvalFn& fn, double x, double y, const SolveResult& res,
                      const SolverConfig& cfg) {
    if (res.status.jacobian_modulus > 1e-13 * (1.0 + std::abs(res.lambda))) return false;
    try {
        const complex_t v = fn(complex_t(y, 0.0) - res.lambda * x).first;
        return std::abs(res.lambda - v) < 100.0 * cfg.newton_tol * (1.0 + std::abs(res.lambda));
    } catch (const OutsideSeedDomain&) {
        return false;
    }
}

using StepSolver = std::function<SolveResult(double xk, complex_t init)>;

SolveResult continuation_impl(const EvalFn& fn, const StepSolver& solve_step, double x,
                              double y, const SolverConfig& cfg) {
    SolveResult r;
    complex_t lam;
    try {
        lam = fn(complex_t(y, 0.0)).first;
    } catch (const OutsideSeedDomain&) {
        r.status = SolveStatus{Outcome::OutsideSeedDomain, 0.0, 0.0};
        return r;
    }
    if (x == 0.0) {
        r.lambda = lam;
        r.status = classify(lam, 1.0, cfg);
        return r;
    }

    const int steps = std::max(1, cfg.continuation_steps);
    double x_good = 0.0;
    SolveResult good;
    good.lambda = lam;
    good.status = classify(lam, 1.0, cfg);

    for (int k = 1; k <= steps; ++k) {
        const double xk = x * static_cast<double>(k) / steps;
        SolveResult res = solve_step(xk, lam);
        res.x_reached = xk;
        if (!res.converged()) {
            if (res.status.outcome == Outcome::Shock && coalescing_value(fn, xk, y, res, cfg))
                return res;  // landed on a coalescing root; the value is good

            // Localize the boundary in (x_good, xk]: march as deep as Newton
            // still converges, then name the failure by what degenerated.
            double lo = x_good, hi = xk;
            for (int iter = 0; iter < 60 && std::abs(hi - lo) > 1e-12 * (1.0 + std::abs(hi));
                 ++iter) {
                const double mid = 0.5 * (lo + hi);
                SolveResult probe = solve_step(mid, good.lambda);
                if (probe.converged()) {
                    lo = mid;
                    good = probe;
                    good.x_reached = mid;
                } else if (probe.status.outcome == Outcome::Shock &&
                           coalescing_value(fn, mid, y, probe, cfg)) {
                    probe.x_reached = mid;
                    return probe;
                } else {
                    hi = mid;
                }
            }
            const Outcome kind = good.status.jacobian_modulus < 1e-3 ? Outcome::Shock
                                                                     : Outcome::EllipticityLoss;
            SolveResult out = good;
            out.status.outcome = kind;
            return out;
        }
        lam = res.lambda;
        good = res;
        x_good = xk;
    }
    return good;
}

}  // namespace

SolveResult solve_continuation(const SeedSpec& spec, double x, double y,
                               const SolverConfig& cfg) {
    const EvalFn fn = [spec](complex_t w) {
        const SeedEval e = eval_seed(spec, w);
        return std::pair<complex_t, complex_t>(e.value, e.d_dw);
    };
    // solve_newton dispatches NonHoloTest to the real-jacobian iteration
    const StepSolver step = [&spec, y, &cfg](double xk, complex_t init) {
        return solve_newton(spec, xk, y, init, cfg);
    };
    return continuation_impl(fn, step, x, y, cfg);
}

SolveResult continuation_custom(const EvalFn& fn, double x, double y,
                                const SolverConfig& cfg) {
    const StepSolver step = [&fn, y, &cfg](double xk, complex_t init) {
        return newton_custom(fn, xk, y, init, cfg);
    };
    return continuation_impl(fn, step, x, y, cfg);
}

SolveResult solve_point(const SeedSpec& spec, double x, double y, const SolverConfig& cfg) {
    if (spec.family() == SeedFamily::NonHoloTest) {
        SolveResult r;
        r.x_reached = x;
        if (std::abs(x) > 0.5) {  // implicit solve only trusted near the initial slice
            r.status.outcome = Outcome::NonConvergence;
            return r;
        }
        const complex_t init = eval_seed(spec, complex_t(y, 0.0)).value;
        if (x == 0.0) {
            r.lambda = init;
            r.status = classify(init, 1.0, cfg);
            return r;
        }
        return newton_non_holo(spec, x, y, init, cfg);
    }
    if (x == 0.0) {
        SolveResult r;
        if (!seed_domain_contains(spec, complex_t(y, 0.0))) {
            r.status = SolveStatus{Outcome::OutsideSeedDomain, 0.0, 0.0};
            return r;
        }
        r.lambda = eval_seed(spec, complex_t(y, 0.0)).value;
        r.status = classify(r.lambda, 1.0, cfg);
        return r;
    }
    return solve_closed_form(spec, x, y, cfg);
}

}  // namespace rigidlab

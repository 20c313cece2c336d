#include "rigidlab/fields.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>

namespace rigidlab {

GridSpec::GridSpec(double x0, double x1, double y0, double y1, int nx_, int ny_)
    : x_min(x0), x_max(x1), y_min(y0), y_max(y1), nx(nx_), ny(ny_) {
    if (!(x_min < x_max) || !(y_min < y_max))
        throw std::invalid_argument("GridSpec: require x_min < x_max and y_min < y_max");
    if (nx < 2 || ny < 2) throw std::invalid_argument("GridSpec: require nx, ny >= 2");
}

complex_t cayley(complex_t lambda) {
    const complex_t i(0.0, 1.0);
    if (lambda == -i) throw PoleAtMinusI();
    return (lambda - i) / (lambda + i);
}

complex_t inverse_cayley(complex_t mu) {
    const complex_t i(0.0, 1.0);
    if (mu == complex_t(1.0, 0.0)) throw PoleAtOne();
    return i * (1.0 + mu) / (1.0 - mu);
}

StructureCoeffs structure_map(complex_t lambda) {
    const double alpha = std::norm(lambda);
    const double beta = -2.0 * lambda.real();
    return {alpha, beta, 4.0 * alpha - beta * beta};
}

double beltrami_modulus_closed_form(const SeedSpec& spec, double x, double y) {
    switch (spec.family()) {
        case SeedFamily::Epsilon: {
            const double eps = spec.p0();
            const double q = 1.0 - eps * x;
            const double disc = 4.0 * q - eps * eps * y * y;
            if (!(q > 0.0) || !(disc > 0.0))
                throw OutsideDomain("beltrami_modulus_closed_form: outside epsilon parabola");
            const double s = std::sqrt(disc);
            return (2.0 - eps * x - s) / (2.0 - eps * x + s);
        }
        case SeedFamily::AffineDelta: {
            if (!(x > -1.0))
                throw OutsideDomain("beltrami_modulus_closed_form: x <= -1");
            const double d = spec.p0();
            const double up = y * y + (d - 1.0 - x) * (d - 1.0 - x);
            const double dn = y * y + (d + 1.0 + x) * (d + 1.0 + x);
            return up / dn;
        }
        case SeedFamily::CauchyKernel: {
            if (x != 0.0)
                throw OutsideDomain("beltrami_modulus_closed_form: cauchy form holds at x = 0 only");
            const double d = spec.p0();
            return ((d - 1.0) * (d - 1.0) + y * y) / ((d + 1.0) * (d + 1.0) + y * y);
        }
        default:
            throw UnsupportedFamily("beltrami_modulus_closed_form: no closed form for " +
                                    family_name(spec.family()));
    }
}

bool domain_contains(const SeedSpec& spec, double x, double y) {
    switch (spec.family()) {
        case SeedFamily::Constant:
        case SeedFamily::Exponential:
            return true;
        case SeedFamily::AffineDelta:
            return x > -1.0;
        case SeedFamily::GenericAffine:
            return 1.0 + spec.p0() * x > 0.0;
        case SeedFamily::Epsilon: {
            const double eps = spec.p0();
            return eps * eps * y * y < 4.0 * (1.0 - eps * x);
        }
        case SeedFamily::CauchyKernel: {
            const double d = spec.p0();
            return !(x == d * d / 4.0 && y == 0.0);
        }
        case SeedFamily::NonHoloTest:
            throw UnsupportedFamily("domain_contains: NonHoloTest has no rigid domain theory");
    }
    return false;
}

int thread_cap() {
    if (const char* env = std::getenv("RIGIDLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

SpectralSample evaluate_sample(const SeedSpec& spec, double x, double y, const SolverConfig& cfg) {
    SpectralSample s;
    s.x = x;
    s.y = y;
    const SolveResult r = solve_point(spec, x, y, cfg);
    s.status = r.status;
    if (!r.converged()) return s;  // zero-valued numeric fields, status kept

    s.lambda = r.lambda;
    s.w0 = characteristic_coordinate(r.lambda, x, y);
    try {
        s.jac = jacobian(spec, r.lambda, x, y);
    } catch (const OutsideSeedDomain&) {
        s = SpectralSample{};
        s.x = x;
        s.y = y;
        s.status = SolveStatus{Outcome::OutsideSeedDomain, 0.0, r.lambda.imag()};
        return s;
    }
    s.mu = cayley(r.lambda);
    const StructureCoeffs sc = structure_map(r.lambda);
    s.alpha = sc.alpha;
    s.beta = sc.beta;
    s.delta_disc = sc.delta_disc;
    return s;
}

GridField sample_grid(const SeedSpec& spec, const GridSpec& grid, const SolverConfig& cfg) {
    GridField field{grid, spec, std::vector<SpectralSample>(
                                    static_cast<size_t>(grid.nx) * grid.ny)};

    auto run_rows = [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            const double y = grid.y_at(j);
            for (int i = 0; i < grid.nx; ++i)
                field.samples[static_cast<size_t>(j) * grid.nx + i] =
                    evaluate_sample(spec, grid.x_at(i), y, cfg);
        }
    };

    const int want = std::min(thread_cap(), grid.ny);
    if (want <= 1 || static_cast<long>(grid.nx) * grid.ny < 256) {
        run_rows(0, grid.ny);
        return field;
    }

    std::vector<std::thread> pool;
    pool.reserve(want);
    const int rows_per = (grid.ny + want - 1) / want;
    for (int t = 0; t < want; ++t) {
        const int j0 = t * rows_per;
        const int j1 = std::min(grid.ny, j0 + rows_per);
        if (j0 >= j1) break;
        pool.emplace_back(run_rows, j0, j1);
    }
    for (auto& th : pool) th.join();
    return field;
}

namespace {

bool boundary_status(Outcome o) {
    return o == Outcome::Shock || o == Outcome::EllipticityLoss ||
           o == Outcome::OutsideSeedDomain;
}

struct EdgeProbe {
    const SeedSpec& spec;
    const SolverConfig& cfg;
    double ax, ay, bx, by;  // edge endpoints

    std::pair<double, double> at(double t) const {
        return {ax + t * (bx - ax), ay + t * (by - ay)};
    }
    SolveResult solve(double t) const {
        auto [px, py] = at(t);
        return solve_point(spec, px, py, cfg);
    }
};

// One endpoint converged, the other on the far side: bisect the transition,
// keeping the converged-side point; stop early once |J| meets the target.
void refine_transition(const EdgeProbe& e, bool a_converged,
                       const SolveResult& conv_res, double jac_target,
                       std::vector<ShockPoint>& out) {
    double lo = a_converged ? 0.0 : 1.0;  // converged side
    double hi = a_converged ? 1.0 : 0.0;
    double best_t = lo;
    double best_jac = conv_res.status.jacobian_modulus;
    for (int iter = 0; iter < 80 && std::abs(hi - lo) > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const SolveResult res = e.solve(mid);
        if (res.converged()) {
            lo = mid;
            best_t = mid;
            best_jac = res.status.jacobian_modulus;
            if (best_jac < jac_target) break;
        } else {
            hi = mid;
        }
    }
    auto [px, py] = e.at(best_t);
    out.push_back({px, py, best_jac});
}

// Both endpoints converged but |J| dips: ternary-search the minimum along the
// edge; emit only when the refined point is a genuine near-shock.
void refine_jac_minimum(const EdgeProbe& e, double jac_target, double emit_threshold,
                        std::vector<ShockPoint>& out) {
    auto jac_at = [&](double t) {
        const SolveResult res = e.solve(t);
        return res.converged() ? res.status.jacobian_modulus : 0.0;
    };
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 90 && (hi - lo) > 1e-13; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (jac_at(m1) < jac_at(m2))
            hi = m2;
        else
            lo = m1;
    }
    const double t = 0.5 * (lo + hi);
    const double j = jac_at(t);
    if (j < emit_threshold || j < jac_target) {
        auto [px, py] = e.at(t);
        out.push_back({px, py, j});
    }
}

}  // namespace

std::vector<ShockPoint> shock_trace(const SeedSpec& spec, const GridSpec& grid,
                                    const SolverConfig& cfg) {
    const GridField field = sample_grid(spec, grid, cfg);
    const double jac_target = 10.0 * cfg.shock_tol;
    const double probe_threshold = 1.0;   // edges worth a minimum search
    const double emit_threshold = 1e-3;   // |J| level accepted as "on the locus"

    std::vector<ShockPoint> points;
    auto consider = [&](const SpectralSample& a, const SpectralSample& b) {
        const EdgeProbe edge{spec, cfg, a.x, a.y, b.x, b.y};
        const bool ca = a.status.outcome == Outcome::Converged;
        const bool cb = b.status.outcome == Outcome::Converged;
        if (ca != cb) {
            const SpectralSample& bad = ca ? b : a;
            if (!boundary_status(bad.status.outcome)) return;  // e.g. NonConvergence
            SolveResult conv;
            conv.status = (ca ? a : b).status;
            refine_transition(edge, ca, conv, jac_target, points);
        } else if (ca && cb) {
            const double ja = a.status.jacobian_modulus;
            const double jb = b.status.jacobian_modulus;
            if (std::min(ja, jb) < probe_threshold)
                refine_jac_minimum(edge, jac_target, emit_threshold, points);
        }
    };

    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i + 1 < grid.nx; ++i) consider(field.at(i, j), field.at(i + 1, j));
    for (int j = 0; j + 1 < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) consider(field.at(i, j), field.at(i, j + 1));
    return points;
}

std::vector<complex_t> leaf_sample(const SeedSpec& spec, const GridSpec& grid,
                                   const SolverConfig& cfg) {
    const GridField field = sample_grid(spec, grid, cfg);
    std::vector<complex_t> mu;
    mu.reserve(field.samples.size());
    for (const SpectralSample& s : field.samples)
        if (s.status.outcome == Outcome::Converged) mu.push_back(s.mu);
    return mu;
}

}  // namespace rigidlab

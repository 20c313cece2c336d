#pragma once

#include <vector>

#include "rigidlab/solver.hpp"

namespace rigidlab {

/// One evaluated point of the transform and everything derived from it.
/// Non-Converged nodes keep their status and carry zero-valued (NaN-free)
/// numeric fields.
struct SpectralSample {
    double x{}, y{};
    complex_t lambda{};
    complex_t w0{};      // y - lambda*x
    complex_t jac{};     // 1 + f'(w0)*x
    complex_t mu{};      // (lambda - i)/(lambda + i)
    double alpha{};      // |lambda|^2
    double beta{};       // -2 Re lambda
    double delta_disc{}; // 4*alpha - beta^2
    SolveStatus status{};
};

struct GridSpec {
    double x_min{}, x_max{}, y_min{}, y_max{};
    int nx{2}, ny{2};

    GridSpec() = default;
    GridSpec(double x0, double x1, double y0, double y1, int nx_, int ny_);

    double x_at(int i) const { return x_min + i * (x_max - x_min) / (nx - 1); }
    double y_at(int j) const { return y_min + j * (y_max - y_min) / (ny - 1); }

    bool operator==(const GridSpec&) const = default;
};

/// Row-major samples, y the slow index: samples[j*nx + i] sits at (x_i, y_j).
struct GridField {
    GridSpec grid;
    SeedSpec seed;
    std::vector<SpectralSample> samples;

    const SpectralSample& at(int i, int j) const { return samples[j * grid.nx + i]; }
};

struct ShockPoint {
    double x{}, y{};
    double abs_jac{};  // |J| at the emitted (in-domain) point
};

complex_t cayley(complex_t lambda);          // (lambda - i)/(lambda + i); throws PoleAtMinusI
complex_t inverse_cayley(complex_t mu);      // i(1 + mu)/(1 - mu); throws PoleAtOne

struct StructureCoeffs {
    double alpha;       // |lambda|^2
    double beta;        // -2 Re lambda
    double delta_disc;  // 4*alpha - beta^2
};
StructureCoeffs structure_map(complex_t lambda);

/// |mu|^2 by the family closed form: Epsilon (2-eps*x-sqrt(D))/(2-eps*x+sqrt(D)),
/// AffineDelta (y^2+(delta-1-x)^2)/(y^2+(delta+1+x)^2), CauchyKernel at x = 0
/// only ((delta-1)^2+y^2)/((delta+1)^2+y^2).
double beltrami_modulus_closed_form(const SeedSpec& spec, double x, double y);

/// Closed-form membership in Omega_f. Throws UnsupportedFamily for NonHoloTest.
bool domain_contains(const SeedSpec& spec, double x, double y);

/// Solves one point and derives every stored quantity from lambda.
SpectralSample evaluate_sample(const SeedSpec& spec, double x, double y,
                               const SolverConfig& cfg = {});

/// Evaluates every node (parallel over rows, capped by RIGIDLAB_THREADS);
/// failed nodes keep their status. Output is independent of the thread count.
GridField sample_grid(const SeedSpec& spec, const GridSpec& grid,
                      const SolverConfig& cfg = {});

/// Approximates the boundary of Omega_f: grid edges with a status transition
/// are bisected on the transition; edges whose |J| dips are searched for the
/// minimum, and a point is emitted when the refined |J| falls below 1e-3
/// (10*shock_tol when reachable). Empty when no boundary crosses the window.
std::vector<ShockPoint> shock_trace(const SeedSpec& spec, const GridSpec& grid,
                                    const SolverConfig& cfg = {});

/// mu of every Converged node, row-major. All returned values have |mu| < 1.
std::vector<complex_t> leaf_sample(const SeedSpec& spec, const GridSpec& grid,
                                   const SolverConfig& cfg = {});

/// Parallelism cap: RIGIDLAB_THREADS when set (>= 1), else hardware concurrency.
int thread_cap();

}  // namespace rigidlab

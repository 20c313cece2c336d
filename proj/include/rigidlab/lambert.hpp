#pragma once

#include <complex>

namespace rigidlab {

using complex_t = std::complex<double>;

struct LambertResult {
    complex_t w;      // W0(z), principal branch, Im w in (-pi, pi)
    int iterations;   // Halley iterations spent
    double residual;  // |w*e^w - z|
};

/// Principal-branch complex Lambert W.
///
/// Initial guess: the series z(1 - z + 3/2 z^2) for |z| <= 3, log(z) - log(log(z))
/// beyond, and the square-root expansion -1 + p - p^2/3, p = sqrt(2(e z + 1)),
/// near the branch point -1/e (also used to lift real z < -1/e off the axis,
/// where a real iteration could never reach the complex principal value).
/// Then Halley's iteration, at most 50 steps, stopping when the step falls
/// below 1e-15 * (1 + |w|).
///
/// Guarantees |w e^w - z| <= 1e-12 * max(1, |z|); throws NonConvergence with
/// the iteration count and best residual if the iteration stalls.
LambertResult lambert_w0(complex_t z);

/// W0(i x e^y) / x, extended through x = 0 by its limit i e^y.
/// For |x e^y| < 1e-8 the quotient is replaced by the series
/// i e^y (1 - z + 3/2 z^2), z = i x e^y, avoiding cancellation.
complex_t lambert_w0_over_x(double x, double y);

}  // namespace rigidlab

#include "rigidlab/lambert.hpp"

#include <cmath>

#include "rigidlab/errors.hpp"

namespace rigidlab {

namespace {

constexpr double kE = 2.718281828459045;
constexpr int kMaxIters = 50;

complex_t initial_guess(complex_t z) {
    const double dist_bp = std::abs(z + 1.0 / kE);
    // Wedge around the cut (-inf, -1/e], where neither the series nor
    // log(1 + z) points at the principal value.
    const bool near_cut = z.real() < -1.0 / kE && std::abs(z.imag()) <= 0.5 * -z.real();
    if (dist_bp < 1e-6 || (near_cut && std::abs(z) <= 3.0)) {
        // Square-root expansion about the branch point. For real z below -1/e
        // the radicand is negative and the principal sqrt lifts the guess into
        // the upper half-plane, which a real iteration could never reach.
        const complex_t p = std::sqrt(2.0 * (kE * z + 1.0));
        return -1.0 + p - p * p / 3.0;
    }
    if (std::abs(z) > 3.0) {
        const complex_t l = std::log(z);
        return l - std::log(l);
    }
    if (std::abs(z) < 0.5) return z * (1.0 - z + 1.5 * z * z);
    // middle annulus: log(1 + z) tracks W0 well away from the cut
    return std::log(1.0 + z);
}

}  // namespace

LambertResult lambert_w0(complex_t z) {
    if (z == complex_t(0.0, 0.0)) return {complex_t(0.0, 0.0), 0, 0.0};

    complex_t w = initial_guess(z);
    if (w == complex_t(-1.0, 0.0)) return {w, 0, std::abs(w * std::exp(w) - z)};

    int iters = 0;
    for (; iters < kMaxIters; ++iters) {
        const complex_t ew = std::exp(w);
        const complex_t f = w * ew - z;
        const complex_t wp1 = w + 1.0;
        // Halley: dw = f / (e^w (w+1) - (w+2) f / (2(w+1))).
        if (std::abs(wp1) < 1e-12) break;  // derivative degenerate; keep expansion value
        const complex_t denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        complex_t dw = f / denom;
        // keep steps from vaulting onto another branch
        const double cap = 0.5 * (1.0 + std::abs(w));
        if (std::abs(dw) > cap) dw *= cap / std::abs(dw);
        w -= dw;
        if (std::abs(dw) < 1e-15 * (1.0 + std::abs(w))) {
            ++iters;
            break;
        }
    }

    const double residual = std::abs(w * std::exp(w) - z);
    if (residual > 1e-12 * std::fmax(1.0, std::abs(z)))
        throw NonConvergence("lambert_w0 failed to converge", iters, residual);
    return {w, iters, residual};
}

complex_t lambert_w0_over_x(double x, double y) {
    const double t = x * std::exp(y);
    if (std::abs(t) < 1e-8) {
        // W0(z)/x = i e^y (1 - z + 3/2 z^2) + O(z^3/x); exact limit i e^y at x = 0.
        const complex_t z(0.0, t);
        return complex_t(0.0, std::exp(y)) * (1.0 - z + 1.5 * z * z);
    }
    return lambert_w0(complex_t(0.0, t)).w / x;
}

}  // namespace rigidlab

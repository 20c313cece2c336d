#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "rigidlab/seed.hpp"

namespace testutil {

using rigidlab::complex_t;

inline double cdist(complex_t a, complex_t b) { return std::abs(a - b); }

inline bool close(complex_t a, complex_t b, double tol) { return cdist(a, b) < tol; }

// Deterministic engine so frozen expectations stay frozen.
inline std::mt19937& rng() {
    static std::mt19937 gen(20260802u);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

inline complex_t random_disk(double radius) {
    for (;;) {
        const double re = uniform(-radius, radius);
        const double im = uniform(-radius, radius);
        if (re * re + im * im <= radius * radius) return {re, im};
    }
}

// A point of the (x, y) plane strictly inside Omega_f, with margin to spare
// for FD stencils.
inline std::pair<double, double> random_domain_point(const rigidlab::SeedSpec& spec) {
    using rigidlab::SeedFamily;
    switch (spec.family()) {
        case SeedFamily::Constant:
        case SeedFamily::Exponential:
            return {uniform(-2.0, 2.0), uniform(-2.0, 2.0)};
        case SeedFamily::AffineDelta:
            return {uniform(-0.5, 2.0), uniform(-3.0, 3.0)};
        case SeedFamily::GenericAffine: {
            const double a = spec.p0();
            const double lo = a > 0.0 ? -0.5 / a : -2.0;
            return {uniform(lo, 2.0), uniform(-3.0, 3.0)};
        }
        case SeedFamily::Epsilon: {
            const double eps = spec.p0();
            for (;;) {
                const double x = uniform(-2.0 / std::abs(eps), 0.8 / eps);
                const double y = uniform(-1.8 / std::abs(eps), 1.8 / std::abs(eps));
                if (eps * eps * y * y < 4.0 * (1.0 - eps * x) * 0.8) return {x, y};
            }
        }
        case SeedFamily::CauchyKernel: {
            const double d = spec.p0();
            for (;;) {
                const double x = uniform(-1.0, 1.0);
                const double y = uniform(-1.0, 1.0);
                const double dx = x - d * d / 4.0;
                if (dx * dx + y * y > 0.09) return {x, y};
            }
        }
        case SeedFamily::NonHoloTest:
            return {uniform(-0.4, 0.4), uniform(-1.0, 1.0)};
    }
    return {0.0, 0.0};
}

// An argument w strictly inside the seed's holomorphy domain.
inline complex_t random_seed_argument(const rigidlab::SeedSpec& spec) {
    using rigidlab::SeedFamily;
    switch (spec.family()) {
        case SeedFamily::Epsilon: {
            const double bound = 2.0 / std::abs(spec.p0());
            for (;;) {
                const complex_t w = random_disk(0.9 * bound);
                if (std::abs(w.imag()) > 1e-3 || std::abs(w.real()) < 0.8 * bound) return w;
            }
        }
        case SeedFamily::Exponential:
            return {uniform(-2.0, 2.0), uniform(-1.4, 1.4)};
        case SeedFamily::CauchyKernel: {
            const double d = spec.p0();
            for (;;) {
                const complex_t w = random_disk(3.0);
                if (std::abs(w - complex_t(0.0, -d)) > 0.3) return w;
            }
        }
        default:
            return random_disk(3.0);
    }
}

}  // namespace testutil

#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "rigidlab/errors.hpp"

namespace rigidlab {

using complex_t = std::complex<double>;

enum class SeedFamily {
    Constant,      // f(w) = i*c,                c > 0
    AffineDelta,   // f(w) = w + i*delta,        delta > 0
    Epsilon,       // f(w) = (-eps*w + i*sqrt(4 - eps^2 w^2))/2,  eps != 0
    Exponential,   // f(w) = i*exp(w)
    CauchyKernel,  // f(w) = -1/(w + i*delta),   delta > 0
    GenericAffine, // f(w) = a*w + b + i*d,      d > 0
    NonHoloTest,   // f(w, wbar) = w + i*delta + c*wbar,  delta > 0 (not holomorphic for c != 0)
};

/// Symbolic seed descriptor: family tag plus its real parameters.
/// Parameters are validated at construction; evaluation assumes them valid.
class SeedSpec {
public:
    static SeedSpec constant(double c);
    static SeedSpec affine_delta(double delta);
    static SeedSpec epsilon(double eps);
    static SeedSpec exponential();
    static SeedSpec cauchy(double delta);
    static SeedSpec generic_affine(double slope, double intercept, double imag);
    static SeedSpec non_holo_test(double delta, double c);

    SeedFamily family() const { return family_; }
    double p0() const { return p0_; }
    double p1() const { return p1_; }
    double p2() const { return p2_; }

    /// Named parameters, e.g. {"delta": 1.0}; used by the JSON/CLI layers.
    std::map<std::string, double> params() const;

    /// True when d/dwbar vanishes identically (every family except NonHoloTest
    /// with c != 0).
    bool holomorphic() const;

    bool operator==(const SeedSpec&) const = default;

private:
    SeedSpec(SeedFamily f, double a, double b, double c)
        : family_(f), p0_(a), p1_(b), p2_(c) {}

    SeedFamily family_;
    double p0_, p1_, p2_;
};

/// f and its Wirtinger derivatives at one argument.
struct SeedEval {
    complex_t value;    // f
    complex_t d_dw;     // f_w (= f' for holomorphic families)
    complex_t d_dwbar;  // f_wbar (exactly 0 except NonHoloTest)
};

std::string family_name(SeedFamily f);
SeedSpec make_seed(const std::string& family, const std::map<std::string, double>& params);

/// Parses the CLI shorthand "family[:p1[,p2[,p3]]]", e.g. "delta:1", "eps:0.5",
/// "affine:2,0,1", "nonholo:1,0.2", "exp", "cauchy:1", "const:1".
SeedSpec parse_seed_shorthand(const std::string& text);

/// Evaluates f, f_w, f_wbar at w. Throws OutsideSeedDomain when w leaves the
/// seed's holomorphy domain.
SeedEval eval_seed(const SeedSpec& spec, complex_t w);

/// Domain membership without evaluation. Epsilon excludes the real rays
/// |Re w| >= 2/|eps| at Im w = 0; Exponential requires |Im w| < pi/2;
/// CauchyKernel excludes the pole -i*delta; the rest accept all of C.
bool seed_domain_contains(const SeedSpec& spec, complex_t w);

/// Composes phi(f) = a*f + b for the families closed under affine maps
/// (Constant, AffineDelta, GenericAffine). Throws UnsupportedComposition
/// otherwise; callers fall back to eval-level composition.
SeedSpec apply_affine(const SeedSpec& spec, double a, double b);

/// Holomorphic perturbation directions h used by the propagator.
struct PerturbationSpec {
    enum class Kind { ConstantFn, IdentityFn, AffineFn, MonomialFn, WrapSeed };

    static PerturbationSpec constant_fn(complex_t c);
    static PerturbationSpec identity_fn();
    static PerturbationSpec affine_fn(complex_t slope, complex_t intercept);
    static PerturbationSpec monomial_fn(complex_t coeff, int degree);
    /// Self-perturbation h = f: delegates to eval_seed of the wrapped spec.
    static PerturbationSpec wrap_seed(const SeedSpec& spec);

    Kind kind{Kind::IdentityFn};
    complex_t coeff{1.0, 0.0};   // ConstantFn value, AffineFn/MonomialFn coefficient
    complex_t offset{0.0, 0.0};  // AffineFn intercept
    int degree{1};               // MonomialFn exponent, >= 0
    std::optional<SeedSpec> seed;  // WrapSeed target
};

complex_t eval_perturbation(const PerturbationSpec& h, complex_t w);

/// h'(w); needed when a perturbed seed f + eps*h is solved by Newton.
complex_t perturbation_derivative(const PerturbationSpec& h, complex_t w);

}  // namespace rigidlab

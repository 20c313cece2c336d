#include "rigidlab/seed.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace rigidlab {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

SeedSpec SeedSpec::constant(double c) {
    require(c > 0.0, "Constant seed requires c > 0");
    return SeedSpec(SeedFamily::Constant, c, 0.0, 0.0);
}

SeedSpec SeedSpec::affine_delta(double delta) {
    require(delta > 0.0, "AffineDelta seed requires delta > 0");
    return SeedSpec(SeedFamily::AffineDelta, delta, 0.0, 0.0);
}

SeedSpec SeedSpec::epsilon(double eps) {
    require(eps != 0.0 && std::isfinite(eps), "Epsilon seed requires eps != 0");
    return SeedSpec(SeedFamily::Epsilon, eps, 0.0, 0.0);
}

SeedSpec SeedSpec::exponential() {
    return SeedSpec(SeedFamily::Exponential, 0.0, 0.0, 0.0);
}

SeedSpec SeedSpec::cauchy(double delta) {
    require(delta > 0.0, "CauchyKernel seed requires delta > 0");
    return SeedSpec(SeedFamily::CauchyKernel, delta, 0.0, 0.0);
}

SeedSpec SeedSpec::generic_affine(double slope, double intercept, double imag) {
    require(imag > 0.0, "GenericAffine seed requires imag > 0");
    return SeedSpec(SeedFamily::GenericAffine, slope, intercept, imag);
}

SeedSpec SeedSpec::non_holo_test(double delta, double c) {
    require(delta > 0.0, "NonHoloTest seed requires delta > 0");
    return SeedSpec(SeedFamily::NonHoloTest, delta, c, 0.0);
}

std::map<std::string, double> SeedSpec::params() const {
    switch (family_) {
        case SeedFamily::Constant: return {{"c", p0_}};
        case SeedFamily::AffineDelta: return {{"delta", p0_}};
        case SeedFamily::Epsilon: return {{"eps", p0_}};
        case SeedFamily::Exponential: return {};
        case SeedFamily::CauchyKernel: return {{"delta", p0_}};
        case SeedFamily::GenericAffine:
            return {{"slope", p0_}, {"intercept", p1_}, {"imag", p2_}};
        case SeedFamily::NonHoloTest: return {{"delta", p0_}, {"c", p1_}};
    }
    return {};
}

bool SeedSpec::holomorphic() const {
    return family_ != SeedFamily::NonHoloTest || p1_ == 0.0;
}

std::string family_name(SeedFamily f) {
    switch (f) {
        case SeedFamily::Constant: return "Constant";
        case SeedFamily::AffineDelta: return "AffineDelta";
        case SeedFamily::Epsilon: return "Epsilon";
        case SeedFamily::Exponential: return "Exponential";
        case SeedFamily::CauchyKernel: return "CauchyKernel";
        case SeedFamily::GenericAffine: return "GenericAffine";
        case SeedFamily::NonHoloTest: return "NonHoloTest";
    }
    return "?";
}

SeedSpec make_seed(const std::string& family, const std::map<std::string, double>& params) {
    auto get = [&](const char* name) {
        auto it = params.find(name);
        if (it == params.end())
            throw std::invalid_argument("seed family " + family + " missing parameter " + name);
        return it->second;
    };
    if (family == "Constant") return SeedSpec::constant(get("c"));
    if (family == "AffineDelta") return SeedSpec::affine_delta(get("delta"));
    if (family == "Epsilon") return SeedSpec::epsilon(get("eps"));
    if (family == "Exponential") return SeedSpec::exponential();
    if (family == "CauchyKernel") return SeedSpec::cauchy(get("delta"));
    if (family == "GenericAffine")
        return SeedSpec::generic_affine(get("slope"), get("intercept"), get("imag"));
    if (family == "NonHoloTest") return SeedSpec::non_holo_test(get("delta"), get("c"));
    throw std::invalid_argument("unknown seed family: " + family);
}

SeedSpec parse_seed_shorthand(const std::string& text) {
    std::string name = text;
    std::vector<double> ps;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument("bad seed parameter: " + item);
            ps.push_back(v);
        }
    }
    auto arity = [&](size_t n) {
        if (ps.size() != n)
            throw std::invalid_argument("seed '" + name + "' expects " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (name == "const") { arity(1); return SeedSpec::constant(ps[0]); }
    if (name == "delta") { arity(1); return SeedSpec::affine_delta(ps[0]); }
    if (name == "eps") { arity(1); return SeedSpec::epsilon(ps[0]); }
    if (name == "exp") { arity(0); return SeedSpec::exponential(); }
    if (name == "cauchy") { arity(1); return SeedSpec::cauchy(ps[0]); }
    if (name == "affine") { arity(3); return SeedSpec::generic_affine(ps[0], ps[1], ps[2]); }
    if (name == "nonholo") { arity(2); return SeedSpec::non_holo_test(ps[0], ps[1]); }
    throw std::invalid_argument("unknown seed shorthand: " + name);
}

bool seed_domain_contains(const SeedSpec& spec, complex_t w) {
    switch (spec.family()) {
        case SeedFamily::Constant:
        case SeedFamily::AffineDelta:
        case SeedFamily::GenericAffine:
        case SeedFamily::NonHoloTest:
            return true;
        case SeedFamily::Epsilon: {
            // The branch cut of sqrt(4 - eps^2 w^2) is exactly the real rays
            // |Re w| >= 2/|eps|.
            const double bound = 2.0 / std::abs(spec.p0());
            return !(w.imag() == 0.0 && std::abs(w.real()) >= bound);
        }
        case SeedFamily::Exponential:
            return std::abs(w.imag()) < kHalfPi;
        case SeedFamily::CauchyKernel:
            return w != complex_t(0.0, -spec.p0());
    }
    return false;
}

SeedEval eval_seed(const SeedSpec& spec, complex_t w) {
    const complex_t i(0.0, 1.0);
    switch (spec.family()) {
        case SeedFamily::Constant:
            return {complex_t(0.0, spec.p0()), 0.0, 0.0};
        case SeedFamily::AffineDelta:
            return {w + complex_t(0.0, spec.p0()), 1.0, 0.0};
        case SeedFamily::GenericAffine:
            return {spec.p0() * w + complex_t(spec.p1(), spec.p2()), spec.p0(), 0.0};
        case SeedFamily::NonHoloTest:
            return {w + complex_t(0.0, spec.p0()) + spec.p1() * std::conj(w), 1.0, spec.p1()};
        case SeedFamily::Exponential: {
            if (!seed_domain_contains(spec, w))
                throw OutsideSeedDomain("exponential seed: |Im w| >= pi/2");
            const complex_t v = i * std::exp(w);
            return {v, v, 0.0};
        }
        case SeedFamily::Epsilon: {
            if (!seed_domain_contains(spec, w))
                throw OutsideSeedDomain("epsilon seed: w on the real cut |w| >= 2/|eps|");
            const double eps = spec.p0();
            const complex_t root = std::sqrt(4.0 - eps * eps * w * w);
            const complex_t v = (-eps * w + i * root) / 2.0;
            return {v, i * eps * v / root, 0.0};
        }
        case SeedFamily::CauchyKernel: {
            const complex_t den = w + complex_t(0.0, spec.p0());
            if (den == complex_t(0.0, 0.0))
                throw OutsideSeedDomain("cauchy seed: pole at w = -i*delta");
            return {-1.0 / den, 1.0 / (den * den), 0.0};
        }
    }
    throw std::logic_error("eval_seed: unhandled family");
}

SeedSpec apply_affine(const SeedSpec& spec, double a, double b) {
    if (!(a > 0.0)) throw std::invalid_argument("apply_affine requires a > 0");
    switch (spec.family()) {
        case SeedFamily::Constant:
            return SeedSpec::generic_affine(0.0, b, a * spec.p0());
        case SeedFamily::AffineDelta:
            return SeedSpec::generic_affine(a, b, a * spec.p0());
        case SeedFamily::GenericAffine:
            return SeedSpec::generic_affine(a * spec.p0(), a * spec.p1() + b, a * spec.p2());
        default:
            throw UnsupportedComposition("a*f + b leaves the closed-form catalog for family " +
                                         family_name(spec.family()));
    }
}

PerturbationSpec PerturbationSpec::constant_fn(complex_t c) {
    PerturbationSpec h;
    h.kind = Kind::ConstantFn;
    h.coeff = c;
    return h;
}

PerturbationSpec PerturbationSpec::identity_fn() {
    PerturbationSpec h;
    h.kind = Kind::IdentityFn;
    return h;
}

PerturbationSpec PerturbationSpec::affine_fn(complex_t slope, complex_t intercept) {
    PerturbationSpec h;
    h.kind = Kind::AffineFn;
    h.coeff = slope;
    h.offset = intercept;
    return h;
}

PerturbationSpec PerturbationSpec::monomial_fn(complex_t coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    PerturbationSpec h;
    h.kind = Kind::MonomialFn;
    h.coeff = coeff;
    h.degree = degree;
    return h;
}

PerturbationSpec PerturbationSpec::wrap_seed(const SeedSpec& spec) {
    PerturbationSpec h;
    h.kind = Kind::WrapSeed;
    h.seed = spec;
    return h;
}

namespace {

complex_t ipow(complex_t w, int n) {
    complex_t r(1.0, 0.0);
    for (int k = 0; k < n; ++k) r *= w;
    return r;
}

}  // namespace

complex_t eval_perturbation(const PerturbationSpec& h, complex_t w) {
    switch (h.kind) {
        case PerturbationSpec::Kind::ConstantFn: return h.coeff;
        case PerturbationSpec::Kind::IdentityFn: return w;
        case PerturbationSpec::Kind::AffineFn: return h.coeff * w + h.offset;
        case PerturbationSpec::Kind::MonomialFn: return h.coeff * ipow(w, h.degree);
        case PerturbationSpec::Kind::WrapSeed: return eval_seed(*h.seed, w).value;
    }
    throw std::logic_error("eval_perturbation: unhandled kind");
}

complex_t perturbation_derivative(const PerturbationSpec& h, complex_t w) {
    switch (h.kind) {
        case PerturbationSpec::Kind::ConstantFn: return 0.0;
        case PerturbationSpec::Kind::IdentityFn: return 1.0;
        case PerturbationSpec::Kind::AffineFn: return h.coeff;
        case PerturbationSpec::Kind::MonomialFn:
            return h.degree == 0 ? complex_t(0.0, 0.0)
                                 : double(h.degree) * h.coeff * ipow(w, h.degree - 1);
        case PerturbationSpec::Kind::WrapSeed: return eval_seed(*h.seed, w).d_dw;
    }
    throw std::logic_error("perturbation_derivative: unhandled kind");
}

}  // namespace rigidlab

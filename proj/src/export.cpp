#include "rigidlab/export.hpp"

#include <cstdio>
#include <sstream>

namespace rigidlab {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* status_name(Outcome o) { return outcome_name(o); }

Outcome status_from_name(const std::string& name) {
    if (name == "Converged") return Outcome::Converged;
    if (name == "Shock") return Outcome::Shock;
    if (name == "EllipticityLoss") return Outcome::EllipticityLoss;
    if (name == "OutsideSeedDomain") return Outcome::OutsideSeedDomain;
    if (name == "NonConvergence") return Outcome::NonConvergence;
    throw std::invalid_argument("unknown status: " + name);
}

nlohmann::json seed_to_json(const SeedSpec& spec) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : spec.params()) params[k] = v;
    return {{"family", family_name(spec.family())}, {"params", params}};
}

SeedSpec seed_from_json(const nlohmann::json& j) {
    std::map<std::string, double> params;
    if (j.contains("params"))
        for (const auto& [k, v] : j.at("params").items()) params[k] = v.get<double>();
    return make_seed(j.at("family").get<std::string>(), params);
}

nlohmann::json solver_config_to_json(const SolverConfig& cfg) {
    return {{"newton_tol", cfg.newton_tol},
            {"shock_tol", cfg.shock_tol},
            {"max_newton_iters", cfg.max_newton_iters},
            {"continuation_steps", cfg.continuation_steps}};
}

SolverConfig solver_config_from_json(const nlohmann::json& j) {
    SolverConfig cfg;
    cfg.newton_tol = j.value("newton_tol", cfg.newton_tol);
    cfg.shock_tol = j.value("shock_tol", cfg.shock_tol);
    cfg.max_newton_iters = j.value("max_newton_iters", cfg.max_newton_iters);
    cfg.continuation_steps = j.value("continuation_steps", cfg.continuation_steps);
    if (!(cfg.newton_tol > 0.0) || !(cfg.shock_tol > 0.0) || cfg.max_newton_iters <= 0 ||
        cfg.continuation_steps <= 0)
        throw std::invalid_argument("solver config values must be positive");
    return cfg;
}

nlohmann::json fd_config_to_json(const FDConfig& fd) {
    return {{"step", fd.step},
            {"scheme", fd.scheme == FDConfig::Scheme::Central4 ? "central4" : "central2"}};
}

FDConfig fd_config_from_json(const nlohmann::json& j) {
    FDConfig fd;
    fd.step = j.value("step", fd.step);
    if (!(fd.step > 0.0)) throw std::invalid_argument("fd step must be positive");
    const std::string scheme = j.value("scheme", std::string("central2"));
    if (scheme == "central2")
        fd.scheme = FDConfig::Scheme::Central2;
    else if (scheme == "central4")
        fd.scheme = FDConfig::Scheme::Central4;
    else
        throw std::invalid_argument("unknown fd scheme: " + scheme);
    return fd;
}

nlohmann::json grid_spec_to_json(const GridSpec& g) {
    return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"y_min", g.y_min},
            {"y_max", g.y_max}, {"nx", g.nx},       {"ny", g.ny}};
}

GridSpec grid_spec_from_json(const nlohmann::json& j) {
    return GridSpec(j.at("x_min").get<double>(), j.at("x_max").get<double>(),
                    j.at("y_min").get<double>(), j.at("y_max").get<double>(),
                    j.at("nx").get<int>(), j.at("ny").get<int>());
}

std::string grid_field_to_csv(const GridField& field) {
    std::string out;
    out.reserve(field.samples.size() * 96 + 96);
    out += "x,y,re_lambda,im_lambda,re_mu,im_mu,alpha,beta,delta_disc,abs_jac,status\n";
    for (const SpectralSample& s : field.samples) {
        out += fmt_double(s.x);
        out += ',';
        out += fmt_double(s.y);
        out += ',';
        out += fmt_double(s.lambda.real());
        out += ',';
        out += fmt_double(s.lambda.imag());
        out += ',';
        out += fmt_double(s.mu.real());
        out += ',';
        out += fmt_double(s.mu.imag());
        out += ',';
        out += fmt_double(s.alpha);
        out += ',';
        out += fmt_double(s.beta);
        out += ',';
        out += fmt_double(s.delta_disc);
        out += ',';
        out += fmt_double(std::abs(s.jac));
        out += ',';
        out += status_name(s.status.outcome);
        out += '\n';
    }
    return out;
}

namespace {

// Writers are hand-rolled so every double goes through fmt_double and the
// byte stream is identical run to run.
void append_kv(std::string& out, const char* key, double v, bool comma = true) {
    out += '"';
    out += key;
    out += "\":";
    out += fmt_double(v);
    if (comma) out += ',';
}

std::string sample_json_object(const SpectralSample& s) {
    std::string out = "{";
    append_kv(out, "x", s.x);
    append_kv(out, "y", s.y);
    append_kv(out, "re_lambda", s.lambda.real());
    append_kv(out, "im_lambda", s.lambda.imag());
    append_kv(out, "re_w0", s.w0.real());
    append_kv(out, "im_w0", s.w0.imag());
    append_kv(out, "re_jac", s.jac.real());
    append_kv(out, "im_jac", s.jac.imag());
    append_kv(out, "re_mu", s.mu.real());
    append_kv(out, "im_mu", s.mu.imag());
    append_kv(out, "alpha", s.alpha);
    append_kv(out, "beta", s.beta);
    append_kv(out, "delta_disc", s.delta_disc);
    append_kv(out, "abs_jac", s.status.jacobian_modulus);
    append_kv(out, "status_im_lambda", s.status.im_lambda);
    out += "\"status\":\"";
    out += status_name(s.status.outcome);
    out += "\"}";
    return out;
}

}  // namespace

std::string sample_to_json(const SpectralSample& s) { return sample_json_object(s); }

std::string grid_field_to_json(const GridField& field) {
    std::string out = "{\"grid\":{";
    append_kv(out, "x_min", field.grid.x_min);
    append_kv(out, "x_max", field.grid.x_max);
    append_kv(out, "y_min", field.grid.y_min);
    append_kv(out, "y_max", field.grid.y_max);
    out += "\"nx\":" + std::to_string(field.grid.nx) + ",";
    out += "\"ny\":" + std::to_string(field.grid.ny) + "},";
    out += "\"seed\":" + seed_to_json(field.seed).dump() + ",";
    out += "\"samples\":[";
    for (size_t k = 0; k < field.samples.size(); ++k) {
        if (k) out += ',';
        out += '\n';
        out += sample_json_object(field.samples[k]);
    }
    out += "]}\n";
    return out;
}

GridField grid_field_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    GridField field{grid_spec_from_json(j.at("grid")), seed_from_json(j.at("seed")), {}};
    field.samples.reserve(j.at("samples").size());
    for (const auto& js : j.at("samples")) {
        SpectralSample s;
        s.x = js.at("x").get<double>();
        s.y = js.at("y").get<double>();
        s.lambda = complex_t(js.at("re_lambda").get<double>(), js.at("im_lambda").get<double>());
        s.w0 = complex_t(js.at("re_w0").get<double>(), js.at("im_w0").get<double>());
        s.jac = complex_t(js.at("re_jac").get<double>(), js.at("im_jac").get<double>());
        s.mu = complex_t(js.at("re_mu").get<double>(), js.at("im_mu").get<double>());
        s.alpha = js.at("alpha").get<double>();
        s.beta = js.at("beta").get<double>();
        s.delta_disc = js.at("delta_disc").get<double>();
        s.status.outcome = status_from_name(js.at("status").get<std::string>());
        s.status.jacobian_modulus = js.at("abs_jac").get<double>();
        s.status.im_lambda = js.at("status_im_lambda").get<double>();
        field.samples.push_back(s);
    }
    if (field.samples.size() !=
        static_cast<size_t>(field.grid.nx) * static_cast<size_t>(field.grid.ny))
        throw std::invalid_argument("grid field: sample count does not match nx*ny");
    return field;
}

std::string shock_points_to_csv(const std::vector<ShockPoint>& points) {
    std::string out = "x,y,abs_jac\n";
    for (const ShockPoint& p : points) {
        out += fmt_double(p.x);
        out += ',';
        out += fmt_double(p.y);
        out += ',';
        out += fmt_double(p.abs_jac);
        out += '\n';
    }
    return out;
}

std::string leaf_to_csv(const std::vector<complex_t>& mu) {
    std::string out = "re_mu,im_mu\n";
    for (const complex_t m : mu) {
        out += fmt_double(m.real());
        out += ',';
        out += fmt_double(m.imag());
        out += '\n';
    }
    return out;
}

}  // namespace rigidlab

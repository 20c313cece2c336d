#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "rigidlab/export.hpp"

using namespace rigidlab;

namespace {

struct RunConfig {
    std::optional<SeedSpec> seed;
    SolverConfig solver;
    FDConfig fd;
    std::optional<GridSpec> grid;
    std::string output_format = "csv";
    std::string output_path;  // empty means stdout
};

GridSpec parse_grid_shorthand(const std::string& text) {
    double x0, x1, y0, y1;
    int nx, ny;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d,%lf:%lf:%d", &x0, &x1, &nx, &y0, &y1, &ny) != 6)
        throw std::invalid_argument("grid must be x0:x1:nx,y0:y1:ny");
    return GridSpec(x0, x1, y0, y1, nx, ny);
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    nlohmann::json j;
    in >> j;
    RunConfig cfg;
    if (j.contains("seed")) cfg.seed = seed_from_json(j.at("seed"));
    if (j.contains("solver")) cfg.solver = solver_config_from_json(j.at("solver"));
    if (j.contains("fd")) cfg.fd = fd_config_from_json(j.at("fd"));
    if (j.contains("grid")) cfg.grid = grid_spec_from_json(j.at("grid"));
    if (j.contains("output_format")) cfg.output_format = j.at("output_format").get<std::string>();
    if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
    return cfg;
}

int write_output(const RunConfig& cfg, const std::string& payload) {
    if (cfg.output_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out || !(out << payload) || !out.flush()) {
        std::cerr << "error: cannot write " << cfg.output_path << "\n";
        return 1;
    }
    return 0;
}

std::string seed_label(const SeedSpec& spec) {
    std::string s = family_name(spec.family());
    const auto params = spec.params();
    if (!params.empty()) {
        s += "(";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) s += ",";
            s += k + "=" + fmt_double(v);
            first = false;
        }
        s += ")";
    }
    return s;
}

// ---- verify suites --------------------------------------------------------

struct Check {
    std::string name;
    double x, y;
    double magnitude;
    double tolerance;
    bool pass;
};

std::vector<std::pair<double, double>> builtin_points(const SeedSpec& spec) {
    switch (spec.family()) {
        case SeedFamily::Epsilon: {
            const double s = 1.0 / std::abs(spec.p0());
            const double eps = spec.p0();
            std::vector<std::pair<double, double>> keep;
            for (auto [x, y] : std::vector<std::pair<double, double>>{
                     {0.0, 0.0}, {0.6 * s, s}, {-s, 0.5 * s}, {1.2 * s, 0.0}, {0.3 * s, -1.4 * s}})
                if (eps * eps * y * y < 4.0 * (1.0 - eps * x) * 0.7) keep.push_back({x, y});
            return keep;
        }
        case SeedFamily::CauchyKernel: {
            const double cx = spec.p0() * spec.p0() / 4.0;
            std::vector<std::pair<double, double>> keep;
            for (auto [x, y] : std::vector<std::pair<double, double>>{
                     {0.0, 0.0}, {-0.5, 0.5}, {0.6, 0.5}, {1.0, 1.0}, {0.0, 2.0}}) {
                const double dx = x - cx;
                if (dx * dx + y * y > 0.04) keep.push_back({x, y});
            }
            return keep;
        }
        case SeedFamily::GenericAffine: {
            const double a = std::max(1.0, std::abs(spec.p0()));
            return {{0.0, 0.0}, {0.25 / a, 1.0}, {0.5 / a, -1.0}, {1.0 / a, 2.0}};
        }
        case SeedFamily::AffineDelta:
            return {{0.0, 0.0}, {0.25, 1.0}, {0.5, -1.0}, {1.0, 2.0}, {-0.4, 0.5}};
        case SeedFamily::NonHoloTest:
            return {{0.0, -1.0}, {0.0, -0.5}, {0.0, 0.0}, {0.0, 0.5}, {0.0, 1.0}};
        default:
            return {{0.0, 0.0}, {1.0, 1.0}, {-1.0, 0.5}, {2.0, -1.0}, {0.3, 1.0}};
    }
}

void suite_rigidity(const SeedSpec& spec, const RunConfig& cfg, std::vector<Check>& out) {
    for (auto [x, y] : builtin_points(spec)) {
        if (spec.family() == SeedFamily::NonHoloTest) {
            // the transport residual is nonzero here; it must match the formula
            const auto rep = rigidity_residual(spec, 0.0, y, cfg.fd, cfg.solver);
            const double diff = std::abs(rep.value - obstruction_initial(spec, y));
            out.push_back({"rigidity_vs_obstruction", 0.0, y, diff, 1e-5, diff < 1e-5});
        } else {
            const auto rep = rigidity_residual(spec, x, y, cfg.fd, cfg.solver);
            out.push_back({"rigidity", x, y, rep.magnitude, 1e-6, rep.magnitude < 1e-6});
        }
    }
}

void suite_dilatation(const SeedSpec& spec, const RunConfig& cfg, std::vector<Check>& out) {
    for (auto [x, y] : builtin_points(spec)) {
        const auto rep = self_dilatation_residual(spec, x, y, cfg.fd, cfg.solver);
        if (spec.holomorphic()) {
            out.push_back({"self_dilatation", x, y, rep.magnitude, 1e-6, rep.magnitude < 1e-6});
        } else {
            // residual must vanish exactly when the transport obstruction does
            const auto rig = rigidity_residual(spec, x, y, cfg.fd, cfg.solver);
            const bool consistent = (rep.magnitude < 1e-6) == (rig.magnitude < 1e-6);
            out.push_back({"dilatation_consistency", x, y, rep.magnitude, 1e-6, consistent});
        }
    }
}

void suite_obstruction(const SeedSpec& spec, const RunConfig& cfg, std::vector<Check>& out) {
    for (double y : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        if (!seed_domain_contains(spec, {y, 0.0})) continue;
        const auto rep = rigidity_residual(spec, 0.0, y, cfg.fd, cfg.solver);
        const double diff = std::abs(rep.value - obstruction_initial(spec, y));
        out.push_back({"obstruction_formula", 0.0, y, diff, 1e-5, diff < 1e-5});

        const auto poi = poincare_residual_initial(spec, y, cfg.fd, cfg.solver);
        const double pd = std::abs(poi.detail.at("R_fd") - poi.value);
        out.push_back({"poincare_residual", 0.0, y, pd, 1e-4, pd < 1e-4});
    }
}

void suite_propagator(const SeedSpec& spec, const RunConfig& cfg, std::vector<Check>& out) {
    if (spec.family() == SeedFamily::NonHoloTest) return;  // tangent theory needs f_wbar = 0
    const std::vector<PerturbationSpec> dirs = {PerturbationSpec::constant_fn({1.0, 0.0}),
                                                PerturbationSpec::identity_fn()};
    for (auto [x, y] : builtin_points(spec)) {
        for (size_t d = 0; d < dirs.size(); ++d) {
            const auto rep = propagator_fd_check(spec, dirs[d], x, y, 1e-6, cfg.solver);
            out.push_back({d == 0 ? "propagator_fd_const" : "propagator_fd_identity", x, y,
                           rep.magnitude, 1e-5, rep.magnitude < 1e-5});
        }
        const auto tw = twisted_multiplicativity_residual(spec, dirs[0], dirs[1], x, y, cfg.solver);
        out.push_back(
            {"twisted_multiplicativity", x, y, tw.magnitude, 1e-12, tw.magnitude < 1e-12});
    }
}

void suite_equivariance(const SeedSpec& spec, const RunConfig& cfg, std::vector<Check>& out) {
    if (spec.family() == SeedFamily::NonHoloTest) return;
    for (auto [a, b] : std::vector<std::pair<double, double>>{{2.0, 0.0}, {1.0, 3.0}, {0.5, -1.0}}) {
        for (auto [x, y] :
             std::vector<std::pair<double, double>>{{0.1, 0.0}, {0.25, 0.5}, {-0.2, -0.5}}) {
            try {
                const auto rep = affine_equivariance_residual(spec, a, b, x, y, cfg.solver);
                out.push_back(
                    {"affine_equivariance", x, y, rep.magnitude, 1e-11, rep.magnitude < 1e-11});
            } catch (const SolverFailure&) {
                out.push_back({"affine_equivariance", x, y, HUGE_VAL, 1e-11, false});
            }
        }
    }
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    const SeedSpec spec = *cfg.seed;
    std::vector<Check> checks;
    if (suite == "rigidity" || suite == "all") suite_rigidity(spec, cfg, checks);
    if (suite == "dilatation" || suite == "all") suite_dilatation(spec, cfg, checks);
    if (suite == "obstruction" || suite == "all") suite_obstruction(spec, cfg, checks);
    if (suite == "propagator" || suite == "all") suite_propagator(spec, cfg, checks);
    if (suite == "equivariance" || suite == "all") suite_equivariance(spec, cfg, checks);
    if (checks.empty()) {
        std::cerr << "error: suite '" << suite << "' produced no checks for this seed\n";
        return 1;
    }

    std::string payload = "[";
    bool all_pass = true;
    for (size_t k = 0; k < checks.size(); ++k) {
        const Check& c = checks[k];
        all_pass = all_pass && c.pass;
        if (k) payload += ',';
        payload += "\n{\"name\":\"" + c.name + "\",\"seed\":\"" + seed_label(spec) +
                   "\",\"point\":[" + fmt_double(c.x) + "," + fmt_double(c.y) +
                   "],\"magnitude\":" + fmt_double(c.magnitude) +
                   ",\"tolerance\":" + fmt_double(c.tolerance) +
                   ",\"pass\":" + (c.pass ? "true" : "false") + "}";
    }
    payload += "\n]\n";
    if (const int rc = write_output(cfg, payload); rc != 0) return rc;
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burgers-transform field laboratory"};
    app.require_subcommand(1);

    std::string seed_text, grid_text, config_path, format, out_path, suite = "all";
    double x = 0.0, y = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed_text, "seed shorthand, e.g. delta:1, eps:0.5, exp");
        sub->add_option("--config", config_path, "JSON config file; flags override");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate one point, JSON to stdout");
    add_common(eval);
    eval->add_option("--x", x, "x coordinate");
    eval->add_option("--y", y, "y coordinate");

    CLI::App* grid = app.add_subcommand("grid", "sample a grid and export it");
    add_common(grid);
    grid->add_option("--grid", grid_text, "x0:x1:nx,y0:y1:ny");
    grid->add_option("--format", format, "csv or json");
    grid->add_option("--out,-o", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run identity checks, JSON report");
    add_common(verify);
    verify->add_option("--suite", suite,
                       "rigidity|dilatation|obstruction|propagator|equivariance|all");
    verify->add_option("--out,-o", out_path, "report file (default stdout)");

    CLI::App* shock = app.add_subcommand("shock", "trace the shock locus in a window");
    add_common(shock);
    shock->add_option("--grid", grid_text, "x0:x1:nx,y0:y1:ny");
    shock->add_option("--out,-o", out_path, "output file (default stdout)");

    CLI::App* leaf = app.add_subcommand("leaf", "export converged Beltrami values");
    add_common(leaf);
    leaf->add_option("--grid", grid_text, "x0:x1:nx,y0:y1:ny");
    leaf->add_option("--out,-o", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config_file(config_path);
        if (!seed_text.empty()) cfg.seed = parse_seed_shorthand(seed_text);
        if (!grid_text.empty()) cfg.grid = parse_grid_shorthand(grid_text);
        if (!format.empty()) cfg.output_format = format;
        if (!out_path.empty()) cfg.output_path = out_path;
        if (!cfg.seed) {
            std::cerr << "error: no seed given (use --seed or a config file)\n";
            return 1;
        }
        if (cfg.output_format != "csv" && cfg.output_format != "json") {
            std::cerr << "error: format must be csv or json\n";
            return 1;
        }

        if (app.got_subcommand(eval)) {
            const SpectralSample s = evaluate_sample(*cfg.seed, x, y, cfg.solver);
            std::cout << sample_to_json(s) << "\n";
            return s.status.outcome == Outcome::Converged ? 0 : 2;
        }
        if (app.got_subcommand(verify)) return cmd_verify(cfg, suite);

        if (!cfg.grid) {
            std::cerr << "error: this command needs --grid (or a grid in the config)\n";
            return 1;
        }
        if (app.got_subcommand(grid)) {
            const GridField field = sample_grid(*cfg.seed, *cfg.grid, cfg.solver);
            return write_output(cfg, cfg.output_format == "json" ? grid_field_to_json(field)
                                                                 : grid_field_to_csv(field));
        }
        if (app.got_subcommand(shock))
            return write_output(cfg,
                                shock_points_to_csv(shock_trace(*cfg.seed, *cfg.grid, cfg.solver)));
        if (app.got_subcommand(leaf))
            return write_output(cfg, leaf_to_csv(leaf_sample(*cfg.seed, *cfg.grid, cfg.solver)));
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

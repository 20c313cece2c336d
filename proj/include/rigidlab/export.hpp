#pragma once

#include <string>

#include <json.hpp>

#include "rigidlab/analysis.hpp"
#include "rigidlab/fields.hpp"

namespace rigidlab {

/// Shortest 17-significant-digit decimal form; round-trips exactly.
std::string fmt_double(double v);

const char* status_name(Outcome o);
Outcome status_from_name(const std::string& name);

nlohmann::json seed_to_json(const SeedSpec& spec);
SeedSpec seed_from_json(const nlohmann::json& j);

nlohmann::json solver_config_to_json(const SolverConfig& cfg);
SolverConfig solver_config_from_json(const nlohmann::json& j);

nlohmann::json fd_config_to_json(const FDConfig& fd);
FDConfig fd_config_from_json(const nlohmann::json& j);

nlohmann::json grid_spec_to_json(const GridSpec& g);
GridSpec grid_spec_from_json(const nlohmann::json& j);

/// CSV with the fixed header
/// x,y,re_lambda,im_lambda,re_mu,im_mu,alpha,beta,delta_disc,abs_jac,status
/// one row per node in row-major order; byte-stable for a given field.
std::string grid_field_to_csv(const GridField& field);

/// JSON {grid, seed, samples:[...]} with the CSV's fields per sample.
/// Hand-rolled writer so the byte stream is deterministic.
std::string grid_field_to_json(const GridField& field);

/// Reads the JSON produced by grid_field_to_json back into a GridField.
GridField grid_field_from_json(const std::string& text);

std::string shock_points_to_csv(const std::vector<ShockPoint>& points);
std::string leaf_to_csv(const std::vector<complex_t>& mu);

/// One SpectralSample as a JSON object string (cmd_eval output).
std::string sample_to_json(const SpectralSample& s);

}  // namespace rigidlab

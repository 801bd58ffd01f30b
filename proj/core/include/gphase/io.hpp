#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "gphase/path.hpp"

namespace gphase {

/// Parse {"closed": bool, "samples": [{"t": real, "R": [reals]}]}.
/// Throws schema_error on malformed input.
ParameterPath parameter_path_from_json(const nlohmann::json& j);
nlohmann::json parameter_path_to_json(const ParameterPath& path);

/// A sphere path is a ParameterPath with R = (Theta, Phi).
SpherePath sphere_path_from_parameter_json(const nlohmann::json& j);

ParameterPath load_parameter_path(const std::string& filename);

/// Simple numeric table with named columns, the common output shape.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Render with 12 significant digits; deterministic bytes.
std::string table_to_csv(const Table& table);
std::string table_to_json(const Table& table);

std::string format_number(double value);

void write_file(const std::string& filename, const std::string& content);

}  // namespace gphase

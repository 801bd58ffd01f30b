#include "gphase/io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gphase/errors.hpp"

namespace gphase {

using nlohmann::json;

ParameterPath parameter_path_from_json(const json& j) {
  try {
    ParameterPath path;
    path.closed = j.value("closed", false);
    const auto& samples = j.at("samples");
    if (!samples.is_array() || samples.size() < 2) {
      throw schema_error("path: need a samples array with >= 2 entries");
    }
    for (const auto& s : samples) {
      path.times.push_back(s.at("t").get<double>());
      const auto& r = s.at("R");
      Eigen::VectorXd point(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) point[i] = r[i].get<double>();
      path.points.push_back(std::move(point));
    }
    path.validate();
    return path;
  } catch (const schema_error&) {
    throw;
  } catch (const std::exception& e) {
    throw schema_error(std::string("path: ") + e.what());
  }
}

json parameter_path_to_json(const ParameterPath& path) {
  json samples = json::array();
  for (std::size_t k = 0; k < path.size(); ++k) {
    json r = json::array();
    for (Eigen::Index i = 0; i < path.points[k].size(); ++i) {
      r.push_back(path.points[k][i]);
    }
    samples.push_back({{"t", path.times[k]}, {"R", std::move(r)}});
  }
  return {{"closed", path.closed}, {"samples", std::move(samples)}};
}

SpherePath sphere_path_from_parameter_json(const json& j) {
  const ParameterPath p = parameter_path_from_json(j);
  if (p.points.front().size() != 2) {
    throw schema_error("sphere path: R must be the pair (Theta, Phi)");
  }
  std::vector<std::pair<double, double>> angles;
  angles.reserve(p.size());
  for (const auto& point : p.points) angles.emplace_back(point[0], point[1]);
  return sphere_path_from_angles(angles, p.closed);
}

ParameterPath load_parameter_path(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw schema_error("cannot open path file: " + filename);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw schema_error("path file " + filename + ": " + e.what());
  }
  return parameter_path_from_json(j);
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string table_to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_number(row[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string table_to_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj;
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      // Round-trip through the fixed textual precision so CSV and JSON
      // renderings carry identical values.
      obj[table.columns[c]] = std::stod(format_number(row[c]));
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

void write_file(const std::string& filename, const std::string& content) {
  std::ofstream out(filename, std::ios::binary);
  if (!out) throw schema_error("cannot open output file: " + filename);
  out << content;
}

}  // namespace gphase

#include "gphase/scenario.hpp"

#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>

#include "gphase/ab_box.hpp"
#include "gphase/angles.hpp"
#include "gphase/errors.hpp"
#include "gphase/geodesic.hpp"
#include "gphase/hamiltonian.hpp"
#include "gphase/oracle.hpp"
#include "gphase/phase_engine.hpp"
#include "gphase/spin_experiment.hpp"

namespace gphase {

using nlohmann::json;

namespace {

double cfg_num(const json& config, const std::string& key, double fallback) {
  if (!config.contains(key)) return fallback;
  if (!config.at(key).is_number()) {
    throw schema_error("config." + key + " must be a number");
  }
  return config.at(key).get<double>();
}

int cfg_int(const json& config, const std::string& key, int fallback) {
  const double v = cfg_num(config, key, fallback);
  return static_cast<int>(v);
}

SpherePath cfg_sphere_path(const json& config, const std::string& key) {
  if (!config.contains(key)) {
    throw schema_error("config." + key + " (path) is required");
  }
  const auto& node = config.at(key);
  if (node.is_string()) {
    std::ifstream in(node.get<std::string>());
    if (!in) throw schema_error("cannot open path file: " + node.get<std::string>());
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw schema_error(std::string("path file: ") + e.what());
    }
    return sphere_path_from_parameter_json(j);
  }
  return sphere_path_from_parameter_json(node);
}

ParameterPath cfg_parameter_path(const json& config, const std::string& key) {
  if (!config.contains(key)) {
    throw schema_error("config." + key + " (path) is required");
  }
  const auto& node = config.at(key);
  if (node.is_string()) return load_parameter_path(node.get<std::string>());
  return parameter_path_from_json(node);
}

ScenarioResult run_conical_sign_change(const json& config, std::uint64_t) {
  const double r = cfg_num(config, "r", 1.0);
  const int samples = cfg_int(config, "samples", 200);
  const int path_samples = cfg_int(config, "path_samples", 201);
  const double phi_max = cfg_num(config, "phi_max", two_pi);
  const HamiltonianModel model = conical_model(r);

  ScenarioResult result;
  result.table.columns = {"phi_f",       "gamma_wrapped", "gamma_unwrapped",
                          "overlap_phase", "connection_phase"};
  for (int k = 1; k <= samples; ++k) {
    const double phi_f = phi_max * k / (samples + 1);
    const ParameterPath path = phi_sweep(0.0, phi_f, path_samples, 1.0);
    const PhaseDecomposition d = geometric_phase(model, path, 1);
    result.table.rows.push_back({phi_f, d.geometric_wrapped,
                                 d.geometric_unwrapped, d.overlap_phase,
                                 d.connection_phase});
  }
  return result;
}

ScenarioResult run_ab_sweep(const json& config, std::uint64_t) {
  ABConfig ab;
  ab.eta = cfg_num(config, "eta", 0.3);
  ab.delta_theta = cfg_num(config, "delta_theta", 1.5 * pi);
  ab.mode = cfg_int(config, "mode", 1);
  ab.quadrature_nodes = cfg_int(config, "quadrature_nodes", 4096);
  const int steps = cfg_int(config, "steps", 200);
  if (steps < 2) throw schema_error("ab-sweep: steps must be >= 2");

  std::vector<double> thetas;
  thetas.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) thetas.push_back(two_pi * k / steps);
  const auto rows = ab_geometric_phase(ab, thetas);

  ScenarioResult result;
  result.table.columns = {"Theta", "gamma_wrapped", "gamma_unwrapped",
                          "overlap_magnitude"};
  for (const auto& row : rows) {
    result.table.rows.push_back({row.big_theta, row.gamma_wrapped,
                                 row.gamma_unwrapped, row.overlap_magnitude});
  }
  return result;
}

ScenarioResult run_spin_experiment(const json& config, std::uint64_t seed) {
  const double theta0 = cfg_num(config, "theta0", pi / 3.0);
  const double omega_b = cfg_num(config, "omega_b", 1.0);
  const double t = cfg_num(config, "t", 50.0);
  const SpherePath path = cfg_sphere_path(config, "path");
  std::optional<std::int64_t> shots;
  if (config.contains("shots")) {
    shots = config.at("shots").get<std::int64_t>();
  }
  const PolarizationResult r =
      polarization_z(theta0, path, omega_b, t, shots, seed);

  json obj;
  obj["p_z_analytic"] = std::stod(format_number(r.p_z_analytic));
  obj["p_z_printed"] = std::stod(format_number(r.p_z_printed));
  obj["p_z_oracle"] = std::stod(format_number(r.p_z_oracle));
  obj["f"] = std::stod(format_number(r.f_value));
  obj["gamma"] = std::stod(format_number(r.gamma));
  obj["gamma_mod_pi_class"] = std::stod(format_number(r.gamma_mod_pi_class));
  if (r.p_z_measured) {
    obj["p_z_measured"] = std::stod(format_number(*r.p_z_measured));
  }
  ScenarioResult result;
  result.is_table = false;
  result.object_json = obj.dump(2) + "\n";
  // Table rendering (CSV) of the same values.
  result.table.columns = {"p_z_analytic", "p_z_printed", "p_z_oracle",
                          "f",            "gamma",       "gamma_mod_pi_class"};
  std::vector<double> row{r.p_z_analytic, r.p_z_printed, r.p_z_oracle,
                          r.f_value,      r.gamma,       r.gamma_mod_pi_class};
  if (r.p_z_measured) {
    result.table.columns.push_back("p_z_measured");
    row.push_back(*r.p_z_measured);
  }
  result.table.rows.push_back(std::move(row));
  return result;
}

ScenarioResult run_geodesic_closure(const json& config, std::uint64_t) {
  const SpherePath path = cfg_sphere_path(config, "path");
  const SolidAngleResult r = closure_phase(path);

  json obj;
  obj["omega_gc"] = std::stod(format_number(r.omega_gc));
  obj["omega_raw"] = std::stod(format_number(r.omega_raw));
  obj["phase_plus"] = std::stod(format_number(r.phase_plus));
  obj["phase_minus"] = std::stod(format_number(r.phase_minus));
  ScenarioResult result;
  result.is_table = false;
  result.object_json = obj.dump(2) + "\n";
  result.table.columns = {"omega_gc", "omega_raw", "phase_plus", "phase_minus"};
  result.table.rows.push_back(
      {r.omega_gc, r.omega_raw, r.phase_plus, r.phase_minus});
  return result;
}

ScenarioResult run_oracle_convergence(const json& config, std::uint64_t) {
  const double omega_b = cfg_num(config, "omega_b", 1.0);
  const double t_base = cfg_num(config, "t_base", 40.0);
  const int samples_per_edge = cfg_int(config, "samples_per_edge", 400);
  const double dt = cfg_num(config, "dt", 0.01);
  std::vector<double> factors{1.0, 3.0, 9.0};
  if (config.contains("factors")) {
    factors = config.at("factors").get<std::vector<double>>();
  }
  const HamiltonianModel model = spin_model(SpinConfig{omega_b});

  ScenarioResult result;
  result.table.columns = {"duration", "gamma_adiabatic", "gamma_oracle",
                          "circular_gap"};
  for (const double factor : factors) {
    const double duration = t_base * factor;
    const ParameterPath schedule = octant_schedule(samples_per_edge, duration);
    const PhaseDecomposition d = geometric_phase(model, schedule, 0);
    const double oracle = oracle_geometric_phase(model, schedule, 0, dt);
    result.table.rows.push_back(
        {duration, d.geometric_wrapped, oracle,
         circular_distance(d.geometric_wrapped, oracle)});
  }
  return result;
}

HamiltonianModel custom_model_from_json(const json& node) {
  const int dim = node.at("dimension").get<int>();
  if (dim < 2) throw schema_error("custom model: dimension must be >= 2");
  struct Entry {
    Eigen::VectorXd point;
    Eigen::MatrixXcd matrix;
  };
  auto entries = std::make_shared<std::vector<Entry>>();
  for (const auto& row : node.at("table")) {
    Entry e;
    const auto& p = row.at("point");
    e.point.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) e.point[i] = p[i].get<double>();
    const auto& m = row.at("matrix");
    if (static_cast<int>(m.size()) != dim) {
      throw schema_error("custom model: matrix row count != dimension");
    }
    e.matrix.resize(dim, dim);
    for (int i = 0; i < dim; ++i) {
      const auto& r = m[i];
      if (static_cast<int>(r.size()) != dim) {
        throw schema_error("custom model: matrix column count != dimension");
      }
      for (int j = 0; j < dim; ++j) {
        e.matrix(i, j) = std::complex<double>(r[j].at(0).get<double>(),
                                              r[j].at(1).get<double>());
      }
    }
    if ((e.matrix - e.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
      throw schema_error("custom model: table matrix is not Hermitian");
    }
    entries->push_back(std::move(e));
  }
  if (entries->empty()) throw schema_error("custom model: empty table");

  HamiltonianModel model;
  model.dimension = dim;
  model.evaluate = [entries](const Eigen::VectorXd& point) {
    for (const auto& e : *entries) {
      if (e.point.size() == point.size() &&
          (e.point - point).lpNorm<Eigen::Infinity>() < 1e-9) {
        return e.matrix;
      }
    }
    throw schema_error(
        "custom model: parameter point not present in the table grid");
  };
  return model;
}

ScenarioResult run_custom(const json& config, std::uint64_t) {
  if (!config.contains("model")) {
    throw schema_error("custom: config.model is required");
  }
  const HamiltonianModel model = custom_model_from_json(config.at("model"));
  const ParameterPath path = cfg_parameter_path(config, "path");
  const int level = cfg_int(config, "level", 0);
  const auto rows = geometric_phase_series(model, path, level);

  ScenarioResult result;
  result.table.columns = {"t",
                          "energy_phase",
                          "connection_phase",
                          "overlap_phase",
                          "geometric_wrapped",
                          "geometric_unwrapped",
                          "total_phase"};
  for (const auto& row : rows) {
    const auto& d = row.decomposition;
    result.table.rows.push_back({row.time, d.energy_phase, d.connection_phase,
                                 d.overlap_phase, d.geometric_wrapped,
                                 d.geometric_unwrapped, d.total_phase});
  }
  return result;
}

using Runner = std::function<ScenarioResult(const json&, std::uint64_t)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"conical-sign-change", run_conical_sign_change},
      {"ab-sweep", run_ab_sweep},
      {"spin-experiment", run_spin_experiment},
      {"geodesic-closure", run_geodesic_closure},
      {"oracle-convergence", run_oracle_convergence},
      {"custom", run_custom},
  };
  return table;
}

ScenarioResult run_sweep(const Runner& runner, json config,
                         const json& sweep_spec, std::uint64_t seed,
                         int jobs) {
  if (!sweep_spec.contains("axis") || !sweep_spec.contains("values")) {
    throw schema_error("sweep: axis and values are required");
  }
  const std::string axis = sweep_spec.at("axis").get<std::string>();
  const auto values = sweep_spec.at("values").get<std::vector<double>>();

  auto run_one = [&](double value) {
    json cfg = config;
    cfg[axis] = value;
    return runner(cfg, seed);
  };

  std::vector<ScenarioResult> parts(values.size());
  if (jobs > 1 && values.size() > 1) {
    std::vector<std::future<ScenarioResult>> futures;
    futures.reserve(values.size());
    for (const double v : values) {
      futures.push_back(std::async(std::launch::async, run_one, v));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) parts[i] = run_one(values[i]);
  }

  ScenarioResult result;
  result.table.columns.push_back(axis);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0) {
      result.table.columns.insert(result.table.columns.end(),
                                  parts[i].table.columns.begin(),
                                  parts[i].table.columns.end());
    }
    for (const auto& row : parts[i].table.rows) {
      std::vector<double> out_row{values[i]};
      out_row.insert(out_row.end(), row.begin(), row.end());
      result.table.rows.push_back(std::move(out_row));
    }
  }
  return result;
}

}  // namespace

std::string ScenarioResult::render(const std::string& format) const {
  if (format == "csv") return table_to_csv(table);
  if (format == "json") {
    return is_table ? table_to_json(table) : object_json;
  }
  throw schema_error("unknown output format: " + format);
}

ScenarioResult run_scenario(const json& scenario, std::uint64_t seed,
                            int jobs) {
  if (!scenario.is_object() || !scenario.contains("name")) {
    throw schema_error("scenario: name is required");
  }
  const std::string name = scenario.at("name").get<std::string>();
  const auto it = runners().find(name);
  if (it == runners().end()) {
    throw schema_error("scenario: unknown name '" + name + "'");
  }
  const json config = scenario.value("config", json::object());
  if (!config.is_object()) {
    throw schema_error("scenario: config must be an object");
  }
  if (scenario.contains("sweep")) {
    return run_sweep(it->second, config, scenario.at("sweep"), seed, jobs);
  }
  return it->second(config, seed);
}

int run_scenario_file(const std::string& scenario_file,
                      const std::string& out_file, const std::string& format,
                      std::uint64_t seed, int jobs) {
  try {
    std::ifstream in(scenario_file);
    if (!in) throw schema_error("cannot open scenario file: " + scenario_file);
    json scenario;
    try {
      in >> scenario;
    } catch (const std::exception& e) {
      throw schema_error(std::string("scenario file: ") + e.what());
    }
    const ScenarioResult result = run_scenario(scenario, seed, jobs);
    const std::string rendered = result.render(format);
    if (out_file.empty() || out_file == "-") {
      std::fwrite(rendered.data(), 1, rendered.size(), stdout);
    } else {
      write_file(out_file, rendered);
    }
    return exit_code::ok;
  } catch (...) {
    return exit_code_for_current_exception();
  }
}

int exit_code_for_current_exception() {
  try {
    throw;
  } catch (const undefined_phase_error& e) {
    std::fprintf(stderr, "undefined-phase error: %s\n", e.what());
    return exit_code::undefined_phase;
  } catch (const degeneracy_error& e) {
    std::fprintf(stderr, "degeneracy error: %s\n", e.what());
    return exit_code::degeneracy;
  } catch (const antipodal_error& e) {
    std::fprintf(stderr, "antipodal error: %s\n", e.what());
    return exit_code::antipodal;
  } catch (const resolution_error& e) {
    std::fprintf(stderr, "resolution error: %s\n", e.what());
    return exit_code::resolution;
  } catch (const schema_error& e) {
    std::fprintf(stderr, "schema error: %s\n", e.what());
    return exit_code::schema;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code::schema;
  }
}

}  // namespace gphase

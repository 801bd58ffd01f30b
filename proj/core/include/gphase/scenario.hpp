#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "gphase/io.hpp"

namespace gphase {

/// Result of one scenario run: either a numeric table or a JSON object.
struct ScenarioResult {
  bool is_table = true;
  Table table;
  std::string object_json;  // rendered object when !is_table

  /// Render in the requested format ("csv" or "json").
  std::string render(const std::string& format) const;
};

/// Execute a scenario document:
///   {"name": <registered name>, "config": {...},
///    "sweep": {"axis": <config key>, "values": [...]}?}
/// Registered names: conical-sign-change, ab-sweep, spin-experiment,
/// geodesic-closure, oracle-convergence, custom.
/// Throws schema_error for unknown names/axes and malformed config;
/// domain errors propagate from the modules.
ScenarioResult run_scenario(const nlohmann::json& scenario,
                            std::uint64_t seed = 0, int jobs = 1);

/// Load the scenario file, run it, write the artifact. Returns the
/// process exit code (0 on success; error classes map to distinct codes).
int run_scenario_file(const std::string& scenario_file,
                      const std::string& out_file, const std::string& format,
                      std::uint64_t seed = 0, int jobs = 1);

/// Map a caught exception to the documented exit code.
int exit_code_for_current_exception();

}  // namespace gphase

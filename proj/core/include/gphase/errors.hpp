#pragma once

#include <stdexcept>
#include <string>

namespace gphase {

// Domain error classes. The CLI maps each to a distinct exit code,
// so keep the hierarchy flat and the classes final.

/// Endpoint (or consecutive) state vectors are orthogonal within
/// tolerance; the phase arg<a|b> is not defined there.
class undefined_phase_error final : public std::runtime_error {
public:
  explicit undefined_phase_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Spectral gap below threshold; the nondegeneracy assumption fails.
class degeneracy_error final : public std::runtime_error {
public:
  explicit degeneracy_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Antipodal Bloch-sphere endpoints: infinitely many closing geodesics.
class antipodal_error final : public std::runtime_error {
public:
  explicit antipodal_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Path or mesh sampled too coarsely for the requested computation.
class resolution_error final : public std::runtime_error {
public:
  explicit resolution_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Malformed input file or configuration block.
class schema_error final : public std::runtime_error {
public:
  explicit schema_error(const std::string& what)
      : std::runtime_error(what) {}
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int schema = 2;
inline constexpr int undefined_phase = 3;
inline constexpr int degeneracy = 4;
inline constexpr int antipodal = 5;
inline constexpr int resolution = 6;
}  // namespace exit_code

}  // namespace gphase

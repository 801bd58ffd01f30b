#pragma once

#include <Eigen/Dense>

#include "gphase/path.hpp"

namespace gphase {

/// Geodesic closure of an open Bloch-sphere path.
struct SolidAngleResult {
  double omega_gc = 0.0;   ///< enclosed solid angle, wrapped to (-2*pi, 2*pi]
  double omega_raw = 0.0;  ///< accumulated value, keeps multi-loop winding
  SpherePath geodesic;     ///< the closing arc C_{g-c}
  double phase_plus = 0.0;   ///< -omega_gc/2 wrapped to (-pi, pi]
  double phase_minus = 0.0;  ///< +omega_gc/2 wrapped to (-pi, pi]
};

/// Uniformly sampled shortest great-circle arc from p1 back to p0 (the
/// closure direction). Throws antipodal_error when p0.p1 <= -1 + eps.
SpherePath geodesic_arc(const Eigen::Vector3d& p0, const Eigen::Vector3d& p1,
                        int samples, double antipodal_eps = 1e-9);

/// Signed solid angle of a closed sphere path via the line integral of
/// (1 - cos Theta) dPhi with branch tracking; right-hand orientation.
/// Requires consecutive samples closer than pi/2.
double solid_angle(const SpherePath& path);

/// Triangulated spherical-excess evaluation (fan from the first sample);
/// internal cross-check for solid_angle.
double solid_angle_triangulated(const SpherePath& path);

/// Close the open path with its shortest geodesic and report the
/// enclosed solid angle and the two-level phases -+omega/2.
SolidAngleResult closure_phase(const SpherePath& open_path,
                               int geodesic_samples = 0);

}  // namespace gphase

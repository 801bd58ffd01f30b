#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace gphase {

/// A time-stamped sampled curve in parameter space. Times are strictly
/// increasing; `closed` means final point == initial point within 1e-10.
struct ParameterPath {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> points;
  bool closed = false;

  std::size_t size() const { return times.size(); }
  double duration() const { return times.back() - times.front(); }

  /// Throws std::invalid_argument on structural violations.
  void validate() const;
};

/// Uniform-time path through the given points over [0, duration].
ParameterPath uniform_path(std::vector<Eigen::VectorXd> points,
                           double duration, bool closed = false);

/// One-parameter path [phi] sweeping phi_start -> phi_end.
ParameterPath phi_sweep(double phi_start, double phi_end, int samples,
                        double duration);

/// A sampled curve of unit vectors on the Bloch sphere.
struct SpherePath {
  std::vector<Eigen::Vector3d> samples;
  bool closed = false;

  void validate() const;  // unit norm within 1e-12
};

Eigen::Vector3d sphere_point(double theta, double phi);

/// Build a SpherePath from (Theta, Phi) pairs.
SpherePath sphere_path_from_angles(
    const std::vector<std::pair<double, double>>& angles, bool closed = false);

/// Recover continuous (Theta, Phi) coordinates along a sphere path.
/// Phi is unwrapped segment-by-segment; at the poles (sin Theta below
/// tol) Phi carries over from the nearest resolved sample, so meridian
/// passes through a pole stay continuous.
std::vector<std::pair<double, double>> sphere_angles(const SpherePath& path,
                                                     double pole_tol = 1e-9);

/// Constant-Theta loop Phi: 0 -> 2*pi (closed).
SpherePath constant_theta_loop(double theta, int samples);

/// Equatorial arc Phi: 0 -> delta_phi.
SpherePath equatorial_arc(double delta_phi, int samples);

/// The octant contour: north pole down the Phi = 0 meridian to the
/// equator, along the equator to Phi = pi/2, and back up to the pole.
/// samples_per_edge points on each of the three great-circle edges.
SpherePath octant_path(int samples_per_edge);

/// Spin-model (Theta, Phi) ParameterPath over [0, duration] visiting the
/// sphere path's samples at constant angular speed.
ParameterPath schedule_on_sphere(const SpherePath& path, double duration);

/// Octant drive with a cosine ease on each great-circle edge, so the
/// parameter velocity vanishes at the corners. Better behaved for the
/// exact propagator than the constant-speed traversal.
ParameterPath octant_schedule(int samples_per_edge, double duration);

}  // namespace gphase

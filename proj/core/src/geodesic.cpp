#include "gphase/geodesic.hpp"

#include <cmath>
#include <stdexcept>

#include "gphase/angles.hpp"
#include "gphase/errors.hpp"

namespace gphase {

SpherePath geodesic_arc(const Eigen::Vector3d& p0, const Eigen::Vector3d& p1,
                        int samples, double antipodal_eps) {
  if (samples < 2) {
    throw std::invalid_argument("geodesic_arc: need at least 2 samples");
  }
  const double dot = std::clamp(p0.dot(p1), -1.0, 1.0);
  if (dot <= -1.0 + antipodal_eps) {
    throw antipodal_error(
        "geodesic_arc: antipodal endpoints, geodesic closure undefined");
  }
  SpherePath arc;
  arc.samples.reserve(samples);
  const double omega = std::acos(dot);
  if (omega < 1e-14) {
    // Coincident endpoints: a single-point arc of zero length.
    arc.samples = {p1, p0};
    return arc;
  }
  const double sin_omega = std::sin(omega);
  for (int k = 0; k < samples; ++k) {
    const double s = static_cast<double>(k) / (samples - 1);
    // Slerp from p1 back to p0.
    const Eigen::Vector3d p =
        (std::sin((1.0 - s) * omega) * p1 + std::sin(s * omega) * p0) /
        sin_omega;
    arc.samples.push_back(p.normalized());
  }
  return arc;
}

double solid_angle(const SpherePath& path) {
  path.validate();
  const bool endpoints_meet =
      (path.samples.front() - path.samples.back()).norm() < 1e-9;
  if (!path.closed && !endpoints_meet) {
    throw std::invalid_argument("solid_angle: path is not closed");
  }
  // Work on an explicitly closed ring.
  std::vector<Eigen::Vector3d> ring = path.samples;
  if (!endpoints_meet) ring.push_back(ring.front());

  for (std::size_t k = 1; k < ring.size(); ++k) {
    const double dot = std::clamp(ring[k - 1].dot(ring[k]), -1.0, 1.0);
    if (std::acos(dot) >= pi / 2.0) {
      throw resolution_error(
          "solid_angle: consecutive samples separated by >= pi/2");
    }
  }

  SpherePath ring_path{ring, true};
  const auto angles = sphere_angles(ring_path);
  double omega = 0.0;
  for (std::size_t k = 1; k < angles.size(); ++k) {
    const auto& [theta0, phi0] = angles[k - 1];
    const auto& [theta1, phi1] = angles[k];
    const double factor =
        0.5 * ((1.0 - std::cos(theta0)) + (1.0 - std::cos(theta1)));
    omega += factor * (phi1 - phi0);  // phi already unwrapped
  }
  return omega;
}

double solid_angle_triangulated(const SpherePath& path) {
  path.validate();
  std::vector<Eigen::Vector3d> ring = path.samples;
  if ((ring.front() - ring.back()).norm() < 1e-9) ring.pop_back();
  if (ring.size() < 3) return 0.0;
  const Eigen::Vector3d apex = ring.front();
  double omega = 0.0;
  for (std::size_t k = 1; k + 1 < ring.size(); ++k) {
    const Eigen::Vector3d& b = ring[k];
    const Eigen::Vector3d& c = ring[k + 1];
    // Van Oosterom-Strackee signed spherical triangle solid angle.
    const double numerator = apex.dot(b.cross(c));
    const double denominator =
        1.0 + apex.dot(b) + b.dot(c) + c.dot(apex);
    omega += 2.0 * std::atan2(numerator, denominator);
  }
  return omega;
}

SolidAngleResult closure_phase(const SpherePath& open_path,
                               int geodesic_samples) {
  open_path.validate();
  if (geodesic_samples < 2) {
    geodesic_samples =
        std::max<int>(16, static_cast<int>(open_path.samples.size()) / 4);
  }
  SolidAngleResult result;
  result.geodesic = geodesic_arc(open_path.samples.front(),
                                 open_path.samples.back(), geodesic_samples);

  SpherePath combined;
  combined.samples = open_path.samples;
  // The arc runs endpoint -> start; drop its first sample (duplicate of
  // the path end).
  combined.samples.insert(combined.samples.end(),
                          result.geodesic.samples.begin() + 1,
                          result.geodesic.samples.end());
  combined.closed = true;
  result.omega_raw = solid_angle(combined);
  result.omega_gc = wrap_two_pi(result.omega_raw);
  result.phase_plus = wrap_pi(-0.5 * result.omega_gc);
  result.phase_minus = wrap_pi(0.5 * result.omega_gc);
  return result;
}

}  // namespace gphase

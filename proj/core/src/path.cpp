#include "gphase/path.hpp"

#include <cmath>
#include <stdexcept>

#include "gphase/angles.hpp"

namespace gphase {

void ParameterPath::validate() const {
  if (times.size() != points.size()) {
    throw std::invalid_argument("ParameterPath: times/points size mismatch");
  }
  if (times.size() < 2) {
    throw std::invalid_argument("ParameterPath: need at least 2 samples");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      throw std::invalid_argument("ParameterPath: times must strictly increase");
    }
    if (points[k].size() != points[0].size()) {
      throw std::invalid_argument("ParameterPath: inconsistent point dimension");
    }
  }
  if (closed && (points.back() - points.front()).lpNorm<Eigen::Infinity>() > 1e-10) {
    throw std::invalid_argument(
        "ParameterPath: closed flag set but endpoints differ");
  }
}

ParameterPath uniform_path(std::vector<Eigen::VectorXd> points, double duration,
                           bool closed) {
  if (points.size() < 2) {
    throw std::invalid_argument("uniform_path: need at least 2 points");
  }
  ParameterPath path;
  const std::size_t n = points.size();
  path.times.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    path.times.push_back(duration * static_cast<double>(k) /
                         static_cast<double>(n - 1));
  }
  path.points = std::move(points);
  path.closed = closed;
  path.validate();
  return path;
}

ParameterPath phi_sweep(double phi_start, double phi_end, int samples,
                        double duration) {
  if (samples < 2) {
    throw std::invalid_argument("phi_sweep: need at least 2 samples");
  }
  std::vector<Eigen::VectorXd> points;
  points.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double s = static_cast<double>(k) / (samples - 1);
    Eigen::VectorXd p(1);
    p << phi_start + s * (phi_end - phi_start);
    points.push_back(std::move(p));
  }
  // Open as a parameter-space curve even when phi_end - phi_start is a
  // multiple of 2*pi; the closed flag tracks coordinates, not physics.
  return uniform_path(std::move(points), duration, /*closed=*/false);
}

void SpherePath::validate() const {
  if (samples.size() < 2) {
    throw std::invalid_argument("SpherePath: need at least 2 samples");
  }
  for (const auto& s : samples) {
    if (std::abs(s.norm() - 1.0) > 1e-12) {
      throw std::invalid_argument("SpherePath: samples must be unit vectors");
    }
  }
}

Eigen::Vector3d sphere_point(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

SpherePath sphere_path_from_angles(
    const std::vector<std::pair<double, double>>& angles, bool closed) {
  SpherePath path;
  path.samples.reserve(angles.size());
  for (const auto& [theta, phi] : angles) {
    path.samples.push_back(sphere_point(theta, phi));
  }
  path.closed = closed;
  return path;
}

std::vector<std::pair<double, double>> sphere_angles(const SpherePath& path,
                                                     double pole_tol) {
  const std::size_t n = path.samples.size();
  std::vector<std::pair<double, double>> out(n);
  double prev_phi = 0.0;
  bool phi_seen = false;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& v = path.samples[k];
    const double theta = std::acos(std::clamp(v.z(), -1.0, 1.0));
    double phi;
    if (std::hypot(v.x(), v.y()) < pole_tol) {
      phi = prev_phi;  // Phi ill-defined at a pole; carry the last value
    } else {
      phi = std::atan2(v.y(), v.x());
      if (phi_seen) {
        phi = prev_phi + wrap_pi(phi - prev_phi);
      } else {
        if (phi < 0.0) phi += two_pi;  // first resolved sample in [0, 2*pi)
        // Backfill pole samples at the head of the path.
        for (std::size_t j = 0; j < k; ++j) out[j].second = phi;
      }
      phi_seen = true;
    }
    out[k] = {theta, phi};
    prev_phi = phi;
  }
  return out;
}

SpherePath constant_theta_loop(double theta, int samples) {
  std::vector<std::pair<double, double>> angles;
  angles.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    angles.emplace_back(theta, two_pi * k / (samples - 1));
  }
  return sphere_path_from_angles(angles, /*closed=*/true);
}

SpherePath equatorial_arc(double delta_phi, int samples) {
  std::vector<std::pair<double, double>> angles;
  angles.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    angles.emplace_back(pi / 2.0, delta_phi * k / (samples - 1));
  }
  return sphere_path_from_angles(angles, /*closed=*/false);
}

namespace {

std::vector<std::pair<double, double>> octant_angles(int samples_per_edge) {
  const int m = samples_per_edge;
  std::vector<std::pair<double, double>> angles;
  angles.reserve(3 * m + 1);
  // Pole -> equator along Phi = 0.
  for (int k = 0; k <= m; ++k) {
    angles.emplace_back(pi / 2.0 * k / m, 0.0);
  }
  // Equator Phi: 0 -> pi/2.
  for (int k = 1; k <= m; ++k) {
    angles.emplace_back(pi / 2.0, pi / 2.0 * k / m);
  }
  // Equator -> pole along Phi = pi/2.
  for (int k = 1; k <= m; ++k) {
    angles.emplace_back(pi / 2.0 * (m - k) / m, pi / 2.0);
  }
  return angles;
}

}  // namespace

SpherePath octant_path(int samples_per_edge) {
  if (samples_per_edge < 2) {
    throw std::invalid_argument("octant_path: need at least 2 samples per edge");
  }
  return sphere_path_from_angles(octant_angles(samples_per_edge),
                                 /*closed=*/true);
}

ParameterPath schedule_on_sphere(const SpherePath& path, double duration) {
  path.validate();
  const auto angles = sphere_angles(path);
  const std::size_t n = angles.size();
  // Accumulated arc length for constant angular speed.
  std::vector<double> arc(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double dot =
        std::clamp(path.samples[k - 1].dot(path.samples[k]), -1.0, 1.0);
    arc[k] = arc[k - 1] + std::acos(dot);
  }
  const double total = arc.back();
  ParameterPath out;
  out.times.reserve(n);
  out.points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = total > 0.0 ? duration * arc[k] / total
                           : duration * static_cast<double>(k) / (n - 1);
    // Guard against coincident samples producing equal times.
    if (k > 0 && t <= out.times.back()) {
      t = out.times.back() + duration * 1e-12;
    }
    out.times.push_back(t);
    Eigen::VectorXd p(2);
    p << angles[k].first, angles[k].second;
    out.points.push_back(std::move(p));
  }
  out.closed =
      (out.points.back() - out.points.front()).lpNorm<Eigen::Infinity>() <= 1e-10;
  return out;
}

ParameterPath octant_schedule(int samples_per_edge, double duration) {
  if (samples_per_edge < 2) {
    throw std::invalid_argument("octant_schedule: need at least 2 samples per edge");
  }
  const int m = samples_per_edge;
  const auto angles = octant_angles(m);
  const double edge_t = duration / 3.0;
  ParameterPath out;
  out.points.reserve(angles.size());
  out.times.reserve(angles.size());
  // Sample index k within an edge sits at the eased time fraction s with
  // k/m = (1 - cos(pi*s))/2, i.e. s = acos(1 - 2k/m)/pi.
  auto eased = [m](int k) {
    return std::acos(std::clamp(1.0 - 2.0 * k / m, -1.0, 1.0)) / pi;
  };
  for (std::size_t idx = 0; idx < angles.size(); ++idx) {
    const int edge = idx == 0 ? 0 : static_cast<int>((idx - 1) / m);
    const int k = static_cast<int>(idx) - edge * m;
    double t = edge * edge_t + edge_t * eased(k);
    if (!out.times.empty() && t <= out.times.back()) {
      t = out.times.back() + duration * 1e-12;
    }
    out.times.push_back(t);
    Eigen::VectorXd p(2);
    p << angles[idx].first, angles[idx].second;
    out.points.push_back(std::move(p));
  }
  // The contour closes on the sphere but not in (Theta, Phi) coordinates:
  // it returns to the pole with Phi = pi/2 instead of 0.
  out.closed = false;
  out.validate();
  return out;
}

}  // namespace gphase

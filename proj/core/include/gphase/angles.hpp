#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace gphase {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Wrap an angle to the principal branch (-pi, pi].
inline double wrap_pi(double a) {
  double w = std::remainder(a, two_pi);  // in [-pi, pi]
  if (w <= -pi) w = pi;
  return w;
}

/// Circular distance |wrap(a - b)|, the only phase comparison metric.
inline double circular_distance(double a, double b) {
  return std::abs(wrap_pi(a - b));
}

/// Wrap to (-2*pi, 2*pi], used for solid angles (mod 4*pi quantity).
inline double wrap_two_pi(double a) {
  double w = std::remainder(a, 2.0 * two_pi);  // in [-2pi, 2pi]
  if (w <= -two_pi) w = two_pi;
  return w;
}

/// Lift a sequence of wrapped angles to a continuous one: each output
/// differs from its predecessor by the wrapped increment.
inline std::vector<double> unwrap_sequence(const std::vector<double>& wrapped) {
  std::vector<double> out;
  out.reserve(wrapped.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < wrapped.size(); ++i) {
    if (i == 0) {
      acc = wrapped[0];
    } else {
      acc += wrap_pi(wrapped[i] - wrapped[i - 1]);
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace gphase

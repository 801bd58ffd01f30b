#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "gphase/path.hpp"

namespace gphase {

/// Outcome of the spin-1/2 polarization run.
struct PolarizationResult {
  double p_z_analytic = 0.0;  ///< closed-form P_z, sign fixed by P_z(0) = 1
  double p_z_printed = 0.0;   ///< same with the published cross-term sign
  double p_z_oracle = 0.0;    ///< <Psi|sigma_z|Psi> from exact propagation
  double f_value = 0.0;       ///< endpoint overlap angle f(e(0), e(t))
  double gamma = 0.0;         ///< path functional gamma[C], gamma_pm = +-gamma
  double gamma_mod_pi_class = 0.0;  ///< gamma modulo pi, in [0, pi)
  std::optional<double> p_z_measured;  ///< from sampled sub-beam counts
};

/// The endpoint overlap angle f(e0, e1): principal argument of
///   exp(-i dPhi/2) cos(T1/2) cos(T0/2) + exp(+i dPhi/2) sin(T1/2) sin(T0/2)
/// with spherical angles taken from the vectors, Phi in [0, 2*pi).
double f_overlap(const Eigen::Vector3d& e0, const Eigen::Vector3d& e1);

/// Same from explicit spherical angles; this is the form used along a
/// path, where continuity of Phi matters (the bracket is 4*pi periodic).
double f_overlap_angles(double theta0, double phi0, double theta1,
                        double phi1);

/// gamma[C] = f + (1/2) integral of Phi_dot cos Theta dt over the sphere
/// path, with gamma_pm = +-gamma[C]. Phi is unwrapped along the path.
double spin_geometric_phase(const SpherePath& path);

/// Analytic P_z(t) plus the exact propagation value. The path must start
/// at (theta0, Phi = 0) and is traversed at constant angular speed over
/// [0, t]; initial state |+;e_z>. shots, when set, adds a sampled
/// measurement with that many counts per sub-beam.
PolarizationResult polarization_z(double theta0, const SpherePath& path,
                                  double omega_b, double t,
                                  std::optional<std::int64_t> shots = {},
                                  std::uint64_t seed = 0);

/// P_z^exp = (1 - r)/(1 + r) with r = i_minus/i_plus.
double measured_polarization(double i_plus, double i_minus);

/// The two candidate gamma-mod-pi classes implied by an observed P_z
/// (the cosine leaves a sign ambiguity); each in [0, pi).
std::pair<double, double> gamma_classes_from_pz(double p_z, double theta0,
                                                double theta_t, double f,
                                                double omega_b, double t);

}  // namespace gphase

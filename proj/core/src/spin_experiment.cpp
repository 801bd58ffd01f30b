#include "gphase/spin_experiment.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "gphase/angles.hpp"
#include "gphase/errors.hpp"
#include "gphase/hamiltonian.hpp"
#include "gphase/oracle.hpp"

namespace gphase {

using std::complex;
using namespace std::complex_literals;

double f_overlap_angles(double theta0, double phi0, double theta1,
                        double phi1) {
  const double dphi = phi1 - phi0;
  const complex<double> bracket =
      std::exp(-0.5i * dphi) * std::cos(theta1 / 2.0) * std::cos(theta0 / 2.0) +
      std::exp(0.5i * dphi) * std::sin(theta1 / 2.0) * std::sin(theta0 / 2.0);
  if (std::abs(bracket) < default_orthogonality_threshold) {
    throw undefined_phase_error(
        "f_overlap: endpoints are antipodal, overlap phase undefined");
  }
  return std::arg(bracket);
}

namespace {

std::pair<double, double> principal_angles(const Eigen::Vector3d& e) {
  const double theta = std::acos(std::clamp(e.z(), -1.0, 1.0));
  double phi = std::atan2(e.y(), e.x());
  if (phi < 0.0) phi += two_pi;
  if (std::hypot(e.x(), e.y()) < 1e-12) phi = 0.0;
  return {theta, phi};
}

}  // namespace

double f_overlap(const Eigen::Vector3d& e0, const Eigen::Vector3d& e1) {
  const auto [t0, p0] = principal_angles(e0);
  const auto [t1, p1] = principal_angles(e1);
  return f_overlap_angles(t0, p0, t1, p1);
}

double spin_geometric_phase(const SpherePath& path) {
  path.validate();
  const auto angles = sphere_angles(path);
  // (1/2) integral of Phi_dot cos Theta dt, trapezoid on the samples.
  double connection = 0.0;
  for (std::size_t k = 1; k < angles.size(); ++k) {
    const double mid_cos =
        0.5 * (std::cos(angles[k - 1].first) + std::cos(angles[k].first));
    connection += 0.5 * mid_cos * (angles[k].second - angles[k - 1].second);
  }
  const double f = f_overlap_angles(angles.front().first, angles.front().second,
                                    angles.back().first, angles.back().second);
  return f + connection;
}

PolarizationResult polarization_z(double theta0, const SpherePath& path,
                                  double omega_b, double t,
                                  std::optional<std::int64_t> shots,
                                  std::uint64_t seed) {
  path.validate();
  if (!(t > 0.0)) {
    throw std::invalid_argument("polarization_z: t must be positive");
  }
  const auto angles = sphere_angles(path);
  if (std::abs(angles.front().first - theta0) > 1e-9 ||
      std::abs(wrap_pi(angles.front().second)) > 1e-9) {
    throw std::invalid_argument(
        "polarization_z: path must start at (theta0, Phi = 0)");
  }
  const double theta_t = angles.back().first;

  PolarizationResult result;
  result.gamma = spin_geometric_phase(path);
  result.f_value = f_overlap_angles(theta0, angles.front().second, theta_t,
                                    angles.back().second);
  result.gamma_mod_pi_class =
      result.gamma - pi * std::floor(result.gamma / pi);

  const double chi =
      2.0 * omega_b * t + 2.0 * result.gamma - 2.0 * result.f_value;
  const double base = std::cos(theta0) * std::cos(theta_t);
  const double cross = std::sin(theta0) * std::sin(theta_t) * std::cos(chi);
  // Cross-term sign fixed by the t = 0 consistency condition P_z(0) = 1;
  // the published form (minus) is kept alongside for transparency.
  result.p_z_analytic = base + cross;
  result.p_z_printed = base - cross;

  // Exact route: expand |+;e_z> over the instantaneous frames implicitly
  // by just propagating it under the driven Hamiltonian.
  const HamiltonianModel model = spin_model(SpinConfig{omega_b});
  const ParameterPath schedule = schedule_on_sphere(path, t);
  Eigen::VectorXcd initial(2);
  initial << 1.0, 0.0;
  double dt = std::min(0.05 / std::max(omega_b, 1e-6), t / 100.0);
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    const double spacing = schedule.times[k] - schedule.times[k - 1];
    if (spacing > 1e-9 * t) dt = std::min(dt, spacing);
  }
  const StateTrajectory traj = propagate(model, schedule, initial, dt);
  const Eigen::VectorXcd& psi = traj.states.back();
  result.p_z_oracle =
      std::norm(psi[0]) - std::norm(psi[1]);

  if (shots) {
    if (*shots < 1) {
      throw std::invalid_argument("polarization_z: shots must be positive");
    }
    std::mt19937_64 rng(seed);
    const double p_up = 0.5 * (1.0 + std::clamp(result.p_z_oracle, -1.0, 1.0));
    std::binomial_distribution<std::int64_t> dist(*shots, p_up);
    const std::int64_t up = dist(rng);
    const std::int64_t down = *shots - up;
    result.p_z_measured =
        measured_polarization(static_cast<double>(up), static_cast<double>(down));
  }
  return result;
}

double measured_polarization(double i_plus, double i_minus) {
  if (i_plus < 0.0 || i_minus < 0.0) {
    throw std::domain_error("measured_polarization: intensities must be >= 0");
  }
  if (i_plus == 0.0) {
    throw std::domain_error(
        "measured_polarization: i_plus is zero (fully down-polarized beam; "
        "swap the sub-beam roles)");
  }
  const double r = i_minus / i_plus;
  return (1.0 - r) / (1.0 + r);
}

std::pair<double, double> gamma_classes_from_pz(double p_z, double theta0,
                                                double theta_t, double f,
                                                double omega_b, double t) {
  const double s = std::sin(theta0) * std::sin(theta_t);
  if (std::abs(s) < 1e-12) {
    throw std::domain_error(
        "gamma_classes_from_pz: cross term vanishes, gamma unobservable");
  }
  const double cos_chi =
      std::clamp((p_z - std::cos(theta0) * std::cos(theta_t)) / s, -1.0, 1.0);
  const double chi0 = std::acos(cos_chi);
  auto to_class = [&](double chi) {
    const double gamma = 0.5 * (chi - 2.0 * omega_b * t + 2.0 * f);
    return gamma - pi * std::floor(gamma / pi);
  };
  return {to_class(chi0), to_class(-chi0)};
}

}  // namespace gphase

#include "gphase/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gphase/angles.hpp"
#include "gphase/errors.hpp"
#include "gphase/phase_engine.hpp"

namespace gphase {

using std::complex;
using namespace std::complex_literals;

namespace {

class ScheduleInterpolator {
 public:
  explicit ScheduleInterpolator(const ParameterPath& schedule)
      : schedule_(schedule) {}

  Eigen::VectorXd point_at(double t) const {
    const auto& times = schedule_.times;
    if (t <= times.front()) return schedule_.points.front();
    if (t >= times.back()) return schedule_.points.back();
    // Monotone scan with a cached cursor; propagation visits times in order.
    while (cursor_ + 1 < times.size() && times[cursor_ + 1] < t) ++cursor_;
    while (cursor_ > 0 && times[cursor_] > t) --cursor_;
    const double t0 = times[cursor_];
    const double t1 = times[cursor_ + 1];
    const double s = (t - t0) / (t1 - t0);
    return (1.0 - s) * schedule_.points[cursor_] +
           s * schedule_.points[cursor_ + 1];
  }

 private:
  const ParameterPath& schedule_;
  mutable std::size_t cursor_ = 0;
};

}  // namespace

StateTrajectory propagate(const HamiltonianModel& model,
                          const ParameterPath& schedule,
                          const Eigen::VectorXcd& initial, double dt) {
  schedule.validate();
  if (!(dt > 0.0)) {
    throw std::invalid_argument("propagate: dt must be positive");
  }
  double max_h_norm = 0.0;
  double min_spacing = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    max_h_norm =
        std::max(max_h_norm, model.evaluate(schedule.points[k]).norm());
    if (k > 0) {
      min_spacing = std::min(min_spacing, schedule.times[k] - schedule.times[k - 1]);
    }
  }
  if (dt * max_h_norm >= 0.1) {
    throw std::invalid_argument(
        "propagate: dt too large for the Hamiltonian scale (dt*||H|| >= 0.1)");
  }
  // dt must also resolve the schedule. Degenerate near-coincident samples
  // (corner guards) are exempt.
  if (dt > min_spacing && min_spacing > 1e-9 * schedule.duration()) {
    throw std::invalid_argument(
        "propagate: dt exceeds the schedule sample spacing");
  }

  const ScheduleInterpolator interp(schedule);
  auto rhs = [&](double t, const Eigen::VectorXcd& psi) -> Eigen::VectorXcd {
    return -1i * (model.evaluate(interp.point_at(t)) * psi);
  };

  StateTrajectory traj;
  const double t0 = schedule.times.front();
  const double t_end = schedule.times.back();
  const auto n_steps =
      static_cast<std::size_t>(std::ceil((t_end - t0) / dt - 1e-12));
  traj.times.reserve(n_steps + 1);
  traj.states.reserve(n_steps + 1);

  Eigen::VectorXcd psi = initial.normalized();
  traj.times.push_back(t0);
  traj.states.push_back(psi);
  for (std::size_t s = 0; s < n_steps; ++s) {
    const double t = t0 + dt * static_cast<double>(s);
    const double h = std::min(dt, t_end - t);
    const Eigen::VectorXcd k1 = rhs(t, psi);
    const Eigen::VectorXcd k2 = rhs(t + 0.5 * h, psi + 0.5 * h * k1);
    const Eigen::VectorXcd k3 = rhs(t + 0.5 * h, psi + 0.5 * h * k2);
    const Eigen::VectorXcd k4 = rhs(t + h, psi + h * k3);
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    traj.max_norm_drift =
        std::max(traj.max_norm_drift, std::abs(psi.norm() - 1.0));
    psi.normalize();
    traj.times.push_back(std::min(t + h, t_end));
    traj.states.push_back(psi);
  }
  return traj;
}

double pancharatnam_phase(const Eigen::VectorXcd& state0,
                          const Eigen::VectorXcd& state1,
                          double orthogonality_threshold) {
  const complex<double> overlap = state0.dot(state1);
  if (std::abs(overlap) < orthogonality_threshold) {
    throw undefined_phase_error(
        "pancharatnam_phase: states are (near-)orthogonal");
  }
  return std::arg(overlap);
}

double oracle_geometric_phase(const HamiltonianModel& model,
                              const ParameterPath& schedule, int level,
                              double dt) {
  Eigen::VectorXcd initial;
  if (model.has_analytic_frames()) {
    initial = model.analytic_frame(schedule.points.front(), level).vector;
  } else {
    initial = eigensolve(model.evaluate(schedule.points.front()), level).vector;
  }
  const StateTrajectory traj = propagate(model, schedule, initial, dt);

  const ScheduleInterpolator interp(schedule);
  // Accumulated expectation-value dynamical phase, trapezoid over steps.
  double dyn = 0.0;
  double prev_expect = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Eigen::MatrixXcd h = model.evaluate(interp.point_at(traj.times[k]));
    const double expect = std::real(traj.states[k].dot(h * traj.states[k]));
    if (k > 0) {
      dyn += 0.5 * (prev_expect + expect) * (traj.times[k] - traj.times[k - 1]);
    }
    prev_expect = expect;
  }
  // Dressed endpoint |phi;T> = |Psi;T> exp(+i * integral of <H>).
  const Eigen::VectorXcd dressed =
      traj.states.back() * std::exp(1i * dyn);
  return pancharatnam_phase(traj.states.front(), dressed);
}

std::vector<EigenFrame> parallel_transport_frames(
    std::vector<EigenFrame> frames, double orthogonality_threshold) {
  // Positive-real consecutive overlaps make every discrete connection
  // segment vanish, which is exactly the transport condition.
  return phase_smooth(std::move(frames), orthogonality_threshold);
}

}  // namespace gphase

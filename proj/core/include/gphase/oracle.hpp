#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gphase/hamiltonian.hpp"
#include "gphase/path.hpp"

namespace gphase {

/// Exact Schroedinger trajectory |Psi;t> under the driven Hamiltonian.
struct StateTrajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;  // unit norm (renormalized per step)
  double max_norm_drift = 0.0;  // worst per-step |norm - 1| before renorm
};

/// Classical 4th-order one-step integration of i|Psi'> = H(t)|Psi>,
/// hbar = 1, with per-step renormalization. H(t) interpolates the
/// schedule's parameter points linearly in t. Requires
/// dt * max||H|| < 0.1 and dt <= the schedule's sample spacing.
StateTrajectory propagate(const HamiltonianModel& model,
                          const ParameterPath& schedule,
                          const Eigen::VectorXcd& initial, double dt);

/// arg<state0|state1>, the Pancharatnam phase between nonorthogonal rays.
double pancharatnam_phase(const Eigen::VectorXcd& state0,
                          const Eigen::VectorXcd& state1,
                          double orthogonality_threshold =
                              default_orthogonality_threshold);

/// Exact (nonadiabatic) geometric phase: propagate from the instantaneous
/// eigenvector at the schedule start, strip the expectation-value
/// dynamical phase, and take the endpoint Pancharatnam phase.
double oracle_geometric_phase(const HamiltonianModel& model,
                              const ParameterPath& schedule, int level,
                              double dt);

/// Rephase frames so the discrete connection vanishes segment by
/// segment; under this gauge the geometric phase is the bare endpoint
/// overlap argument.
std::vector<EigenFrame> parallel_transport_frames(
    std::vector<EigenFrame> frames,
    double orthogonality_threshold = default_orthogonality_threshold);

}  // namespace gphase

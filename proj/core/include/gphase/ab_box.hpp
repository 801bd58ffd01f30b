#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gphase {

/// Flux-line transport of a particle in an angular box.
struct ABConfig {
  double eta = 0.3;             ///< flux parameter, AB phase is 2*pi*eta
  double delta_theta = 0.0;     ///< angular box length, must be in (pi, 2*pi)
  int mode = 1;                 ///< box eigenfunction index n >= 1
  int quadrature_nodes = 4096;  ///< composite quadrature resolution

  void validate() const;
};

/// Real normalized box mode on [offset, offset + delta_theta), zero
/// outside: psi_n(theta) = sqrt(2/dt) sin(n pi (theta - offset)/dt).
struct BoxWavefunction {
  int mode = 1;
  double offset = 0.0;
  double delta_theta = 0.0;

  double operator()(double theta) const;
};

BoxWavefunction box_mode(const ABConfig& config, double offset);

/// <phi_n; Theta=0 | phi_n; Theta>, composite quadrature with the
/// singlevalued two-branch eigenfunction when the box straddles
/// theta = 0. nodes <= 0 means config.quadrature_nodes.
std::complex<double> ab_overlap(const ABConfig& config, double big_theta,
                                int nodes = 0);

struct ABPhaseRow {
  double big_theta = 0.0;
  double gamma_wrapped = 0.0;
  double gamma_unwrapped = 0.0;
  double overlap_magnitude = 0.0;
};

/// Noncyclic geometric phase along an increasing Theta path starting at
/// zero: arg of the overlap combined with the analytic connection term
/// +eta*Theta (the vector-potential piece; the real-wavefunction piece
/// vanishes).
std::vector<ABPhaseRow> ab_geometric_phase(const ABConfig& config,
                                           const std::vector<double>& thetas);

}  // namespace gphase

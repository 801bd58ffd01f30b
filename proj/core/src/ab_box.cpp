#include "gphase/ab_box.hpp"

#include <cmath>
#include <stdexcept>

#include "gphase/angles.hpp"
#include "gphase/errors.hpp"
#include "gphase/hamiltonian.hpp"

namespace gphase {

using std::complex;
using namespace std::complex_literals;

void ABConfig::validate() const {
  if (!(delta_theta > pi && delta_theta < two_pi)) {
    throw std::domain_error(
        "ABConfig: delta_theta must lie in (pi, 2*pi) so the overlap stays "
        "nonvanishing");
  }
  if (mode < 1) {
    throw std::domain_error("ABConfig: mode must be a positive integer");
  }
  if (quadrature_nodes < 8) {
    throw std::domain_error("ABConfig: too few quadrature nodes");
  }
}

double BoxWavefunction::operator()(double theta) const {
  const double x = theta - offset;
  if (x < 0.0 || x >= delta_theta) return 0.0;
  return std::sqrt(2.0 / delta_theta) *
         std::sin(mode * pi * x / delta_theta);
}

BoxWavefunction box_mode(const ABConfig& config, double offset) {
  config.validate();
  return BoxWavefunction{config.mode, offset, config.delta_theta};
}

namespace {

/// Composite Simpson over [a, b] with at least `nodes` points.
double simpson(const std::function<double(double)>& f, double a, double b,
               int nodes) {
  if (b <= a) return 0.0;
  int n = std::max(nodes, 8);
  if (n % 2 == 0) ++n;  // odd point count
  const double h = (b - a) / (n - 1);
  double acc = f(a) + f(b);
  for (int k = 1; k < n - 1; ++k) {
    acc += (k % 2 == 1 ? 4.0 : 2.0) * f(a + k * h);
  }
  return acc * h / 3.0;
}

}  // namespace

complex<double> ab_overlap(const ABConfig& config, double big_theta,
                           int nodes) {
  config.validate();
  if (big_theta < 0.0 || big_theta > two_pi) {
    throw std::domain_error("ab_overlap: Theta must lie in [0, 2*pi]");
  }
  if (nodes <= 0) nodes = config.quadrature_nodes;
  const BoxWavefunction psi = box_mode(config, 0.0);
  const double dt = config.delta_theta;

  // Direct branch: the part of the transported box still inside [0, 2*pi).
  double direct = 0.0;
  if (big_theta < dt) {
    direct = simpson([&](double th) { return psi(th) * psi(th - big_theta); },
                     big_theta, dt, nodes);
  }
  // Wrapped branch: the part that re-entered past theta = 0; carries the
  // extra winding factor exp(i 2 pi eta) of the singlevalued eigenfunction.
  double wrapped = 0.0;
  const double wrapped_end = big_theta + dt - two_pi;
  if (wrapped_end > 0.0) {
    wrapped = simpson(
        [&](double th) { return psi(th) * psi(th - big_theta + two_pi); }, 0.0,
        wrapped_end, nodes);
  }
  return std::exp(-1i * config.eta * big_theta) *
         (std::exp(1i * two_pi * config.eta) * wrapped + direct);
}

std::vector<ABPhaseRow> ab_geometric_phase(const ABConfig& config,
                                           const std::vector<double>& thetas) {
  config.validate();
  if (thetas.empty() || std::abs(thetas.front()) > 1e-12) {
    throw std::domain_error("ab_geometric_phase: Theta path must start at 0");
  }
  for (std::size_t k = 1; k < thetas.size(); ++k) {
    if (!(thetas[k] > thetas[k - 1])) {
      throw std::domain_error("ab_geometric_phase: Theta must increase");
    }
  }

  std::vector<ABPhaseRow> rows;
  rows.reserve(thetas.size());
  double prev_arg = 0.0;
  double arg_cont = 0.0;
  for (const double theta : thetas) {
    const complex<double> overlap = ab_overlap(config, theta);
    const double mag = std::abs(overlap);
    if (mag < default_orthogonality_threshold) {
      throw undefined_phase_error(
          "ab_geometric_phase: overlap magnitude below threshold");
    }
    const double a = std::arg(overlap);
    arg_cont += wrap_pi(a - prev_arg);
    prev_arg = a;

    ABPhaseRow row;
    row.big_theta = theta;
    // Exact case-(a) cancellation: the connection contributes +eta*Theta
    // against the -eta*Theta prefactor already inside the overlap arg.
    row.gamma_unwrapped = arg_cont + config.eta * theta;
    row.gamma_wrapped = wrap_pi(row.gamma_unwrapped);
    row.overlap_magnitude = mag;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gphase

#include "gphase/hamiltonian.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gphase/angles.hpp"
#include "gphase/errors.hpp"

namespace gphase {

using std::complex;
using namespace std::complex_literals;

namespace {

Eigen::MatrixXcd pauli_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Eigen::MatrixXcd pauli_y() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, -1i, 1i, 0;
  return m;
}

Eigen::MatrixXcd pauli_z() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

HamiltonianModel conical_model(double r_magnitude) {
  if (!(r_magnitude > 0.0)) {
    throw std::domain_error(
        "conical_model: R must be positive (R = 0 is the conical intersection)");
  }
  const double r = r_magnitude;
  HamiltonianModel model;
  model.dimension = 2;
  model.parameter_names = {"Phi"};
  model.evaluate = [r](const Eigen::VectorXd& point) {
    const double phi = point[0];
    return Eigen::MatrixXcd(r * (std::sin(phi) * pauli_x() +
                                 std::cos(phi) * pauli_z()));
  };
  model.analytic_frame = [r](const Eigen::VectorXd& point, int level) {
    if (level < 0 || level > 1) {
      throw std::out_of_range("conical_model: level must be 0 or 1");
    }
    const double phi = point[0];
    EigenFrame frame;
    frame.level = level;
    frame.point = point;
    frame.gap = 2.0 * r;
    frame.vector.resize(2);
    if (level == 1) {  // the |+> branch, E = +R
      frame.energy = r;
      frame.vector << std::cos(phi / 2.0), std::sin(phi / 2.0);
    } else {  // the |-> branch, E = -R
      frame.energy = -r;
      frame.vector << -std::sin(phi / 2.0), std::cos(phi / 2.0);
    }
    return frame;
  };
  return model;
}

HamiltonianModel spin_model(const SpinConfig& config) {
  if (!(config.omega_B > 0.0)) {
    throw std::domain_error("spin_model: omega_B must be positive");
  }
  const double w = config.omega_B;
  HamiltonianModel model;
  model.dimension = 2;
  model.parameter_names = {"Theta", "Phi"};
  model.evaluate = [w](const Eigen::VectorXd& point) {
    const double theta = point[0];
    const double phi = point[1];
    const Eigen::Vector3d e{std::sin(theta) * std::cos(phi),
                            std::sin(theta) * std::sin(phi), std::cos(theta)};
    return Eigen::MatrixXcd(
        -w * (e.x() * pauli_x() + e.y() * pauli_y() + e.z() * pauli_z()));
  };
  model.analytic_frame = [w](const Eigen::VectorXd& point, int level) {
    if (level < 0 || level > 1) {
      throw std::out_of_range("spin_model: level must be 0 or 1");
    }
    const double theta = point[0];
    const double phi = point[1];
    const complex<double> em = std::exp(-0.5i * phi);
    const complex<double> ep = std::exp(0.5i * phi);
    EigenFrame frame;
    frame.level = level;
    frame.point = point;
    frame.gap = 2.0 * w;
    frame.vector.resize(2);
    if (level == 0) {  // |+;e>, aligned with e, E_+ = -omega_B
      frame.energy = -w;
      frame.vector << em * std::cos(theta / 2.0), ep * std::sin(theta / 2.0);
    } else {  // |-;e>, E_- = +omega_B
      frame.energy = w;
      frame.vector << -em * std::sin(theta / 2.0), ep * std::cos(theta / 2.0);
    }
    return frame;
  };
  return model;
}

HamiltonianModel spin_field_model() {
  HamiltonianModel model;
  model.dimension = 2;
  model.parameter_names = {"Bx", "By", "Bz"};
  model.evaluate = [](const Eigen::VectorXd& point) {
    return Eigen::MatrixXcd(-(point[0] * pauli_x() + point[1] * pauli_y() +
                              point[2] * pauli_z()));
  };
  return model;
}

EigenFrame eigensolve(const Eigen::MatrixXcd& hamiltonian, int level,
                      double degeneracy_threshold) {
  const auto n = hamiltonian.rows();
  if (hamiltonian.cols() != n) {
    throw std::invalid_argument("eigensolve: matrix must be square");
  }
  if (level < 0 || level >= n) {
    throw std::out_of_range("eigensolve: level out of range");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolve: eigendecomposition failed");
  }
  const Eigen::VectorXd energies = solver.eigenvalues();  // ascending

  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index m = 0; m < n; ++m) {
    if (m != level) gap = std::min(gap, std::abs(energies[m] - energies[level]));
  }
  if (gap < degeneracy_threshold) {
    throw degeneracy_error("eigensolve: spectral gap " + std::to_string(gap) +
                           " below degeneracy threshold");
  }

  Eigen::VectorXcd vec = solver.eigenvectors().col(level);
  // Deterministic gauge: rotate the largest-magnitude component onto
  // the positive real axis.
  Eigen::Index imax = 0;
  vec.cwiseAbs().maxCoeff(&imax);
  const complex<double> pivot = vec[imax];
  vec *= std::abs(pivot) / pivot;
  vec.normalize();

  EigenFrame frame;
  frame.level = level;
  frame.energy = energies[level];
  frame.vector = std::move(vec);
  frame.gap = gap;
  return frame;
}

std::vector<EigenFrame> phase_smooth(std::vector<EigenFrame> frames,
                                     double orthogonality_threshold) {
  for (std::size_t k = 1; k < frames.size(); ++k) {
    const complex<double> overlap =
        frames[k - 1].vector.dot(frames[k].vector);
    if (std::abs(overlap) < orthogonality_threshold) {
      throw resolution_error(
          "phase_smooth: near-orthogonal consecutive frames; refine the "
          "path sampling");
    }
    frames[k].vector *= std::abs(overlap) / overlap;
  }
  return frames;
}

}  // namespace gphase

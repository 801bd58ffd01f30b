#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace gphase {

/// One instantaneous eigenpair of H(R) with gauge bookkeeping.
struct EigenFrame {
  int level = 0;                ///< index n, ascending in energy
  double energy = 0.0;          ///< E_n(R)
  Eigen::VectorXcd vector;      ///< unit-norm |n;R>
  Eigen::VectorXd point;        ///< parameter point R
  double gap = 0.0;             ///< min over m != n of |E_n - E_m|
};

/// A parametrized family R -> H(R) of finite Hermitian matrices.
/// evaluate is a pure function; instances are immutable after
/// construction and safe for concurrent use.
struct HamiltonianModel {
  int dimension = 0;
  std::vector<std::string> parameter_names;  // dimensionless, hbar = 1
  std::function<Eigen::MatrixXcd(const Eigen::VectorXd&)> evaluate;
  // Closed-form eigenframes, when the family has them. Null otherwise.
  std::function<EigenFrame(const Eigen::VectorXd&, int)> analytic_frame;

  bool has_analytic_frames() const { return static_cast<bool>(analytic_frame); }
};

/// Larmor frequency omega_B = mu*B/hbar; the model only ever sees the
/// product, so mu and B are not stored separately.
struct SpinConfig {
  double omega_B = 1.0;
};

inline constexpr double default_degeneracy_threshold = 1e-9;
inline constexpr double default_orthogonality_threshold = 1e-8;

/// Conical-intersection family H(Phi) = R (sin Phi sx + cos Phi sz),
/// one parameter Phi, fixed radius R > 0. E_pm = -+R... levels are
/// ascending: level 0 has E = -R, level 1 has E = +R.
HamiltonianModel conical_model(double r_magnitude);

/// Spin-1/2 family H(Theta, Phi) = -omega_B e(Theta,Phi).sigma.
/// Level 0 (ground) is the |+;e> state aligned with e, E = -omega_B.
HamiltonianModel spin_model(const SpinConfig& config);

/// Spin-1/2 family over a cartesian field point: H(B) = -B.sigma.
/// Three-dimensional parameter space, as needed for curvature work.
HamiltonianModel spin_field_model();

/// Single eigenpair of a Hermitian matrix, ascending energy order,
/// deterministic gauge (largest-magnitude component made real positive).
EigenFrame eigensolve(const Eigen::MatrixXcd& hamiltonian, int level,
                      double degeneracy_threshold = default_degeneracy_threshold);

/// Rephase frames so every consecutive overlap <n(t_k)|n(t_{k+1})> is
/// real positive; first frame untouched.
std::vector<EigenFrame> phase_smooth(
    std::vector<EigenFrame> frames,
    double orthogonality_threshold = default_orthogonality_threshold);

}  // namespace gphase

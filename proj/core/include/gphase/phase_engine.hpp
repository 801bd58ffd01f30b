#pragma once

#include <Eigen/Dense>
#include <array>
#include <span>
#include <vector>

#include "gphase/hamiltonian.hpp"
#include "gphase/path.hpp"

namespace gphase {

/// Total phase split into its constituents. All angles in radians.
struct PhaseDecomposition {
  double energy_phase = 0.0;       ///< -(1/hbar) integral of E_n dt
  double connection_phase = 0.0;   ///< alpha_n(t) - alpha_n(0)
  double overlap_phase = 0.0;      ///< arg<n;R(0)|n;R(t)>, in (-pi, pi]
  double geometric_wrapped = 0.0;  ///< gamma_n[C] wrapped to (-pi, pi]
  double geometric_unwrapped = 0.0;  ///< continuous accumulation along C
  double total_phase = 0.0;        ///< geometric_unwrapped + energy_phase
};

/// Per-checkpoint decomposition row (prefix of the path up to times[k]).
struct PhaseRow {
  double time = 0.0;
  PhaseDecomposition decomposition;
};

struct AdiabaticityReport {
  double metric = 0.0;  ///< max over t, m != n of |<n|dH/dt|m>| / gap^2
  double worst_time = 0.0;
  int worst_level = 0;
};

/// Real phase samples lambda(R(t_k)); applying it multiplies each frame
/// vector by exp(i lambda_k).
struct GaugeFunction {
  std::vector<double> values;
};

struct CurvatureVector {
  Eigen::Vector3d components = Eigen::Vector3d::Zero();
  Eigen::Vector3d point = Eigen::Vector3d::Zero();
};

/// Oriented triangle soup; triangle vertices are indices, orientation by
/// right-hand rule of the vertex order.
struct TriangleMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;
};

/// Spherical cap Theta <= theta_c on the unit sphere, pole fan plus
/// ring strips; boundary is the circle at theta_c with n_segments points.
TriangleMesh spherical_cap_mesh(double theta_c, int n_rings, int n_segments);

/// Instantaneous eigenframes along every path sample. Uses analytic
/// frames when the model has them, otherwise eigensolve + phase_smooth.
std::vector<EigenFrame> frames_along(
    const HamiltonianModel& model, const ParameterPath& path, int level,
    double degeneracy_threshold = default_degeneracy_threshold);

/// Principal argument of <frame0|frame1>.
double overlap_phase(const EigenFrame& frame0, const EigenFrame& frame1,
                     double orthogonality_threshold =
                         default_orthogonality_threshold);

/// alpha_n(t) - alpha_n(0), discretized gauge-covariantly as
/// -sum_k arg<n(t_k)|n(t_{k+1})>.
double connection_integral(std::span<const EigenFrame> frames,
                           double orthogonality_threshold =
                               default_orthogonality_threshold);

/// The noncyclic geometric phase and full decomposition for the given
/// level along the path. The gamma discretization
///   gamma = arg<n(t_0)|n(t_N)> - sum_k arg<n(t_k)|n(t_{k+1})>
/// is invariant under any per-sample rephasing.
PhaseDecomposition geometric_phase(const HamiltonianModel& model,
                                   const ParameterPath& path, int level);

/// Same, from precomputed frames (any gauge) and their time stamps.
PhaseDecomposition geometric_phase_from_frames(
    std::span<const EigenFrame> frames, std::span<const double> times);

/// Decomposition at every sample along the path.
std::vector<PhaseRow> geometric_phase_series(const HamiltonianModel& model,
                                             const ParameterPath& path,
                                             int level);

/// -(1/hbar) integral of E_n dt, composite trapezoid on the path times.
double energy_phase(const HamiltonianModel& model, const ParameterPath& path,
                    int level);

/// Worst-case Eq.-style adiabaticity ratio along the path; dH/dt by
/// centered differences over the path samples (interior samples only).
AdiabaticityReport adiabaticity_metric(const HamiltonianModel& model,
                                       const ParameterPath& path, int level);

/// Multiply frame k by exp(i lambda_k); energies untouched.
std::vector<EigenFrame> apply_gauge(std::vector<EigenFrame> frames,
                                    const GaugeFunction& gauge);

/// The curvature 2-form vector at a 3-D parameter point; grad H by
/// centered finite differences with the given relative step.
CurvatureVector berry_curvature(const HamiltonianModel& model,
                                const Eigen::Vector3d& point, int level,
                                double relative_step = 1e-5);

/// -sum over triangles of area * (V . n); matches the boundary loop's
/// geometric phase up to discretization error.
double curvature_flux(const HamiltonianModel& model, const TriangleMesh& mesh,
                      int level, double relative_step = 1e-5);

}  // namespace gphase

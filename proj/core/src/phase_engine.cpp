#include "gphase/phase_engine.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gphase/angles.hpp"
#include "gphase/errors.hpp"

namespace gphase {

using std::complex;

TriangleMesh spherical_cap_mesh(double theta_c, int n_rings, int n_segments) {
  if (n_rings < 1 || n_segments < 3) {
    throw std::invalid_argument("spherical_cap_mesh: too few rings/segments");
  }
  TriangleMesh mesh;
  mesh.vertices.push_back({0.0, 0.0, 1.0});  // pole
  for (int r = 1; r <= n_rings; ++r) {
    const double theta = theta_c * r / n_rings;
    for (int s = 0; s < n_segments; ++s) {
      const double phi = two_pi * s / n_segments;
      mesh.vertices.push_back(sphere_point(theta, phi));
    }
  }
  auto ring_vertex = [n_segments](int r, int s) {
    return 1 + (r - 1) * n_segments + (s % n_segments);
  };
  // Pole fan; counterclockwise seen from outside (normal radially out).
  for (int s = 0; s < n_segments; ++s) {
    mesh.triangles.push_back({0, ring_vertex(1, s), ring_vertex(1, s + 1)});
  }
  for (int r = 1; r < n_rings; ++r) {
    for (int s = 0; s < n_segments; ++s) {
      const int a = ring_vertex(r, s);
      const int b = ring_vertex(r, s + 1);
      const int c = ring_vertex(r + 1, s);
      const int d = ring_vertex(r + 1, s + 1);
      mesh.triangles.push_back({a, c, d});
      mesh.triangles.push_back({a, d, b});
    }
  }
  return mesh;
}

std::vector<EigenFrame> frames_along(const HamiltonianModel& model,
                                     const ParameterPath& path, int level,
                                     double degeneracy_threshold) {
  path.validate();
  std::vector<EigenFrame> frames;
  frames.reserve(path.size());
  if (model.has_analytic_frames()) {
    for (const auto& point : path.points) {
      frames.push_back(model.analytic_frame(point, level));
      if (frames.back().gap < degeneracy_threshold) {
        throw degeneracy_error("frames_along: gap below threshold");
      }
    }
    return frames;
  }
  for (const auto& point : path.points) {
    EigenFrame frame =
        eigensolve(model.evaluate(point), level, degeneracy_threshold);
    frame.point = point;
    frames.push_back(std::move(frame));
  }
  return phase_smooth(std::move(frames));
}

double overlap_phase(const EigenFrame& frame0, const EigenFrame& frame1,
                     double orthogonality_threshold) {
  const complex<double> overlap = frame0.vector.dot(frame1.vector);
  if (std::abs(overlap) < orthogonality_threshold) {
    throw undefined_phase_error(
        "overlap_phase: endpoint eigenvectors are (near-)orthogonal");
  }
  return std::arg(overlap);
}

double connection_integral(std::span<const EigenFrame> frames,
                           double orthogonality_threshold) {
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < frames.size(); ++k) {
    const complex<double> overlap =
        frames[k].vector.dot(frames[k + 1].vector);
    if (std::abs(overlap) < orthogonality_threshold) {
      throw resolution_error(
          "connection_integral: near-orthogonal consecutive frames; refine "
          "the path sampling");
    }
    sum -= std::arg(overlap);
  }
  return sum;
}

namespace {

double trapezoid_energy(std::span<const EigenFrame> frames,
                        std::span<const double> times) {
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < frames.size(); ++k) {
    acc -= 0.5 * (frames[k].energy + frames[k + 1].energy) *
           (times[k + 1] - times[k]);
  }
  return acc;
}

}  // namespace

PhaseDecomposition geometric_phase_from_frames(
    std::span<const EigenFrame> frames, std::span<const double> times) {
  if (frames.size() < 2 || frames.size() != times.size()) {
    throw std::invalid_argument(
        "geometric_phase_from_frames: need matching frames/times, >= 2");
  }
  PhaseDecomposition d;
  d.overlap_phase = overlap_phase(frames.front(), frames.back());
  d.connection_phase = connection_integral(frames);
  d.geometric_wrapped = wrap_pi(d.overlap_phase + d.connection_phase);

  // Continuous accumulation: gamma at each prefix, lifted sample-to-sample.
  double running_connection = 0.0;
  double unwrapped = 0.0;
  double prev_gamma = 0.0;
  for (std::size_t k = 1; k < frames.size(); ++k) {
    const complex<double> step = frames[k - 1].vector.dot(frames[k].vector);
    running_connection -= std::arg(step);
    const complex<double> head = frames.front().vector.dot(frames[k].vector);
    // Orthogonal interior prefixes leave a removable gap in the running
    // phase; skip them, the lift continues from the last defined value.
    if (std::abs(head) >= default_orthogonality_threshold) {
      const double gamma_k = std::arg(head) + running_connection;
      unwrapped += wrap_pi(gamma_k - prev_gamma);
      prev_gamma = gamma_k;
    }
  }
  d.geometric_unwrapped = unwrapped;
  d.energy_phase = trapezoid_energy(frames, times);
  d.total_phase = d.geometric_unwrapped + d.energy_phase;
  return d;
}

PhaseDecomposition geometric_phase(const HamiltonianModel& model,
                                   const ParameterPath& path, int level) {
  const auto frames = frames_along(model, path, level);
  return geometric_phase_from_frames(frames, path.times);
}

std::vector<PhaseRow> geometric_phase_series(const HamiltonianModel& model,
                                             const ParameterPath& path,
                                             int level) {
  const auto frames = frames_along(model, path, level);
  std::vector<PhaseRow> rows;
  rows.reserve(path.size());
  // The zero-length prefix: every phase is identically zero.
  PhaseRow first;
  first.time = path.times.front();
  rows.push_back(first);
  for (std::size_t k = 2; k <= frames.size(); ++k) {
    PhaseRow row;
    row.time = path.times[k - 1];
    row.decomposition = geometric_phase_from_frames(
        std::span(frames).subspan(0, k), std::span(path.times).subspan(0, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

double energy_phase(const HamiltonianModel& model, const ParameterPath& path,
                    int level) {
  const auto frames = frames_along(model, path, level);
  return trapezoid_energy(frames, path.times);
}

AdiabaticityReport adiabaticity_metric(const HamiltonianModel& model,
                                       const ParameterPath& path, int level) {
  path.validate();
  const int dim = model.dimension;
  if (level < 0 || level >= dim) {
    throw std::out_of_range("adiabaticity_metric: level out of range");
  }
  AdiabaticityReport report;
  for (std::size_t k = 1; k + 1 < path.size(); ++k) {
    const Eigen::MatrixXcd h_dot =
        (model.evaluate(path.points[k + 1]) - model.evaluate(path.points[k - 1])) /
        (path.times[k + 1] - path.times[k - 1]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        model.evaluate(path.points[k]));
    const Eigen::VectorXd energies = solver.eigenvalues();
    const Eigen::VectorXcd level_vec = solver.eigenvectors().col(level);
    for (int m = 0; m < dim; ++m) {
      if (m == level) continue;
      const double gap = std::abs(energies[m] - energies[level]);
      if (gap < default_degeneracy_threshold) {
        throw degeneracy_error("adiabaticity_metric: gap collapse along path");
      }
      const double ratio =
          std::abs(level_vec.dot(h_dot * solver.eigenvectors().col(m))) /
          (gap * gap);
      if (ratio > report.metric) {
        report.metric = ratio;
        report.worst_time = path.times[k];
        report.worst_level = m;
      }
    }
  }
  return report;
}

std::vector<EigenFrame> apply_gauge(std::vector<EigenFrame> frames,
                                    const GaugeFunction& gauge) {
  if (gauge.values.size() != frames.size()) {
    throw std::invalid_argument("apply_gauge: one gauge value per frame");
  }
  for (std::size_t k = 0; k < frames.size(); ++k) {
    frames[k].vector *= std::exp(complex<double>(0.0, gauge.values[k]));
  }
  return frames;
}

CurvatureVector berry_curvature(const HamiltonianModel& model,
                                const Eigen::Vector3d& point, int level,
                                double relative_step) {
  Eigen::VectorXd base(3);
  base << point.x(), point.y(), point.z();
  if (model.evaluate(base).rows() != model.dimension) {
    throw std::invalid_argument("berry_curvature: inconsistent model dimension");
  }
  // Model must live over a 3-D parameter space; probe with a 2-vector.
  // (Cheaper: trust the caller's 3-vector and let evaluate throw.)
  const double h = relative_step * std::max(1.0, point.norm());
  std::array<Eigen::MatrixXcd, 3> grad;
  for (int j = 0; j < 3; ++j) {
    Eigen::VectorXd plus = base, minus = base;
    plus[j] += h;
    minus[j] -= h;
    grad[j] = (model.evaluate(plus) - model.evaluate(minus)) / (2.0 * h);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(model.evaluate(base));
  const Eigen::VectorXd energies = solver.eigenvalues();
  const Eigen::VectorXcd n_vec = solver.eigenvectors().col(level);

  CurvatureVector result;
  result.point = point;
  for (int m = 0; m < model.dimension; ++m) {
    if (m == level) continue;
    const double gap = energies[m] - energies[level];
    if (std::abs(gap) < default_degeneracy_threshold) {
      throw degeneracy_error("berry_curvature: gap collapse at point");
    }
    const Eigen::VectorXcd m_vec = solver.eigenvectors().col(m);
    Eigen::Vector3cd a;  // a_j = <n|dH_j|m>
    for (int j = 0; j < 3; ++j) a[j] = n_vec.dot(grad[j] * m_vec);
    // Im of (a x conj(a)) written out; Eigen's cross() conjugates complex
    // operands, which is not the product this formula needs.
    auto im_cross = [&a](int p, int q) {
      return 2.0 * std::imag(a[p] * std::conj(a[q]));
    };
    const Eigen::Vector3d cross_im{im_cross(1, 2), im_cross(2, 0),
                                   im_cross(0, 1)};
    result.components += cross_im / (gap * gap);
  }
  return result;
}

double curvature_flux(const HamiltonianModel& model, const TriangleMesh& mesh,
                      int level, double relative_step) {
  double flux = 0.0;
  for (const auto& tri : mesh.triangles) {
    const Eigen::Vector3d& v0 = mesh.vertices.at(tri[0]);
    const Eigen::Vector3d& v1 = mesh.vertices.at(tri[1]);
    const Eigen::Vector3d& v2 = mesh.vertices.at(tri[2]);
    const Eigen::Vector3d area_vec = 0.5 * (v1 - v0).cross(v2 - v0);
    if (area_vec.norm() < 1e-16) {
      throw resolution_error("curvature_flux: degenerate triangle");
    }
    // Edge-midpoint rule (degree-2 exact); the centroid rule's O(h^2)
    // bias is visible against fine boundary loops.
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    const std::array<Eigen::Vector3d, 3> midpoints{
        0.5 * (v0 + v1), 0.5 * (v1 + v2), 0.5 * (v2 + v0)};
    for (const auto& m : midpoints) {
      mean += berry_curvature(model, m, level, relative_step).components;
    }
    flux -= (mean / 3.0).dot(area_vec);
  }
  return flux;
}

}  // namespace gphase

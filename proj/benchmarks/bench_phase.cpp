#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "gphase/ab_box.hpp"
#include "gphase/angles.hpp"
#include "gphase/geodesic.hpp"
#include "gphase/hamiltonian.hpp"
#include "gphase/oracle.hpp"
#include "gphase/path.hpp"
#include "gphase/phase_engine.hpp"

using namespace gphase;

static void BM_GeometricPhaseAnalyticFrames(benchmark::State& state) {
  const HamiltonianModel model = spin_model(SpinConfig{1.0});
  const ParameterPath path = schedule_on_sphere(
      constant_theta_loop(pi / 3.0, static_cast<int>(state.range(0))), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_phase(model, path, 0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GeometricPhaseAnalyticFrames)->Arg(1000)->Arg(10000);

static void BM_GeometricPhaseEigensolve(benchmark::State& state) {
  // Numeric frames: eigensolve plus smoothing at every sample.
  const HamiltonianModel model = spin_field_model();
  const int n = static_cast<int>(state.range(0));
  const SpherePath loop = constant_theta_loop(pi / 3.0, n);
  std::vector<Eigen::VectorXd> points;
  points.reserve(loop.samples.size());
  for (const auto& s : loop.samples) points.push_back(Eigen::VectorXd(s));
  const ParameterPath path = uniform_path(std::move(points), 1.0, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_phase(model, path, 0));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_GeometricPhaseEigensolve)->Arg(1000)->Arg(4000);

static void BM_Propagate(benchmark::State& state) {
  const HamiltonianModel model = spin_model(SpinConfig{1.0});
  const double duration = static_cast<double>(state.range(0));
  const ParameterPath schedule =
      schedule_on_sphere(constant_theta_loop(pi / 3.0, 401), duration);
  const Eigen::VectorXcd initial =
      model.analytic_frame(schedule.points.front(), 0).vector;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(model, schedule, initial, 0.01));
  }
}
BENCHMARK(BM_Propagate)->Arg(10)->Arg(100);

static void BM_SolidAngle(benchmark::State& state) {
  const SpherePath loop =
      constant_theta_loop(pi / 3.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solid_angle(loop));
  }
}
BENCHMARK(BM_SolidAngle)->Arg(1000)->Arg(100000);

static void BM_CurvatureFlux(benchmark::State& state) {
  const HamiltonianModel model = spin_field_model();
  const int rings = static_cast<int>(state.range(0));
  const TriangleMesh mesh = spherical_cap_mesh(pi / 3.0, rings, 2 * rings);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_flux(model, mesh, 0));
  }
  state.SetItemsProcessed(state.iterations() * mesh.triangles.size());
}
BENCHMARK(BM_CurvatureFlux)->Arg(10)->Arg(40);

static void BM_BoxOverlap(benchmark::State& state) {
  const ABConfig config{0.3, 1.5 * pi, 1,
                        static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ab_overlap(config, 4.0));
  }
}
BENCHMARK(BM_BoxOverlap)->Arg(1024)->Arg(16384);

BENCHMARK_MAIN();

#include <doctest.h>

#include <Eigen/Dense>
#include <complex>

#include "gphase/angles.hpp"
#include "gphase/errors.hpp"
#include "gphase/hamiltonian.hpp"
#include "gphase/path.hpp"
#include "gphase/phase_engine.hpp"

using namespace gphase;
using namespace std::complex_literals;

namespace {

Eigen::VectorXd point1(double phi) {
  Eigen::VectorXd p(1);
  p << phi;
  return p;
}

Eigen::VectorXd point2(double theta, double phi) {
  Eigen::VectorXd p(2);
  p << theta, phi;
  return p;
}

}  // namespace

TEST_CASE("conical model matches the closed forms") {
  const auto model = conical_model(1.0);

  SUBCASE("Phi = 0 gives diag(1, -1)") {
    const Eigen::MatrixXcd h = model.evaluate(point1(0.0));
    CHECK(std::abs(h(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(h(1, 1) + 1.0) < 1e-15);
    CHECK(std::abs(h(0, 1)) < 1e-15);
    const EigenFrame plus = model.analytic_frame(point1(0.0), 1);
    CHECK(plus.energy == doctest::Approx(1.0));
    CHECK(std::abs(plus.vector[0] - 1.0) < 1e-15);
    CHECK(std::abs(plus.vector[1]) < 1e-15);
  }

  SUBCASE("Phi = pi/2 gives sigma_x") {
    const Eigen::MatrixXcd h = model.evaluate(point1(pi / 2.0));
    CHECK(std::abs(h(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(h(0, 0)) < 1e-15);
    const EigenFrame plus = model.analytic_frame(point1(pi / 2.0), 1);
    CHECK(std::abs(plus.vector[0] - std::cos(pi / 4.0)) < 1e-15);
    CHECK(std::abs(plus.vector[1] - std::sin(pi / 4.0)) < 1e-15);
  }

  SUBCASE("gap is 2R") {
    const auto model2 = conical_model(2.0);
    CHECK(model2.analytic_frame(point1(1.234), 0).gap == doctest::Approx(4.0));
  }

  SUBCASE("nonpositive R is rejected") {
    CHECK_THROWS_AS(conical_model(0.0), std::domain_error);
    CHECK_THROWS_AS(conical_model(-1.0), std::domain_error);
  }
}

TEST_CASE("spin model matches the closed forms") {
  const auto model = spin_model(SpinConfig{1.0});

  SUBCASE("north pole is -sigma_z with aligned ground state") {
    const Eigen::MatrixXcd h = model.evaluate(point2(0.0, 0.0));
    CHECK(std::abs(h(0, 0) + 1.0) < 1e-14);
    CHECK(std::abs(h(1, 1) - 1.0) < 1e-14);
    const EigenFrame aligned = model.analytic_frame(point2(0.0, 0.0), 0);
    CHECK(aligned.energy == doctest::Approx(-1.0));
    CHECK(std::abs(aligned.vector[0] - 1.0) < 1e-15);
  }

  SUBCASE("equator at Phi = 0 matches the half-angle form") {
    const EigenFrame aligned = model.analytic_frame(point2(pi / 2.0, 0.0), 0);
    CHECK(std::abs(aligned.vector[0] - std::cos(pi / 4.0)) < 1e-14);
    CHECK(std::abs(aligned.vector[1] - std::sin(pi / 4.0)) < 1e-14);
  }

  SUBCASE("gap is 2 omega_B") {
    const auto model3 = spin_model(SpinConfig{3.0});
    CHECK(model3.analytic_frame(point2(0.7, 2.1), 1).gap == doctest::Approx(6.0));
  }
}

TEST_CASE("models produce Hermitian matrices with eigen-consistent frames") {
  const auto conical = conical_model(1.7);
  const auto spin = spin_model(SpinConfig{0.8});
  for (double a = 0.0; a < two_pi; a += 0.61) {
    for (double b = 0.0; b < two_pi; b += 1.13) {
      const Eigen::MatrixXcd hc = conical.evaluate(point1(a));
      CHECK((hc - hc.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      const Eigen::MatrixXcd hs = spin.evaluate(point2(a, b));
      CHECK((hs - hs.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      for (int level = 0; level < 2; ++level) {
        const EigenFrame fc = conical.analytic_frame(point1(a), level);
        CHECK((hc * fc.vector - fc.energy * fc.vector).cwiseAbs().maxCoeff() <
              1e-10);
        CHECK(std::abs(fc.vector.norm() - 1.0) < 1e-12);
        const EigenFrame fs = spin.analytic_frame(point2(a, b), level);
        CHECK((hs * fs.vector - fs.energy * fs.vector).cwiseAbs().maxCoeff() <
              1e-10);
        CHECK(std::abs(fs.vector.norm() - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("eigensolve basics") {
  Eigen::MatrixXcd sigma_z(2, 2);
  sigma_z << 1, 0, 0, -1;

  SUBCASE("ascending order, normalized vector") {
    const EigenFrame ground = eigensolve(sigma_z, 0);
    CHECK(ground.energy == doctest::Approx(-1.0));
    CHECK(std::abs(ground.vector[1]) == doctest::Approx(1.0));
    CHECK(std::abs(ground.vector[0]) < 1e-14);
    CHECK(ground.gap == doctest::Approx(2.0));
  }

  SUBCASE("matches the analytic conical frame up to phase") {
    const auto model = conical_model(1.0);
    const EigenFrame numeric = eigensolve(model.evaluate(point1(pi / 2.0)), 1);
    const EigenFrame analytic = model.analytic_frame(point1(pi / 2.0), 1);
    CHECK(numeric.energy == doctest::Approx(1.0));
    CHECK(std::abs(numeric.vector.dot(analytic.vector)) >
          1.0 - 1e-9);
  }

  SUBCASE("degenerate spectrum raises") {
    const auto model = conical_model(1e-12);
    CHECK_THROWS_AS(eigensolve(model.evaluate(point1(0.0)), 0),
                    degeneracy_error);
  }

  SUBCASE("deterministic gauge for identical inputs") {
    const auto model = spin_model(SpinConfig{1.0});
    const Eigen::MatrixXcd h = model.evaluate(point2(1.1, 2.2));
    const EigenFrame a = eigensolve(h, 0);
    const EigenFrame b = eigensolve(h, 0);
    CHECK((a.vector - b.vector).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("numeric and analytic frames agree across a parameter sweep") {
  const auto model = spin_model(SpinConfig{1.3});
  for (double theta = 0.1; theta < pi; theta += 0.43) {
    for (double phi = 0.0; phi < two_pi; phi += 0.77) {
      for (int level = 0; level < 2; ++level) {
        const EigenFrame numeric =
            eigensolve(model.evaluate(point2(theta, phi)), level);
        const EigenFrame analytic = model.analytic_frame(point2(theta, phi), level);
        CHECK(std::abs(numeric.energy - analytic.energy) < 1e-10);
        CHECK(std::abs(numeric.vector.dot(analytic.vector)) > 1.0 - 1e-9);
      }
    }
  }
}

TEST_CASE("phase_smooth") {
  const auto model = conical_model(1.0);

  SUBCASE("already-positive overlaps are a fixed point") {
    std::vector<EigenFrame> frames;
    for (double phi = 0.0; phi < 1.0; phi += 0.1) {
      frames.push_back(model.analytic_frame(point1(phi), 1));
    }
    const auto smoothed = phase_smooth(frames);
    for (std::size_t k = 0; k < frames.size(); ++k) {
      CHECK((smoothed[k].vector - frames[k].vector).cwiseAbs().maxCoeff() <
            1e-14);
    }
  }

  SUBCASE("negative overlap flips the second frame by pi") {
    std::vector<EigenFrame> frames{model.analytic_frame(point1(0.0), 1),
                                   model.analytic_frame(point1(0.0), 1)};
    frames[1].vector *= -1.0;
    const auto smoothed = phase_smooth(frames);
    CHECK((smoothed[1].vector - frames[0].vector).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("near-orthogonal frames raise a resolution error") {
    std::vector<EigenFrame> frames{model.analytic_frame(point1(0.0), 1),
                                   model.analytic_frame(point1(pi), 1)};
    CHECK_THROWS_AS(phase_smooth(frames), resolution_error);
  }

  SUBCASE("smoothing is invisible to the geometric phase") {
    // Primed gauge exp(i Phi/2) along Phi: 0 -> pi/2, smoothed vs raw.
    const ParameterPath path = phi_sweep(0.0, pi / 2.0, 101, 1.0);
    std::vector<EigenFrame> frames;
    for (const auto& p : path.points) {
      EigenFrame f = model.analytic_frame(p, 1);
      f.vector *= std::exp(0.5i * p[0]);
      frames.push_back(std::move(f));
    }
    const auto raw = geometric_phase_from_frames(frames, path.times);
    const auto smooth =
        geometric_phase_from_frames(phase_smooth(frames), path.times);
    CHECK(circular_distance(raw.geometric_wrapped, smooth.geometric_wrapped) <
          1e-9);
    // Endpoint overlap magnitude is also untouched.
    const double mag_raw =
        std::abs(frames.front().vector.dot(frames.back().vector));
    const auto smoothed = phase_smooth(frames);
    const double mag_smooth =
        std::abs(smoothed.front().vector.dot(smoothed.back().vector));
    CHECK(mag_raw == doctest::Approx(mag_smooth).epsilon(1e-12));
  }
}

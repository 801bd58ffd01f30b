#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "gphase/angles.hpp"
#include "gphase/errors.hpp"
#include "gphase/hamiltonian.hpp"
#include "gphase/path.hpp"
#include "gphase/phase_engine.hpp"
#include "gphase/spin_experiment.hpp"

using namespace gphase;

TEST_CASE("f_overlap endpoint angle") {
  SUBCASE("coincident points give zero") {
    CHECK(f_overlap_angles(0.7, 1.3, 0.7, 1.3) == doctest::Approx(0.0));
    CHECK(f_overlap(sphere_point(0.7, 1.3), sphere_point(0.7, 1.3)) ==
          doctest::Approx(0.0));
  }

  SUBCASE("equatorial pair: 0 below a half turn, pi beyond") {
    CHECK(f_overlap_angles(pi / 2.0, 0.0, pi / 2.0, 2.0) ==
          doctest::Approx(0.0));
    CHECK(circular_distance(
              f_overlap(Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, -1, 0)),
              pi) < 1e-9);
  }

  SUBCASE("pole to tilted point picks up -Phi/2") {
    const double theta1 = 1.1, phi1 = 2.3;
    CHECK(f_overlap(Eigen::Vector3d(0, 0, 1), sphere_point(theta1, phi1)) ==
          doctest::Approx(-phi1 / 2.0));
  }

  SUBCASE("the angle form is 4*pi periodic, not 2*pi") {
    const double base = f_overlap_angles(0.8, 0.0, 0.8, 0.5);
    CHECK(f_overlap_angles(0.8, 0.0, 0.8, 0.5 + 2.0 * two_pi) ==
          doctest::Approx(base));
    CHECK(f_overlap_angles(0.8, 0.0, 0.8, 0.5 + two_pi) !=
          doctest::Approx(base));
  }

  SUBCASE("antipodal endpoints are undefined") {
    CHECK_THROWS_AS(f_overlap(Eigen::Vector3d(0, 0, 1),
                              Eigen::Vector3d(0, 0, -1)),
                    undefined_phase_error);
    CHECK_THROWS_AS(f_overlap_angles(pi / 2.0, 0.0, pi / 2.0, pi),
                    undefined_phase_error);
  }
}

TEST_CASE("spin_geometric_phase on canonical paths") {
  SUBCASE("constant-Theta Berry loop") {
    for (const double theta : {pi / 6.0, pi / 3.0, 1.9}) {
      const double gamma = spin_geometric_phase(constant_theta_loop(theta, 8001));
      CHECK(circular_distance(gamma, -pi * (1.0 - std::cos(theta))) < 1e-6);
    }
  }

  SUBCASE("equatorial arc below a half turn carries no phase") {
    CHECK(std::abs(spin_geometric_phase(equatorial_arc(2.0, 1001))) < 1e-10);
  }

  SUBCASE("octant contour gives -pi/4") {
    CHECK(circular_distance(spin_geometric_phase(octant_path(2000)),
                            -pi / 4.0) < 1e-5);
  }

  SUBCASE("matches the general engine on a generic tilted path") {
    std::vector<std::pair<double, double>> angles;
    const int n = 6001;
    for (int k = 0; k < n; ++k) {
      const double s = static_cast<double>(k) / (n - 1);
      angles.emplace_back(pi / 3.0 + 0.4 * std::sin(two_pi * s),
                          2.8 * s);
    }
    const SpherePath path = sphere_path_from_angles(angles, false);
    const double direct = spin_geometric_phase(path);
    const auto engine =
        geometric_phase(spin_model(SpinConfig{1.0}),
                        schedule_on_sphere(path, 1.0), 0);
    CHECK(circular_distance(direct, engine.geometric_wrapped) < 1e-5);
  }
}

TEST_CASE("polarization_z") {
  const double theta0 = pi / 3.0;
  const double omega_b = 1.0;
  const double t = 300.0;
  const SpherePath loop = constant_theta_loop(theta0, 1201);

  const PolarizationResult r = polarization_z(theta0, loop, omega_b, t);

  SUBCASE("phase bookkeeping") {
    CHECK(circular_distance(r.gamma, -pi * (1.0 - std::cos(theta0))) < 1e-5);
    // Closed loop: endpoint overlap angle with a full 2*pi of Phi is pi.
    CHECK(circular_distance(r.f_value, pi) < 1e-9);
    CHECK(r.gamma_mod_pi_class >= 0.0);
    CHECK(r.gamma_mod_pi_class < pi);
    CHECK(std::abs(r.gamma_mod_pi_class -
                   (r.gamma - pi * std::floor(r.gamma / pi))) < 1e-12);
  }

  SUBCASE("the two published sign choices bracket the base term") {
    CHECK(r.p_z_analytic + r.p_z_printed ==
          doctest::Approx(2.0 * std::cos(theta0) * std::cos(theta0)));
  }

  SUBCASE("slow drive: exact propagation matches the analytic form") {
    CHECK(std::abs(r.p_z_analytic - r.p_z_oracle) < 2e-2);
    CHECK(std::abs(r.p_z_oracle) <= 1.0 + 1e-12);
  }

  SUBCASE("sampled measurement is deterministic and concentrates") {
    const auto a = polarization_z(theta0, loop, omega_b, t, 2'000'000, 42);
    const auto b = polarization_z(theta0, loop, omega_b, t, 2'000'000, 42);
    REQUIRE(a.p_z_measured.has_value());
    CHECK(*a.p_z_measured == *b.p_z_measured);
    CHECK(std::abs(*a.p_z_measured - a.p_z_oracle) < 5e-3);
    const auto c = polarization_z(theta0, loop, omega_b, t, 2'000'000, 43);
    CHECK(*a.p_z_measured != *c.p_z_measured);
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(polarization_z(theta0 + 0.2, loop, omega_b, t),
                    std::invalid_argument);
    CHECK_THROWS_AS(polarization_z(theta0, loop, omega_b, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(polarization_z(theta0, loop, omega_b, t, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("measured_polarization") {
  CHECK(measured_polarization(3.0, 1.0) == doctest::Approx(0.5));
  CHECK(measured_polarization(1.0, 1.0) == doctest::Approx(0.0));
  CHECK(measured_polarization(5.0, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(measured_polarization(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(measured_polarization(-1.0, 1.0), std::domain_error);
}

TEST_CASE("gamma class recovery from an observed polarization") {
  const double theta0 = pi / 3.0;
  const double omega_b = 1.0;
  const double t = 120.0;
  const SpherePath loop = constant_theta_loop(theta0, 1201);
  const PolarizationResult r = polarization_z(theta0, loop, omega_b, t);

  const auto [class_a, class_b] = gamma_classes_from_pz(
      r.p_z_analytic, theta0, theta0, r.f_value, omega_b, t);
  const double wanted = r.gamma_mod_pi_class;
  const double best = std::min(
      std::min(std::abs(class_a - wanted), std::abs(class_b - wanted)),
      std::min(pi - std::abs(class_a - wanted), pi - std::abs(class_b - wanted)));
  CHECK(best < 1e-9);

  // Polar start: no cross term, no information.
  CHECK_THROWS_AS(gamma_classes_from_pz(0.5, 0.0, theta0, 0.0, omega_b, t),
                  std::domain_error);
}

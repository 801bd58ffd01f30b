#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "gphase/ab_box.hpp"
#include "gphase/angles.hpp"
#include "gphase/errors.hpp"

using namespace gphase;
using namespace std::complex_literals;

namespace {

// Closed-form shifted self-overlap of the box mode,
//   I(s) = integral psi(theta) psi(theta - s) d theta over the common
// support, for shift s in [0, delta_theta]:
//   I(s) = ((dt - s) cos(a s) + sin(a s)/a) / dt,   a = n pi / dt.
double shifted_overlap(int mode, double dt, double s) {
  if (s >= dt) return 0.0;
  const double a = mode * pi / dt;
  return ((dt - s) * std::cos(a * s) + std::sin(a * s) / a) / dt;
}

// The full overlap assembled from closed forms; the wrapped branch is the
// same integral with shift 2*pi - Theta.
std::complex<double> reference_overlap(const ABConfig& c, double big_theta) {
  const double direct = big_theta < c.delta_theta
                            ? shifted_overlap(c.mode, c.delta_theta, big_theta)
                            : 0.0;
  const double wrapped =
      big_theta > two_pi - c.delta_theta
          ? shifted_overlap(c.mode, c.delta_theta, two_pi - big_theta)
          : 0.0;
  return std::exp(-1i * c.eta * big_theta) *
         (std::exp(1i * two_pi * c.eta) * wrapped + direct);
}

std::vector<double> theta_grid(int steps) {
  std::vector<double> thetas;
  for (int k = 0; k <= steps; ++k) thetas.push_back(two_pi * k / steps);
  return thetas;
}

}  // namespace

TEST_CASE("ABConfig validation") {
  ABConfig c{0.3, 1.75 * pi, 1, 4096};
  CHECK_NOTHROW(c.validate());

  ABConfig narrow = c;
  narrow.delta_theta = pi;  // boundary excluded
  CHECK_THROWS_AS(narrow.validate(), std::domain_error);
  narrow.delta_theta = 0.5;
  CHECK_THROWS_AS(narrow.validate(), std::domain_error);

  ABConfig wide = c;
  wide.delta_theta = two_pi;
  CHECK_THROWS_AS(wide.validate(), std::domain_error);

  ABConfig bad_mode = c;
  bad_mode.mode = 0;
  CHECK_THROWS_AS(bad_mode.validate(), std::domain_error);

  ABConfig coarse = c;
  coarse.quadrature_nodes = 4;
  CHECK_THROWS_AS(coarse.validate(), std::domain_error);
}

TEST_CASE("box mode is normalized and confined") {
  const ABConfig c{0.0, 1.6 * pi, 3, 4096};
  const BoxWavefunction psi = box_mode(c, 0.0);

  CHECK(psi(-0.1) == 0.0);
  CHECK(psi(c.delta_theta) == 0.0);
  CHECK(psi(c.delta_theta + 1.0) == 0.0);
  CHECK(std::abs(psi(0.0)) < 1e-14);

  // Trapezoid normalization check, independent of the library quadrature.
  const int n = 200000;
  double norm = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = c.delta_theta * (k + 0.5) / n;
    norm += psi(th) * psi(th) * (c.delta_theta / n);
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("ab_overlap matches the closed-form assembly") {
  for (const int mode : {1, 2}) {
    const ABConfig c{0.3, 1.75 * pi, mode, 4096};
    for (const double theta :
         {0.0, 0.1, 0.25 * pi, pi, 1.5 * pi, 1.9 * pi, two_pi}) {
      const std::complex<double> numeric = ab_overlap(c, theta);
      const std::complex<double> analytic = reference_overlap(c, theta);
      CHECK(std::abs(numeric - analytic) < 1e-8);
    }
  }
}

TEST_CASE("ab_overlap endpoints and invariances") {
  const ABConfig c{0.3, 1.75 * pi, 1, 4096};

  CHECK(std::abs(ab_overlap(c, 0.0) - 1.0) < 1e-9);
  CHECK(std::abs(ab_overlap(c, two_pi) - 1.0) < 1e-9);

  SUBCASE("single-branch magnitude is flux independent") {
    // Before the wrap (and after the direct branch dies) only one branch
    // contributes, so the flux factor is a pure phase. In between the two
    // branches interfere and the modulus does depend on eta.
    ABConfig other = c;
    other.eta = 0.77;
    for (const double theta : {0.4, 1.9 * pi}) {
      CHECK(std::abs(ab_overlap(c, theta)) ==
            doctest::Approx(std::abs(ab_overlap(other, theta))).epsilon(1e-10));
    }
    CHECK(std::abs(ab_overlap(c, pi)) !=
          doctest::Approx(std::abs(ab_overlap(other, pi))));
  }

  SUBCASE("out-of-range Theta is rejected") {
    CHECK_THROWS_AS(ab_overlap(c, -0.1), std::domain_error);
    CHECK_THROWS_AS(ab_overlap(c, two_pi + 0.1), std::domain_error);
  }
}

TEST_CASE("ab_geometric_phase interpolates 0 -> 2*pi*eta") {
  const ABConfig c{0.3, 1.75 * pi, 1, 4096};
  const auto rows = ab_geometric_phase(c, theta_grid(400));

  CHECK(rows.front().gamma_unwrapped == doctest::Approx(0.0));
  CHECK(rows.back().gamma_unwrapped ==
        doctest::Approx(two_pi * c.eta).epsilon(1e-7));

  // Before the transported box wraps past the flux line the phase is
  // exactly zero: the connection cancels the overlap prefactor.
  for (const auto& row : rows) {
    if (row.big_theta > 0.0 && row.big_theta < two_pi - c.delta_theta) {
      CHECK(std::abs(row.gamma_unwrapped) < 1e-9);
    }
    CHECK(row.gamma_wrapped == doctest::Approx(wrap_pi(row.gamma_unwrapped)));
    CHECK(row.overlap_magnitude > 0.0);
  }
}

TEST_CASE("ab_geometric_phase special flux values") {
  SUBCASE("zero flux gives an identically zero phase") {
    const ABConfig c{0.0, 1.75 * pi, 1, 4096};
    for (const auto& row : ab_geometric_phase(c, theta_grid(200))) {
      CHECK(std::abs(row.gamma_unwrapped) < 1e-9);
    }
  }

  SUBCASE("half-integer flux ends at pi") {
    // The two branches cancel exactly at Theta = pi for eta = 1/2, so the
    // grid must step around that point (odd step count).
    const ABConfig c{0.5, 1.75 * pi, 1, 4096};
    const auto rows = ab_geometric_phase(c, theta_grid(401));
    CHECK(circular_distance(rows.back().gamma_wrapped, pi) < 1e-7);
    CHECK_THROWS_AS(ab_geometric_phase(c, {0.0, pi}), undefined_phase_error);
  }
}

TEST_CASE("ab_geometric_phase is stable under quadrature refinement") {
  ABConfig coarse{0.3, 1.6 * pi, 2, 2048};
  ABConfig fine = coarse;
  fine.quadrature_nodes = 8192;
  const auto a = ab_geometric_phase(coarse, theta_grid(100));
  const auto b = ab_geometric_phase(fine, theta_grid(100));
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(std::abs(a[k].gamma_unwrapped - b[k].gamma_unwrapped) < 1e-8);
  }
}

TEST_CASE("ab_geometric_phase input validation") {
  const ABConfig c{0.3, 1.75 * pi, 1, 4096};
  CHECK_THROWS_AS(ab_geometric_phase(c, {}), std::domain_error);
  CHECK_THROWS_AS(ab_geometric_phase(c, {0.5, 1.0}), std::domain_error);
  CHECK_THROWS_AS(ab_geometric_phase(c, {0.0, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(ab_geometric_phase(c, {0.0, 1.0, 0.5}), std::domain_error);
}

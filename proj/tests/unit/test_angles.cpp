#include <doctest.h>

#include "gphase/angles.hpp"

using namespace gphase;

TEST_CASE("wrap_pi lands in (-pi, pi] and is idempotent") {
  CHECK(wrap_pi(0.0) == doctest::Approx(0.0));
  CHECK(wrap_pi(pi) == doctest::Approx(pi));
  CHECK(wrap_pi(-pi) == doctest::Approx(pi));
  CHECK(wrap_pi(3.0 * pi) == doctest::Approx(pi));
  CHECK(wrap_pi(two_pi + 0.25) == doctest::Approx(0.25));
  for (double a = -20.0; a < 20.0; a += 0.37) {
    const double w = wrap_pi(a);
    CHECK(w > -pi);
    CHECK(w <= pi + 1e-15);
    CHECK(wrap_pi(w) == doctest::Approx(w));
  }
}

TEST_CASE("circular distance is symmetric and respects wrapping") {
  CHECK(circular_distance(0.1, two_pi + 0.1) == doctest::Approx(0.0));
  CHECK(circular_distance(pi - 0.01, -pi + 0.01) == doctest::Approx(0.02));
  CHECK(circular_distance(1.0, 2.0) == doctest::Approx(1.0));
}

TEST_CASE("unwrap_sequence lifts a wrapped ramp") {
  std::vector<double> wrapped;
  for (int k = 0; k <= 100; ++k) wrapped.push_back(wrap_pi(0.1 * k));
  const auto lifted = unwrap_sequence(wrapped);
  for (int k = 0; k <= 100; ++k) {
    CHECK(lifted[k] == doctest::Approx(0.1 * k).epsilon(1e-12));
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oscillator.hpp"

using namespace atcpg;

TEST_CASE("phase wraps around the circle") {
  OscillatorState s;
  s.phase = 6.2;
  s.omega = 0.2;
  OscillatorState next = advance(s, 0.0);
  CHECK(next.phase ==
        doctest::Approx(6.4 - 2.0 * std::numbers::pi).epsilon(1e-12));
  CHECK(next.omega == 0.2);
}

TEST_CASE("velocity clips at both rails") {
  OscillatorState s;
  s.omega = 0.001;
  CHECK(advance(s, -10.0, 0.1).omega == 0.001);
  s.omega = 0.2;
  CHECK(advance(s, 1000.0, 0.1).omega == 0.2);
  s.omega = 0.05;
  CHECK(advance(s, 1.0, 0.1).omega == doctest::Approx(0.051).epsilon(1e-12));
}

TEST_CASE("state invariants survive a long noisy run") {
  RngStream rng(3);
  OscillatorState s = random_oscillator(rng);
  for (int i = 0; i < 5000; ++i) {
    s = advance(s, rng.uniform(-5.0, 5.0), 0.1);
    CHECK(s.phase >= 0.0);
    CHECK(s.phase < 2.0 * std::numbers::pi);
    CHECK(s.omega >= 0.001);
    CHECK(s.omega <= 0.2);
  }
}

TEST_CASE("coupling fixed points and the worked pair") {
  std::vector<double> equal = {1.3, 1.3, 1.3};
  CHECK(kuramoto_step(equal, 0.7) == equal);

  auto stepped = kuramoto_step({0.0, 2.0}, 0.5);
  CHECK(stepped[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(stepped[1] == doctest::Approx(1.5).epsilon(1e-12));

  std::vector<double> any = {0.2, 4.4, 2.9};
  CHECK(kuramoto_step(any, 0.0) == any);
}

TEST_CASE("coupling contracts the raw spread by at least (1 - lambda)") {
  RngStream rng(9);
  for (double lambda : {0.05, 0.1, 0.5, 1.0}) {
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<double> phases(5);
      for (double& p : phases) p = rng.uniform(0.0, 2.0 * std::numbers::pi);
      double before = phase_spread(phases);
      double after = phase_spread(kuramoto_step(phases, lambda));
      CHECK(after <= (1.0 - lambda) * before + 1e-12);
    }
  }
}

TEST_CASE("phase spread basics") {
  CHECK(phase_spread({1.7}) == 0.0);
  CHECK(phase_spread({0.5, 1.0, 3.0}) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK_THROWS(phase_spread({}));
}

TEST_CASE("coupling rejects invalid strengths and empty input") {
  CHECK_THROWS(kuramoto_step({}, 0.5));
  CHECK_THROWS(kuramoto_step({1.0}, -0.1));
  CHECK_THROWS(kuramoto_step({1.0}, 1.5));
}

TEST_CASE("circular mean handles a cluster straddling the seam") {
  // Two phases nearly equal on the circle but far apart as raw numbers.
  double lo = 0.1;
  double hi = 2.0 * std::numbers::pi - 0.1;
  auto raw = kuramoto_step({lo, hi}, 1.0);
  // Arithmetic mean lands at pi, tearing the cluster apart.
  CHECK(raw[0] == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  auto circ = kuramoto_step({lo, hi}, 1.0, true);
  // Circular mean recognises the cluster and collapses it near zero.
  CHECK(circ[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(circ[1] == doctest::Approx(0.0).epsilon(1e-9));
}

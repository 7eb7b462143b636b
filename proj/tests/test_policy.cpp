#include <doctest.h>

#include <cmath>

#include "policy.hpp"

using namespace atcpg;

namespace {

PolicyWeights only_fatigue(double bias, double w_fatigue) {
  PolicyWeights w;
  w.bias = bias;
  w.w_priority = 0.0;
  w.w_fatigue = w_fatigue;
  w.w_wellbeing = 0.0;
  w.w_performance = 0.0;
  w.w_phase = 0.0;
  w.w_kappa = 0.0;
  return w;
}

}  // namespace

TEST_CASE("interval prediction worked example") {
  TickContext s;
  s.fatigue = 5.0;
  PolicyConfig cfg;
  CHECK(predict_interval(only_fatigue(60.0, 29.7), s, cfg) ==
        doctest::Approx(208.5).epsilon(1e-12));
}

TEST_CASE("interval prediction clamps at both ends") {
  PolicyConfig cfg;
  TickContext s;
  CHECK(predict_interval(only_fatigue(5.0, 0.0), s, cfg) == 10.0);
  s.fatigue = 5.0;
  CHECK(predict_interval(only_fatigue(60.0, 100.0), s, cfg) == 300.0);
}

TEST_CASE("prediction is a pure function") {
  PolicyConfig cfg;
  TickContext s;
  s.priority = 0.4;
  s.fatigue = 1.2;
  s.kappa = 2.5;
  PolicyWeights w;
  CHECK(predict_interval(w, s, cfg) == predict_interval(w, s, cfg));
}

TEST_CASE("exploration gate follows wellbeing stability") {
  PolicyConfig cfg;
  TickContext s;
  CHECK(effective_epsilon(s, cfg) == doctest::Approx(0.2));
  s.wellbeing_delta_prev = 1.0;
  CHECK(effective_epsilon(s, cfg) == 0.0);
  s.wellbeing_delta_prev = -1.0;
  CHECK(effective_epsilon(s, cfg) == 0.0);
  s.wellbeing_delta_prev = 0.5;
  CHECK(effective_epsilon(s, cfg) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("exploration leaves the interval alone when gated off") {
  PolicyConfig cfg;
  TickContext s;
  s.wellbeing_delta_prev = 1.0; // eps_eff = 0
  RngStream rng(5);
  for (int i = 0; i < 100; ++i) {
    CHECK(apply_exploration(42.0, s, cfg, rng) == 42.0);
  }
}

TEST_CASE("exploration multiplier stays within its band and re-clamps") {
  PolicyConfig cfg;
  cfg.epsilon0 = 1.0; // always explore
  TickContext s;
  RngStream rng(6);
  for (int i = 0; i < 500; ++i) {
    double v = apply_exploration(60.0, s, cfg, rng);
    CHECK(v >= 30.0);
    CHECK(v <= 90.0);
  }
  for (int i = 0; i < 500; ++i) {
    double v = apply_exploration(250.0, s, cfg, rng);
    CHECK(v <= 300.0);
    CHECK(v >= 125.0);
  }
}

TEST_CASE("weight update worked examples") {
  PolicyConfig cfg;
  TickContext s;
  s.fatigue = 5.0;
  PolicyWeights w = only_fatigue(60.0, 30.0);
  PolicyWeights down = update_weights(w, -0.6, s, cfg);
  CHECK(down.w_fatigue == doctest::Approx(29.7).epsilon(1e-12));
  PolicyWeights up = update_weights(w, 0.440, s, cfg);
  CHECK(up.w_fatigue == doctest::Approx(30.22).epsilon(1e-12));
  PolicyWeights same = update_weights(w, 0.0, s, cfg);
  CHECK(same.w_fatigue == 30.0);
  CHECK(same.bias == 60.0);
}

TEST_CASE("weights never escape the clip box") {
  PolicyConfig cfg;
  TickContext s;
  s.priority = 1.0;
  s.fatigue = 5.0;
  s.kappa = 10.0;
  PolicyWeights w;
  for (int i = 0; i < 100; ++i) w = update_weights(w, 50.0, s, cfg);
  CHECK(w.bias == 100.0);
  CHECK(w.w_fatigue == 100.0);
  CHECK(w.w_kappa == 100.0);
  for (int i = 0; i < 200; ++i) w = update_weights(w, -50.0, s, cfg);
  CHECK(w.bias == -100.0);
  CHECK(w.w_kappa == -100.0);
}

TEST_CASE("credit assignment direction at the update level") {
  PolicyConfig cfg;
  TickContext s;
  s.fatigue = 5.0;
  PolicyWeights w = only_fatigue(60.0, 30.0);
  // Outcome-only signal under overload punishes the fatigue weight; the
  // interval-aware signal from the same scenario rewards it.
  CHECK(update_weights(w, 2.0 * -0.3, s, cfg).w_fatigue < 30.0);
  CHECK(update_weights(w, 0.440, s, cfg).w_fatigue > 30.0);
}

TEST_CASE("interval responds monotonically to spread") {
  PolicyConfig cfg;
  PolicyWeights w;
  w.w_kappa = -30.0;
  TickContext s;
  double prev = 1e9;
  for (double kappa : {0.0, 0.2, 0.5, 1.0, 1.5}) {
    s.kappa = kappa;
    double dt = predict_interval(w, s, cfg);
    CHECK(dt <= prev);
    prev = dt;
  }
}

TEST_CASE("exact reinforce variant") {
  PolicyConfig cfg;
  TickContext s;
  s.fatigue = 1.0;
  PolicyWeights w;
  PolicyWeights same =
      update_weights_exact_reinforce(w, 1.0, s, 60.0, 60.0, 2.0, cfg);
  CHECK(same.w_fatigue == w.w_fatigue);
  CHECK(same.bias == w.bias);

  // Deviation equal to sigma^2 makes the extra factor 1, matching the
  // direct rule.
  PolicyWeights a =
      update_weights_exact_reinforce(w, 1.0, s, 64.0, 60.0, 2.0, cfg);
  PolicyWeights b = update_weights(w, 1.0, s, cfg);
  CHECK(a.w_fatigue == doctest::Approx(b.w_fatigue).epsilon(1e-14));
  CHECK(a.bias == doctest::Approx(b.bias).epsilon(1e-14));

  CHECK_THROWS(update_weights_exact_reinforce(w, 1.0, s, 61.0, 60.0, 0.0, cfg));
  CHECK_THROWS(
      update_weights_exact_reinforce(w, 1.0, s, 61.0, 60.0, -1.0, cfg));
}

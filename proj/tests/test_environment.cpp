#include <doctest.h>

#include <cmath>
#include <vector>

#include "environment.hpp"
#include "geometry.hpp"
#include "spread.hpp"

using namespace atcpg;

TEST_CASE("success rule") {
  EnvParams params;
  RngStream rng(1);
  params.overload_prob = 0.0;
  TickOutcome calm = step(params, 0.2, rng);
  CHECK(calm.success);
  params.overload_prob = 1.0;
  TickOutcome busy_low = step(params, 0.5, rng);
  CHECK_FALSE(busy_low.success);
  TickOutcome busy_high = step(params, 0.9, rng);
  CHECK(busy_high.success);
}

TEST_CASE("step validates priority") {
  EnvParams params;
  RngStream rng(2);
  CHECK_THROWS(step(params, -0.1, rng));
  CHECK_THROWS(step(params, 1.1, rng));
}

TEST_CASE("overloaded latency centres on 200 minus the priority rebate") {
  EnvParams params;
  params.overload_prob = 1.0;
  RngStream rng(3);
  double sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) sum += step(params, 0.5, rng).latency_ms;
  CHECK(sum / n == doctest::Approx(200.0 - 30.0 * 0.5).epsilon(0.01));
}

TEST_CASE("latency never drops below one millisecond") {
  EnvParams params;
  params.d_base_normal = 2.0;
  params.d_std = 50.0;
  params.overload_prob = 0.0;
  RngStream rng(4);
  for (int i = 0; i < 5000; ++i) {
    CHECK(step(params, 1.0, rng).latency_ms >= 1.0);
  }
}

TEST_CASE("shared trajectories are a pure function of the seed") {
  EnvParams params;
  SharedTrajectory a = generate_shared_trajectory(params, 7, 100, true);
  SharedTrajectory b = generate_shared_trajectory(params, 7, 100, true);
  CHECK(a.to_json() == b.to_json());
  SharedTrajectory c = generate_shared_trajectory(params, 8, 100, true);
  CHECK(a.to_json() != c.to_json());
}

TEST_CASE("trajectory json round-trips losslessly") {
  EnvParams params;
  SharedTrajectory a = generate_shared_trajectory(params, 42, 50, true);
  SharedTrajectory b = SharedTrajectory::from_json(a.to_json());
  CHECK(a.to_json() == b.to_json());
  CHECK(b.ticks.size() == 50);
  CHECK(b.with_positions);
}

TEST_CASE("overload prevalence concentrates near its rate") {
  EnvParams params;
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    SharedTrajectory t = generate_shared_trajectory(params, seed, 500, false);
    int count = 0;
    for (const TickDraws& d : t.ticks) count += d.overload ? 1 : 0;
    double frac = count / 500.0;
    CHECK(frac >= 0.24);
    CHECK(frac <= 0.36);
  }
}

TEST_CASE("privileged spread separates the regimes by an order of magnitude") {
  EnvParams params;
  RngStream rng(5);
  double over = 0.0;
  double norm = 0.0;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    over += tc_spread(params, true, rng);
    norm += tc_spread(params, false, rng);
    CHECK(over >= 0.0);
  }
  over /= n;
  norm /= n;
  CHECK(over == doctest::Approx(2.0).epsilon(0.02));
  CHECK(norm == doctest::Approx(0.1).epsilon(0.05));
  CHECK(over / norm >= 10.0);
  CHECK(over / norm <= 40.0);
}

TEST_CASE("noiseless futures collapse the spread to zero") {
  EnvParams params;
  RngStream rng(6);
  std::array<double, 6> context = {0.5, 1.0, 0.0, 0.8, 0.3, 1.2};
  auto futures = blind_futures(context, 4, 0.0, false, params, false, rng);
  REQUIRE(futures.size() == 4);
  EmbeddingConfig ecfg;
  std::vector<PoincarePoint> pts;
  for (const auto& f : futures) pts.push_back(embed_state(f.state, ecfg));
  CHECK(predictive_spread(pts).kappa <= 1e-12);
}

TEST_CASE("blind futures require at least two samples") {
  EnvParams params;
  RngStream rng(7);
  std::array<double, 6> context{};
  CHECK_THROWS(blind_futures(context, 1, 0.1, false, params, false, rng));
}

TEST_CASE("position norms under load dominate calm ones") {
  EnvParams params;
  RngStream rng(8);
  double over = 0.0;
  double norm = 0.0;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    over += vec_norm(gen_position(params, true, rng));
    norm += vec_norm(gen_position(params, false, rng));
  }
  CHECK(over / norm >= 10.0);
  CHECK(over / norm <= 20.0);
}

TEST_CASE("live environment keeps wellbeing and fatigue in range") {
  EnvParams params;
  Environment env(params, 12);
  double clock_expect = 0.0;
  for (int t = 0; t < 1000; ++t) {
    auto in = env.begin_tick(t == 0 ? 0.0 : 30.0);
    CHECK(in.priority >= 0.0);
    CHECK(in.priority <= 1.0);
    CHECK(in.fatigue >= 0.0);
    CHECK(in.fatigue <= params.fatigue_max);
    TickOutcome out = env.resolve_tick(30.0);
    clock_expect += 30.0;
    CHECK(out.wellbeing >= 0.0);
    CHECK(out.wellbeing <= 1.0);
    CHECK(out.latency_ms >= 1.0);
  }
  CHECK(env.clock_seconds() == doctest::Approx(clock_expect));
  CHECK(env.tick_index() == 1000);
}

TEST_CASE("realised wellbeing deltas respect the clamp") {
  EnvParams params;
  params.dwb_mean_normal = 0.5; // force the accumulator against the ceiling
  Environment env(params, 13);
  double prev = env.wellbeing();
  for (int t = 0; t < 200; ++t) {
    env.begin_tick(60.0);
    TickOutcome out = env.resolve_tick(60.0);
    CHECK(out.wellbeing_delta == doctest::Approx(out.wellbeing - prev));
    CHECK(out.wellbeing <= 1.0);
    prev = out.wellbeing;
  }
}

TEST_CASE("replay mode pins every draw including fatigue") {
  EnvParams params;
  SharedTrajectory traj = generate_shared_trajectory(params, 21, 40, false);

  Environment fast(params, &traj);
  Environment slow(params, &traj);
  for (int t = 0; t < 40; ++t) {
    auto in_fast = fast.begin_tick(10.0);
    auto in_slow = slow.begin_tick(300.0);
    CHECK(in_fast.priority == in_slow.priority);
    CHECK(in_fast.fatigue == in_slow.fatigue);
    TickOutcome a = fast.resolve_tick(10.0);
    TickOutcome b = slow.resolve_tick(300.0);
    CHECK(a.overload == b.overload);
    CHECK(a.latency_ms == b.latency_ms);
    CHECK(a.wellbeing_delta == b.wellbeing_delta);
    CHECK(a.success == b.success);
  }
}

TEST_CASE("replay without positions rejects spatial futures") {
  EnvParams params;
  SharedTrajectory traj = generate_shared_trajectory(params, 22, 5, false);
  Environment env(params, &traj);
  env.begin_tick(0.0);
  std::array<double, 6> context{};
  CHECK_THROWS(env.futures(context, true));
}

TEST_CASE("futures noise grows with fatigue") {
  EnvParams params;
  params.overload_prob = 1.0; // maximal fatigue accrual
  Environment tired(params, 30);
  params.overload_prob = 0.0;
  Environment rested(params, 30);
  std::array<double, 6> context = {0.5, 0.0, 0.0, 0.5, 0.0, 1.0};

  auto spread_of = [&](Environment& env) {
    double acc = 0.0;
    EmbeddingConfig ecfg;
    for (int t = 0; t < 200; ++t) {
      env.begin_tick(t == 0 ? 0.0 : 60.0);
      auto futures = env.futures(context, false);
      std::vector<PoincarePoint> pts;
      for (const auto& f : futures) pts.push_back(embed_state(f.state, ecfg));
      acc += predictive_spread(pts).kappa;
      env.resolve_tick(60.0);
    }
    return acc / 200.0;
  };

  CHECK(spread_of(tired) > 1.5 * spread_of(rested));
}

#include "pacing_loop.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "spread.hpp"

namespace atcpg {

namespace {

// One agent's mutable loop state, pulled out so the multi-agent runner can
// interleave agents tick by tick.
struct AgentLoop {
  RunSpec spec;
  Environment env;
  PolicyWeights weights;
  OscillatorState osc;
  RngStream explore_rng;
  double dwb_prev = 0.0;
  double kappa_prev = 0.0;
  double success_sum = 0.5; // running-mean prior: one pseudo-tick at 0.5
  double success_count = 1.0;
  double dt_prev = 0.0;
  RunTrace trace;

  AgentLoop(const RunSpec& s, const SharedTrajectory* trajectory)
      : spec(s),
        env(trajectory != nullptr ? Environment(s.env, trajectory)
                                  : Environment(s.env, s.seed)),
        weights(s.initial_weights),
        explore_rng(RngStream::derive(s.seed, 0x706f6c)) {
    if (spec.variant.kind == ControllerKind::AtcpgSpatioTemporal &&
        spec.env.pos_dim < 1) {
      throw std::invalid_argument(
          "spatio-temporal controller needs positions enabled");
    }
    RngStream osc_rng = RngStream::derive(s.seed, 0x6f7363);
    osc = random_oscillator(osc_rng);
  }

  double compute_kappa(const std::array<double, 6>& futures_context) {
    const ControllerVariant& v = spec.variant;
    if (v.ablations.no_spread || v.kind == ControllerKind::Fixed) {
      return 0.0;
    }
    if (v.kind == ControllerKind::TCPrivileged) {
      return env.tc_kappa();
    }
    const bool spatial = v.kind == ControllerKind::AtcpgSpatioTemporal;
    auto samples =
        env.futures(futures_context, spatial, spatial && spec.zero_positions);
    std::vector<PoincarePoint> points;
    points.reserve(samples.size());
    for (const FutureSample& s : samples) {
      points.push_back(spatial ? embed_joint(s, spec.embedding)
                               : embed_state(s.state, spec.embedding));
    }
    return predictive_spread(points, spec.geometry).kappa;
  }

  // Algorithm steps for one tick; returns the trace row.
  TickRecord tick(int index) {
    const ControllerVariant& v = spec.variant;
    Environment::TickInputs in = env.begin_tick(dt_prev);
    const double rho = success_sum / success_count;
    std::array<double, 6> futures_context = {in.priority,
                                             in.fatigue,
                                             dwb_prev,
                                             rho,
                                             std::sin(osc.phase),
                                             kappa_prev};
    const double kappa = compute_kappa(futures_context);

    TickContext s;
    s.priority = in.priority;
    s.fatigue = in.fatigue;
    s.wellbeing_delta_prev = dwb_prev;
    s.performance = rho;
    s.sin_phase = std::sin(osc.phase);
    s.kappa = kappa;

    double interval;
    if (v.kind == ControllerKind::Fixed) {
      interval = spec.policy.dt_base;
    } else {
      interval = predict_interval(weights, s, spec.policy);
      if (!v.ablations.no_exploration) {
        interval = apply_exploration(interval, s, spec.policy, explore_rng);
      }
    }

    TickOutcome out = env.resolve_tick(interval);

    RewardBreakdown reward;
    if (v.ablations.naive_reward) {
      reward.total = naive_reward(out.wellbeing_delta, out.latency_ms);
    } else {
      reward = interval_aware_reward(out.wellbeing_delta, kappa, interval,
                                     spec.reward);
    }

    if (!v.ablations.no_learning && v.kind != ControllerKind::Fixed) {
      weights = update_weights(weights, reward.total, s, spec.policy);
    }
    osc = advance(osc, reward.total, spec.policy.alpha);

    dwb_prev = out.wellbeing_delta;
    kappa_prev = kappa;
    success_sum += out.success ? 1.0 : 0.0;
    success_count += 1.0;
    dt_prev = interval;

    TickRecord rec;
    rec.tick = index;
    rec.context = {s.priority, s.fatigue,   s.wellbeing_delta_prev,
                   s.performance, s.sin_phase, s.kappa};
    rec.kappa = kappa;
    rec.interval = interval;
    rec.latency_ms = out.latency_ms;
    rec.overload = out.overload;
    rec.success = out.success;
    rec.wellbeing = out.wellbeing;
    rec.wellbeing_delta = out.wellbeing_delta;
    rec.reward = reward;
    rec.weights_hash = hash_weights(weights);
    rec.phase = osc.phase;
    return rec;
  }
};

}  // namespace

std::pair<RunResult, RunTrace> run_single(const RunSpec& spec,
                                          const SharedTrajectory* trajectory) {
  if (spec.ticks < 1) {
    throw std::invalid_argument("run needs at least one tick");
  }
  AgentLoop loop(spec, trajectory);
  loop.trace.ticks.reserve(spec.ticks);
  for (int t = 0; t < spec.ticks; ++t) {
    loop.trace.ticks.push_back(loop.tick(t));
  }
  return {summarize(loop.trace), std::move(loop.trace)};
}

HeadToHeadResult run_headtohead(const RunSpec& base, std::uint64_t seed,
                                int ticks) {
  SharedTrajectory traj =
      generate_shared_trajectory(base.env, seed, ticks, false);
  RunSpec tc = base;
  tc.variant = {ControllerKind::TCPrivileged, {}};
  tc.seed = seed;
  tc.ticks = ticks;
  RunSpec blind = tc;
  blind.variant = {ControllerKind::AtcpgStateOnly, {}};
  HeadToHeadResult r;
  std::tie(r.tc, r.tc_trace) = run_single(tc, &traj);
  std::tie(r.atcpg, r.atcpg_trace) = run_single(blind, &traj);
  return r;
}

SpatialResult run_spatial_ablation(const RunSpec& base, std::uint64_t seed,
                                   int ticks) {
  SharedTrajectory traj =
      generate_shared_trajectory(base.env, seed, ticks, true);
  RunSpec so = base;
  so.variant = {ControllerKind::AtcpgStateOnly, {}};
  so.seed = seed;
  so.ticks = ticks;
  so.zero_positions = false;
  RunSpec st = so;
  st.variant = {ControllerKind::AtcpgSpatioTemporal, {}};
  RunSpec st_zero = st;
  st_zero.zero_positions = true;
  SpatialResult r;
  std::tie(r.state_only, r.state_only_trace) = run_single(so, &traj);
  std::tie(r.spatio_temporal, r.spatio_temporal_trace) =
      run_single(st, &traj);
  std::tie(r.spatio_temporal_decorrelated,
           r.spatio_temporal_decorrelated_trace) = run_single(st_zero, &traj);
  r.gap_correlated =
      std::abs(r.spatio_temporal.efficiency - r.state_only.efficiency);
  r.gap_decorrelated = std::abs(
      r.spatio_temporal_decorrelated.efficiency - r.state_only.efficiency);
  return r;
}

MultiAgentResult run_multi_agent(const RunSpec& base, int n_agents,
                                 double lambda, int ticks,
                                 std::uint64_t seed) {
  if (n_agents < 2) {
    throw std::invalid_argument("multi-agent run needs at least two agents");
  }
  auto make_agents = [&]() {
    std::vector<AgentLoop> agents;
    agents.reserve(n_agents);
    for (int i = 0; i < n_agents; ++i) {
      RunSpec s = base;
      s.seed = mix64(seed + 0x9e3779b97f4a7c15ull * (i + 1));
      agents.emplace_back(s, nullptr);
    }
    return agents;
  };

  auto run = [&](bool coupled) {
    std::vector<AgentLoop> agents = make_agents();
    for (int t = 0; t < ticks; ++t) {
      for (AgentLoop& a : agents) {
        a.trace.ticks.push_back(a.tick(t));
      }
      if (coupled) {
        std::vector<double> phases;
        phases.reserve(agents.size());
        for (const AgentLoop& a : agents) phases.push_back(a.osc.phase);
        phases = kuramoto_step(phases, lambda);
        for (std::size_t i = 0; i < agents.size(); ++i) {
          agents[i].osc.phase = phases[i];
        }
      }
    }
    std::vector<double> phases;
    phases.reserve(agents.size());
    for (const AgentLoop& a : agents) phases.push_back(a.osc.phase);
    std::vector<RunResult> results;
    std::vector<RunTrace> traces;
    results.reserve(agents.size());
    traces.reserve(agents.size());
    for (AgentLoop& a : agents) {
      results.push_back(summarize(a.trace));
      traces.push_back(std::move(a.trace));
    }
    return std::make_tuple(phase_spread(phases), std::move(results),
                           std::move(traces));
  };

  MultiAgentResult r;
  std::tie(r.coupled_spread, r.coupled_agents, r.coupled_traces) = run(true);
  std::tie(r.uncoupled_spread, r.uncoupled_agents, r.uncoupled_traces) =
      run(false);
  return r;
}

}  // namespace atcpg

#include "experiments.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "spread.hpp"

namespace atcpg {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Shortest representation that parses back to the identical double, so any
// statistic recomputed from an emitted CSV matches the summary exactly.
std::string fmt(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::uint64_t v) { return std::to_string(v); }
std::string fmt(bool v) { return v ? "1" : "0"; }

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot create output file: " + path.string());
  }
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory: " +
                             dir.string() +
                             (ec ? ": " + ec.message() : std::string{}));
  }
}

constexpr const char* kTraceHeader =
    "tick,ctx_priority,ctx_fatigue,ctx_dwb_prev,ctx_performance,"
    "ctx_sin_phase,ctx_kappa,kappa,interval_s,latency_ms,overload,success,"
    "wellbeing,wellbeing_delta,reward_total,reward_efficiency,"
    "reward_spacing,reward_spread,phase,weights_hash";

void write_trace_csv(const fs::path& path, const RunTrace& trace) {
  std::ofstream out = open_out(path);
  out << kTraceHeader << "\n";
  for (const TickRecord& t : trace.ticks) {
    out << fmt(t.tick) << ',' << fmt(t.context[0]) << ',' << fmt(t.context[1])
        << ',' << fmt(t.context[2]) << ',' << fmt(t.context[3]) << ','
        << fmt(t.context[4]) << ',' << fmt(t.context[5]) << ','
        << fmt(t.kappa) << ',' << fmt(t.interval) << ',' << fmt(t.latency_ms)
        << ',' << fmt(t.overload) << ',' << fmt(t.success) << ','
        << fmt(t.wellbeing) << ',' << fmt(t.wellbeing_delta) << ','
        << fmt(t.reward.total) << ',' << fmt(t.reward.efficiency_term) << ','
        << fmt(t.reward.spacing_term) << ',' << fmt(t.reward.spread_term)
        << ',' << fmt(t.phase) << ',' << fmt(t.weights_hash) << "\n";
  }
}

json result_json(const RunResult& r) {
  return json{
      {"efficiency", r.efficiency},
      {"performance_score", r.performance_score},
      {"wellbeing_std", r.wellbeing_std},
      {"mean_interval", r.mean_interval},
      {"kappa_mean_overload", r.kappa_mean_overload},
      {"kappa_mean_normal", r.kappa_mean_normal},
      {"kappa_discriminability", r.kappa_discriminability},
      {"total_ticks", r.total_ticks},
  };
}

RunResult mean_result(const std::vector<RunResult>& rs) {
  RunResult m;
  if (rs.empty()) return m;
  for (const RunResult& r : rs) {
    m.efficiency += r.efficiency;
    m.performance_score += r.performance_score;
    m.wellbeing_std += r.wellbeing_std;
    m.mean_interval += r.mean_interval;
    m.kappa_mean_overload += r.kappa_mean_overload;
    m.kappa_mean_normal += r.kappa_mean_normal;
    m.kappa_discriminability += r.kappa_discriminability;
    m.total_ticks += r.total_ticks;
  }
  double n = static_cast<double>(rs.size());
  m.efficiency /= n;
  m.performance_score /= n;
  m.wellbeing_std /= n;
  m.mean_interval /= n;
  m.kappa_mean_overload /= n;
  m.kappa_mean_normal /= n;
  m.kappa_discriminability /= n;
  m.total_ticks = rs.front().total_ticks;
  return m;
}

double mean_kappa(const RunTrace& trace) {
  if (trace.ticks.empty()) return 0.0;
  double sum = 0.0;
  for (const TickRecord& t : trace.ticks) sum += t.kappa;
  return sum / static_cast<double>(trace.ticks.size());
}

RunSpec make_run_spec(const ExperimentConfig& cfg) {
  RunSpec spec;
  spec.variant = cfg.variant;
  spec.env = cfg.env;
  spec.policy = cfg.policy;
  spec.reward = cfg.reward;
  spec.embedding = cfg.embedding;
  spec.geometry = cfg.geometry;
  spec.initial_weights = cfg.initial_weights;
  spec.ticks = cfg.ticks;
  return spec;
}

json summary_skeleton(const ExperimentConfig& cfg) {
  return json{
      {"schema_version", 1},
      {"experiment", experiment_name(cfg.experiment)},
      {"config", json::parse(config_to_json(cfg))},
  };
}

// Output paths are collected summary-first so callers can print the most
// useful file on top.
struct Suite {
  const ExperimentConfig& cfg;
  fs::path dir;
  std::vector<std::string> summaries;
  std::vector<std::string> traces;

  explicit Suite(const ExperimentConfig& c) : cfg(c), dir(c.output_dir) {
    ensure_dir(dir);
  }

  fs::path trace_path(const std::string& stem) {
    fs::path p = dir / ("trace_" + stem + ".csv");
    traces.push_back(p.string());
    return p;
  }

  void write_summary_json(const json& j) {
    fs::path p =
        dir / (std::string(experiment_name(cfg.experiment)) + "_summary.json");
    open_out(p) << j.dump(2) << "\n";
    summaries.insert(summaries.begin(), p.string());
  }

  std::ofstream summary_csv(std::string* path_out = nullptr) {
    fs::path p =
        dir / (std::string(experiment_name(cfg.experiment)) + "_summary.csv");
    summaries.push_back(p.string());
    if (path_out) *path_out = p.string();
    return open_out(p);
  }

  std::vector<std::string> files() && {
    summaries.insert(summaries.end(), traces.begin(), traces.end());
    return std::move(summaries);
  }
};

constexpr const char* kResultColumns =
    "eta,performance,mean_interval,wellbeing_std,kappa_overload,"
    "kappa_normal,kappa_discriminability";

std::string result_csv(const RunResult& r) {
  return fmt(r.efficiency) + ',' + fmt(r.performance_score) + ',' +
         fmt(r.mean_interval) + ',' + fmt(r.wellbeing_std) + ',' +
         fmt(r.kappa_mean_overload) + ',' + fmt(r.kappa_mean_normal) + ',' +
         fmt(r.kappa_discriminability);
}

std::vector<std::string> run_ablation(const ExperimentConfig& cfg) {
  Suite suite(cfg);

  struct Row {
    const char* name;
    ControllerVariant variant;
    const std::vector<std::uint64_t>* seeds;
  };
  ControllerVariant full{ControllerKind::AtcpgStateOnly, {}};
  ControllerVariant no_learning{ControllerKind::Fixed, {}};
  ControllerVariant no_spread{ControllerKind::AtcpgStateOnly,
                              {false, true, false, false}};
  ControllerVariant naive{ControllerKind::AtcpgStateOnly,
                          {false, false, true, false}};
  ControllerVariant no_expl{ControllerKind::AtcpgStateOnly,
                            {false, false, false, true}};
  ControllerVariant fixed{ControllerKind::Fixed, {}};
  const Row rows[] = {
      {"full", full, &cfg.seeds},
      {"no_learning", no_learning, &cfg.seeds},
      {"no_spread", no_spread, &cfg.seeds},
      {"naive_reward", naive, &cfg.seeds},
      {"no_exploration", no_expl, &cfg.seeds},
      {"fixed_interval", fixed, &cfg.baseline_seeds},
  };

  json jrows = json::array();
  std::vector<RunResult> aggregates;
  for (const Row& row : rows) {
    std::vector<RunResult> per_seed;
    json jseeds = json::array();
    for (std::uint64_t seed : *row.seeds) {
      RunSpec spec = make_run_spec(cfg);
      spec.variant = row.variant;
      spec.seed = seed;
      auto [result, trace] = run_single(spec);
      write_trace_csv(suite.trace_path(std::string(row.name) + "_seed" +
                                       std::to_string(seed)),
                      trace);
      per_seed.push_back(result);
      jseeds.push_back(result_json(result));
    }
    aggregates.push_back(mean_result(per_seed));
    jrows.push_back(json{{"variant", row.name},
                         {"n_seeds", row.seeds->size()},
                         {"aggregate", result_json(aggregates.back())},
                         {"per_seed", jseeds}});
  }

  double eta_full = aggregates.front().efficiency;
  std::ofstream csv = suite.summary_csv();
  csv << "variant,n_seeds,ticks,drop_vs_full_pct," << kResultColumns << "\n";
  for (std::size_t i = 0; i < std::size(rows); ++i) {
    double drop = eta_full > 0.0
                      ? 100.0 * (eta_full - aggregates[i].efficiency) / eta_full
                      : 0.0;
    jrows[i]["drop_vs_full_pct"] = drop;
    csv << rows[i].name << ',' << rows[i].seeds->size() << ','
        << fmt(cfg.ticks) << ',' << fmt(drop) << ','
        << result_csv(aggregates[i]) << "\n";
  }
  csv.close();

  double eta_fixed = aggregates.back().efficiency;
  json summary = summary_skeleton(cfg);
  summary["rows"] = jrows;
  summary["full_vs_fixed_advantage_pct"] =
      eta_fixed > 0.0 ? 100.0 * (eta_full / eta_fixed - 1.0) : 0.0;
  suite.write_summary_json(summary);
  return std::move(suite).files();
}

std::vector<std::string> run_headtohead_suite(const ExperimentConfig& cfg) {
  Suite suite(cfg);
  json jruns = json::array();
  std::ofstream csv = suite.summary_csv();
  csv << "controller,seed,ticks," << kResultColumns << "\n";
  for (std::uint64_t seed : cfg.seeds) {
    HeadToHeadResult r = run_headtohead(make_run_spec(cfg), seed, cfg.ticks);
    write_trace_csv(
        suite.trace_path("tc_privileged_seed" + std::to_string(seed)),
        r.tc_trace);
    write_trace_csv(
        suite.trace_path("atcpg_blind_seed" + std::to_string(seed)),
        r.atcpg_trace);
    csv << "tc_privileged," << fmt(seed) << ',' << fmt(cfg.ticks) << ','
        << result_csv(r.tc) << "\n";
    csv << "atcpg_blind," << fmt(seed) << ',' << fmt(cfg.ticks) << ','
        << result_csv(r.atcpg) << "\n";
    jruns.push_back(json{
        {"seed", seed},
        {"tc_privileged", result_json(r.tc)},
        {"atcpg_blind", result_json(r.atcpg)},
        {"eta_advantage_pct",
         r.tc.efficiency > 0.0
             ? 100.0 * (r.atcpg.efficiency / r.tc.efficiency - 1.0)
             : 0.0},
    });
  }
  csv.close();
  json summary = summary_skeleton(cfg);
  summary["runs"] = jruns;
  suite.write_summary_json(summary);
  return std::move(suite).files();
}

std::vector<std::string> run_spatial_suite(const ExperimentConfig& cfg) {
  Suite suite(cfg);
  json jruns = json::array();
  std::ofstream csv = suite.summary_csv();
  csv << "variant,seed,ticks,kappa_mean," << kResultColumns << "\n";
  for (std::uint64_t seed : cfg.seeds) {
    SpatialResult r = run_spatial_ablation(make_run_spec(cfg), seed, cfg.ticks);
    const struct {
      const char* name;
      const RunResult* result;
      const RunTrace* trace;
    } rows[] = {
        {"state_only", &r.state_only, &r.state_only_trace},
        {"spatio_temporal", &r.spatio_temporal, &r.spatio_temporal_trace},
        {"spatio_temporal_decorrelated", &r.spatio_temporal_decorrelated,
         &r.spatio_temporal_decorrelated_trace},
    };
    json jrow{{"seed", seed},
              {"gap_correlated", r.gap_correlated},
              {"gap_decorrelated", r.gap_decorrelated}};
    for (const auto& row : rows) {
      write_trace_csv(suite.trace_path(std::string(row.name) + "_seed" +
                                       std::to_string(seed)),
                      *row.trace);
      csv << row.name << ',' << fmt(seed) << ',' << fmt(cfg.ticks) << ','
          << fmt(mean_kappa(*row.trace)) << ',' << result_csv(*row.result)
          << "\n";
      jrow[row.name] = result_json(*row.result);
      jrow[row.name]["kappa_mean"] = mean_kappa(*row.trace);
    }
    jruns.push_back(jrow);
  }
  csv.close();
  json summary = summary_skeleton(cfg);
  summary["runs"] = jruns;
  suite.write_summary_json(summary);
  return std::move(suite).files();
}

std::vector<std::string> run_regimes_suite(const ExperimentConfig& cfg) {
  Suite suite(cfg);

  fs::path runs_path = suite.dir / "regimes_runs.csv";
  std::ofstream runs = open_out(runs_path);
  runs << "seed,regime,kappa,mean_radius,ratio_vs_confident\n";

  // regime index -> accumulated rows, preserving the fixed emission order
  // Conflicted, Confident, Noise.
  std::vector<std::vector<RegimeRow>> by_regime(3);
  for (std::uint64_t seed : cfg.seeds) {
    std::vector<RegimeRow> rows = run_regime_experiment(seed);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      runs << fmt(seed) << ',' << regime_name(rows[i].regime) << ','
           << fmt(rows[i].kappa) << ',' << fmt(rows[i].mean_radius) << ','
           << fmt(rows[i].ratio_vs_confident) << "\n";
      by_regime[i].push_back(rows[i]);
    }
  }
  runs.close();

  json jrows = json::array();
  std::ofstream csv = suite.summary_csv();
  csv << "regime,kappa,mean_radius,ratio_vs_confident\n";
  for (const std::vector<RegimeRow>& rows : by_regime) {
    double kappa = 0.0, radius = 0.0, ratio = 0.0;
    for (const RegimeRow& r : rows) {
      kappa += r.kappa;
      radius += r.mean_radius;
      ratio += r.ratio_vs_confident;
    }
    double n = static_cast<double>(rows.size());
    kappa /= n;
    radius /= n;
    ratio /= n;
    csv << regime_name(rows.front().regime) << ',' << fmt(kappa) << ','
        << fmt(radius) << ',' << fmt(ratio) << "\n";
    jrows.push_back(json{{"regime", regime_name(rows.front().regime)},
                         {"kappa", kappa},
                         {"mean_radius", radius},
                         {"ratio_vs_confident", ratio},
                         {"n_seeds", rows.size()}});
  }
  csv.close();

  json summary = summary_skeleton(cfg);
  summary["rows"] = jrows;
  suite.write_summary_json(summary);

  std::vector<std::string> files = std::move(suite).files();
  files.push_back(runs_path.string());
  return files;
}

std::vector<std::string> run_multiagent_suite(const ExperimentConfig& cfg) {
  Suite suite(cfg);
  json jruns = json::array();
  std::ofstream csv = suite.summary_csv();
  csv << "condition,seed,n_agents,lambda,ticks,phase_spread,mean_eta\n";
  for (std::uint64_t seed : cfg.seeds) {
    MultiAgentResult r =
        run_multi_agent(make_run_spec(cfg), cfg.multi_agent.n_agents,
                        cfg.multi_agent.lambda, cfg.ticks, seed);
    const struct {
      const char* name;
      double spread;
      const std::vector<RunResult>* agents;
      const std::vector<RunTrace>* traces;
    } conditions[] = {
        {"coupled", r.coupled_spread, &r.coupled_agents, &r.coupled_traces},
        {"uncoupled", r.uncoupled_spread, &r.uncoupled_agents,
         &r.uncoupled_traces},
    };
    json jrow{{"seed", seed},
              {"n_agents", cfg.multi_agent.n_agents},
              {"lambda", cfg.multi_agent.lambda}};
    for (const auto& c : conditions) {
      double mean_eta = 0.0;
      json jagents = json::array();
      for (std::size_t i = 0; i < c.agents->size(); ++i) {
        mean_eta += (*c.agents)[i].efficiency;
        jagents.push_back(result_json((*c.agents)[i]));
        write_trace_csv(
            suite.trace_path(std::string(c.name) + "_agent" +
                             std::to_string(i) + "_seed" +
                             std::to_string(seed)),
            (*c.traces)[i]);
      }
      mean_eta /= static_cast<double>(c.agents->size());
      csv << c.name << ',' << fmt(seed) << ','
          << fmt(cfg.multi_agent.n_agents) << ','
          << fmt(cfg.multi_agent.lambda) << ',' << fmt(cfg.ticks) << ','
          << fmt(c.spread) << ',' << fmt(mean_eta) << "\n";
      jrow[c.name] = json{{"phase_spread", c.spread},
                          {"mean_eta", mean_eta},
                          {"agents", jagents}};
    }
    jruns.push_back(jrow);
  }
  csv.close();
  json summary = summary_skeleton(cfg);
  summary["runs"] = jruns;
  suite.write_summary_json(summary);
  return std::move(suite).files();
}

std::vector<std::string> run_single_suite(const ExperimentConfig& cfg) {
  Suite suite(cfg);
  json jruns = json::array();
  std::ofstream csv = suite.summary_csv();
  csv << "seed,ticks,controller," << kResultColumns << "\n";
  for (std::uint64_t seed : cfg.seeds) {
    RunSpec spec = make_run_spec(cfg);
    spec.seed = seed;
    auto [result, trace] = run_single(spec);
    write_trace_csv(suite.trace_path("single_seed" + std::to_string(seed)),
                    trace);
    csv << fmt(seed) << ',' << fmt(cfg.ticks) << ',';
    switch (cfg.variant.kind) {
      case ControllerKind::Fixed:
        csv << "fixed";
        break;
      case ControllerKind::TCPrivileged:
        csv << "tc_privileged";
        break;
      case ControllerKind::AtcpgStateOnly:
        csv << "atcpg_state_only";
        break;
      case ControllerKind::AtcpgSpatioTemporal:
        csv << "atcpg_spatio_temporal";
        break;
    }
    csv << ',' << result_csv(result) << "\n";
    jruns.push_back(json{{"seed", seed}, {"result", result_json(result)}});
  }
  csv.close();
  json summary = summary_skeleton(cfg);
  summary["runs"] = jruns;
  suite.write_summary_json(summary);
  return std::move(suite).files();
}

}  // namespace

std::vector<std::string> run_suite(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentKind::Ablation:
      return run_ablation(cfg);
    case ExperimentKind::HeadToHead:
      return run_headtohead_suite(cfg);
    case ExperimentKind::Spatial:
      return run_spatial_suite(cfg);
    case ExperimentKind::Regimes:
      return run_regimes_suite(cfg);
    case ExperimentKind::MultiAgent:
      return run_multiagent_suite(cfg);
    case ExperimentKind::Single:
      return run_single_suite(cfg);
  }
  throw std::logic_error("unreachable experiment kind");
}

}  // namespace atcpg

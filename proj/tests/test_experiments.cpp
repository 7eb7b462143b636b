#include <doctest.h>

#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "experiments.hpp"

using namespace atcpg;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("atcpg_test_" + tag);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::istringstream in(slurp(p));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double to_double(const std::string& s) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(ec == std::errc());
  REQUIRE(end == s.data() + s.size());
  return v;
}

}  // namespace

TEST_CASE("a single run emits its trace, csv summary and json summary") {
  ExperimentConfig cfg = preset_config(ExperimentKind::Single);
  cfg.ticks = 40;
  fs::path dir = fresh_dir("single");
  cfg.output_dir = dir.string();

  std::vector<std::string> files = run_suite(cfg);
  REQUIRE(files.size() == 3);
  CHECK(files[0] == (dir / "single_summary.json").string());
  CHECK(files[1] == (dir / "single_summary.csv").string());
  CHECK(files[2] == (dir / "trace_single_seed1.csv").string());
  for (const std::string& f : files) CHECK(fs::exists(f));

  auto trace = read_csv(files[2]);
  CHECK(trace.size() == 41); // header plus one row per tick
  CHECK(trace[0][0] == "tick");
  CHECK(trace[0].size() == 20);

  auto summary = read_csv(files[1]);
  REQUIRE(summary.size() == 2);
  CHECK(summary[0] ==
        std::vector<std::string>{"seed", "ticks", "controller", "eta",
                                 "performance", "mean_interval",
                                 "wellbeing_std", "kappa_overload",
                                 "kappa_normal", "kappa_discriminability"});

  json j = json::parse(slurp(files[0]));
  CHECK(j["schema_version"] == 1);
  CHECK(j["experiment"] == "single");
  CHECK(j["config"]["ticks"] == 40);
  CHECK(j["runs"].size() == 1);
}

TEST_CASE("summary statistics are recomputable from the emitted trace") {
  ExperimentConfig cfg = preset_config(ExperimentKind::Single);
  cfg.ticks = 60;
  fs::path dir = fresh_dir("recompute");
  cfg.output_dir = dir.string();
  std::vector<std::string> files = run_suite(cfg);

  auto summary = read_csv(dir / "single_summary.csv");
  auto trace = read_csv(dir / "trace_single_seed1.csv");
  double eta_reported = to_double(summary[1][3]);
  double perf_reported = to_double(summary[1][4]);
  double dt_reported = to_double(summary[1][5]);

  // Column layout: 8 interval_s, 11 success.
  double eta = 0.0, perf = 0.0, dt = 0.0;
  int n = 0;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    double success = to_double(trace[i][11]);
    double interval = to_double(trace[i][8]);
    eta += success / interval;
    perf += success;
    dt += interval;
    ++n;
  }
  CHECK(eta / n == eta_reported);
  CHECK(perf / n == perf_reported);
  CHECK(dt / n == dt_reported);
}

TEST_CASE("reruns with the same config are byte-identical") {
  for (ExperimentKind k : {ExperimentKind::Single, ExperimentKind::Regimes,
                           ExperimentKind::MultiAgent}) {
    ExperimentConfig cfg = preset_config(k);
    cfg.ticks = 25;
    if (k == ExperimentKind::Regimes) cfg.seeds = {1, 2};

    fs::path dir = fresh_dir(std::string("rerun_") + experiment_name(k));
    cfg.output_dir = dir.string();
    std::vector<std::string> first = run_suite(cfg);
    std::vector<std::string> before;
    for (const std::string& f : first) before.push_back(slurp(f));

    std::vector<std::string> second = run_suite(cfg);
    REQUIRE(first == second);
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(slurp(second[i]) == before[i]);
    }
  }
}

TEST_CASE("the ablation suite emits all six rows") {
  ExperimentConfig cfg = preset_config(ExperimentKind::Ablation);
  cfg.ticks = 30;
  cfg.seeds = {1};
  cfg.baseline_seeds = {1, 2};
  fs::path dir = fresh_dir("ablation");
  cfg.output_dir = dir.string();
  run_suite(cfg);

  auto rows = read_csv(dir / "ablation_summary.csv");
  REQUIRE(rows.size() == 7);
  CHECK(rows[1][0] == "full");
  CHECK(rows[2][0] == "no_learning");
  CHECK(rows[3][0] == "no_spread");
  CHECK(rows[4][0] == "naive_reward");
  CHECK(rows[5][0] == "no_exploration");
  CHECK(rows[6][0] == "fixed_interval");
  CHECK(rows[6][1] == "2"); // its own seed set
  CHECK(to_double(rows[1][3]) == 0.0); // full's drop against itself

  CHECK(fs::exists(dir / "trace_full_seed1.csv"));
  CHECK(fs::exists(dir / "trace_fixed_interval_seed2.csv"));
  json j = json::parse(slurp(dir / "ablation_summary.json"));
  CHECK(j["rows"].size() == 6);
  CHECK(j["full_vs_fixed_advantage_pct"].is_number());
}

TEST_CASE("head-to-head rows share their performance score") {
  ExperimentConfig cfg = preset_config(ExperimentKind::HeadToHead);
  cfg.ticks = 50;
  fs::path dir = fresh_dir("hth");
  cfg.output_dir = dir.string();
  run_suite(cfg);

  auto rows = read_csv(dir / "headtohead_summary.csv");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "tc_privileged");
  CHECK(rows[2][0] == "atcpg_blind");
  CHECK(rows[1][4] == rows[2][4]); // same successes on the shared trajectory
  CHECK(fs::exists(dir / "trace_tc_privileged_seed42.csv"));
  CHECK(fs::exists(dir / "trace_atcpg_blind_seed42.csv"));
}

TEST_CASE("the spatial suite reports a zero decorrelated gap") {
  ExperimentConfig cfg = preset_config(ExperimentKind::Spatial);
  cfg.ticks = 40;
  fs::path dir = fresh_dir("spatial");
  cfg.output_dir = dir.string();
  run_suite(cfg);

  auto rows = read_csv(dir / "spatial_summary.csv");
  REQUIRE(rows.size() == 4);
  CHECK(rows[1][0] == "state_only");
  CHECK(rows[2][0] == "spatio_temporal");
  CHECK(rows[3][0] == "spatio_temporal_decorrelated");

  json j = json::parse(slurp(dir / "spatial_summary.json"));
  double corr = j["runs"][0]["gap_correlated"].get<double>();
  double decorr = j["runs"][0]["gap_decorrelated"].get<double>();
  CHECK(decorr == 0.0);
  CHECK(corr >= 0.0);
}

TEST_CASE("the regimes suite aggregates over its seeds") {
  ExperimentConfig cfg = preset_config(ExperimentKind::Regimes);
  cfg.seeds = {1, 2, 3};
  fs::path dir = fresh_dir("regimes");
  cfg.output_dir = dir.string();
  run_suite(cfg);

  auto summary = read_csv(dir / "regimes_summary.csv");
  REQUIRE(summary.size() == 4);
  CHECK(summary[1][0] == "Conflicted");
  CHECK(summary[2][0] == "Confident");
  CHECK(summary[3][0] == "Noise");
  CHECK(to_double(summary[1][1]) > to_double(summary[2][1]));
  CHECK(to_double(summary[2][1]) > to_double(summary[3][1]));

  auto runs = read_csv(dir / "regimes_runs.csv");
  CHECK(runs.size() == 10); // header + 3 seeds x 3 regimes
}

TEST_CASE("the multi-agent suite couples and uncouples the same agents") {
  ExperimentConfig cfg = preset_config(ExperimentKind::MultiAgent);
  cfg.ticks = 10;
  cfg.multi_agent.n_agents = 3;
  cfg.multi_agent.lambda = 0.0;
  fs::path dir = fresh_dir("multi");
  cfg.output_dir = dir.string();
  run_suite(cfg);

  auto rows = read_csv(dir / "multiagent_summary.csv");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "coupled");
  CHECK(rows[2][0] == "uncoupled");
  // lambda 0 means the coupling round is the identity.
  CHECK(rows[1][5] == rows[2][5]);
  CHECK(rows[1][6] == rows[2][6]);
  CHECK(fs::exists(dir / "trace_coupled_agent2_seed2.csv"));
  CHECK(fs::exists(dir / "trace_uncoupled_agent0_seed2.csv"));
}

TEST_CASE("an unwritable output directory fails loudly") {
  ExperimentConfig cfg = preset_config(ExperimentKind::Single);
  cfg.ticks = 5;
  cfg.output_dir = "/proc/version/not_a_dir";
  CHECK_THROWS_AS(run_suite(cfg), std::runtime_error);
}

#include "atcpg/atcpg.h"

#include <cstring>
#include <string>
#include <vector>

#include "config.hpp"
#include "experiments.hpp"
#include "geometry.hpp"
#include "reward.hpp"
#include "spread.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Every entry point funnels through here so status codes and the
// thread-local message always agree.
template <typename Fn>
atcpg_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return ATCPG_OK;
  } catch (const atcpg::ConfigError& e) {
    g_last_error = e.what();
    return ATCPG_ERR_CONFIG;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return ATCPG_ERR_ARG;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ATCPG_ERR_RUN;
  } catch (...) {
    g_last_error = "unknown error";
    return ATCPG_ERR_RUN;
  }
}

atcpg_status arg_error(const char* msg) {
  g_last_error = msg;
  return ATCPG_ERR_ARG;
}

atcpg::PoincarePoint project_raw(const double* v, size_t dim,
                                 double curvature) {
  atcpg::GeometryConfig g;
  return atcpg::project(std::vector<double>(v, v + dim), g.r_max, curvature);
}

}  // namespace

struct atcpg_config {
  atcpg::ExperimentConfig cfg;
};

extern "C" {

const char* atcpg_version(void) { return "1.0.0"; }

const char* atcpg_last_error(void) { return g_last_error.c_str(); }

atcpg_status atcpg_config_preset(const char* experiment, atcpg_config** out) {
  if (!experiment || !out) return arg_error("null argument");
  return guarded([&] {
    atcpg::ExperimentKind kind = atcpg::experiment_from_name(experiment);
    *out = new atcpg_config{atcpg::preset_config(kind)};
  });
}

atcpg_status atcpg_config_load(const char* path, atcpg_config** out) {
  if (!path || !out) return arg_error("null argument");
  return guarded([&] { *out = new atcpg_config{atcpg::load_config(path)}; });
}

atcpg_status atcpg_config_parse(const char* text, const char* source_name,
                                atcpg_config** out) {
  if (!text || !out) return arg_error("null argument");
  return guarded([&] {
    *out = new atcpg_config{atcpg::parse_config(
        text, source_name ? source_name : "<config>")};
  });
}

void atcpg_config_free(atcpg_config* cfg) { delete cfg; }

atcpg_status atcpg_config_set_output_dir(atcpg_config* cfg, const char* dir) {
  if (!cfg || !dir) return arg_error("null argument");
  if (*dir == '\0') return arg_error("output dir must not be empty");
  g_last_error.clear();
  cfg->cfg.output_dir = dir;
  return ATCPG_OK;
}

atcpg_status atcpg_config_set_seeds(atcpg_config* cfg, const uint64_t* seeds,
                                    size_t n_seeds) {
  if (!cfg || !seeds) return arg_error("null argument");
  if (n_seeds == 0) return arg_error("need at least one seed");
  g_last_error.clear();
  cfg->cfg.seeds.assign(seeds, seeds + n_seeds);
  return ATCPG_OK;
}

atcpg_status atcpg_config_set_ticks(atcpg_config* cfg, int ticks) {
  if (!cfg) return arg_error("null argument");
  if (ticks < 1) return arg_error("ticks must be >= 1");
  g_last_error.clear();
  cfg->cfg.ticks = ticks;
  return ATCPG_OK;
}

atcpg_status atcpg_config_to_json(const atcpg_config* cfg, char** out_text) {
  if (!cfg || !out_text) return arg_error("null argument");
  return guarded(
      [&] { *out_text = dup_string(atcpg::config_to_json(cfg->cfg)); });
}

void atcpg_string_free(char* text) { delete[] text; }

atcpg_status atcpg_run_suite(const atcpg_config* cfg, char** out_files) {
  if (!cfg) return arg_error("null argument");
  return guarded([&] {
    std::vector<std::string> files = atcpg::run_suite(cfg->cfg);
    if (out_files) {
      std::string joined;
      for (const std::string& f : files) {
        if (!joined.empty()) joined += "\n";
        joined += f;
      }
      *out_files = dup_string(joined);
    }
  });
}

atcpg_status atcpg_poincare_distance(const double* x, const double* y,
                                     size_t dim, double curvature,
                                     double* out_distance) {
  if (!x || !y || !out_distance) return arg_error("null argument");
  if (dim == 0) return arg_error("dim must be >= 1");
  if (!(curvature > 0.0)) return arg_error("curvature must be > 0");
  return guarded([&] {
    atcpg::GeometryConfig g;
    g.c = curvature;
    *out_distance = atcpg::poincare_distance(project_raw(x, dim, curvature),
                                             project_raw(y, dim, curvature),
                                             g);
  });
}

atcpg_status atcpg_predictive_spread(const double* futures, size_t n_futures,
                                     size_t dim, double curvature,
                                     double* out_kappa) {
  if (!futures || !out_kappa) return arg_error("null argument");
  if (n_futures == 0) return arg_error("need at least one future");
  if (dim == 0) return arg_error("dim must be >= 1");
  if (!(curvature > 0.0)) return arg_error("curvature must be > 0");
  return guarded([&] {
    std::vector<atcpg::PoincarePoint> points;
    points.reserve(n_futures);
    for (size_t i = 0; i < n_futures; ++i) {
      points.push_back(project_raw(futures + i * dim, dim, curvature));
    }
    atcpg::GeometryConfig g;
    g.c = curvature;
    *out_kappa = atcpg::predictive_spread(points, g).kappa;
  });
}

atcpg_status atcpg_interval_reward(double wellbeing_delta, double kappa,
                                   double interval_s, double* out_total) {
  if (!out_total) return arg_error("null argument");
  return guarded([&] {
    *out_total =
        atcpg::interval_aware_reward(wellbeing_delta, kappa, interval_s)
            .total;
  });
}

}  // extern "C"

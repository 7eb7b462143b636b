#include "environment.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace atcpg {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double decayed_fatigue(const EnvParams& p, double fatigue, double dt) {
  double keep = std::max(0.0, 1.0 - p.fatigue_decay * dt / p.dt_base);
  return fatigue * keep;
}

TickDraws draw_tick(const EnvParams& p, RngStream& rng, int state_dim,
                    bool with_positions) {
  TickDraws d;
  d.overload = rng.bernoulli(p.overload_prob);
  d.priority = rng.uniform();
  d.latency_unit = rng.normal();
  d.dwb_unit = rng.normal();
  d.tc_unit = rng.normal();
  d.future_noise.resize(static_cast<std::size_t>(p.n_futures) * state_dim);
  for (double& v : d.future_noise) v = rng.normal();
  if (with_positions) {
    d.future_pos.resize(static_cast<std::size_t>(p.n_futures) * p.pos_dim);
    for (double& v : d.future_pos) v = rng.normal();
  }
  return d;
}

double latency_from(const EnvParams& p, bool overload, double priority,
                    double unit) {
  double base = overload ? p.d_base_overload : p.d_base_normal;
  double d = base - p.priority_coeff * priority + p.d_std * unit;
  return std::max(d, 1.0);
}

double raw_dwb(const EnvParams& p, bool overload, double unit) {
  double mu = overload ? p.dwb_mean_overload : p.dwb_mean_normal;
  return mu + p.dwb_std * unit;
}

}  // namespace

TickOutcome step(const EnvParams& params, double priority, RngStream& rng) {
  if (priority < 0.0 || priority > 1.0) {
    throw std::invalid_argument("priority must lie in [0, 1]");
  }
  TickOutcome out;
  out.overload = rng.bernoulli(params.overload_prob);
  out.priority = priority;
  out.latency_ms =
      latency_from(params, out.overload, priority, rng.normal());
  out.wellbeing_delta = raw_dwb(params, out.overload, rng.normal());
  out.success = !out.overload || priority > 0.7;
  return out;
}

double tc_spread(const EnvParams& params, bool overload, RngStream& rng) {
  double mu = overload ? params.tc_mu_overload : params.tc_mu_normal;
  double sigma = overload ? params.tc_sigma_overload : params.tc_sigma_normal;
  return std::max(0.0, mu + sigma * rng.normal());
}

std::vector<double> gen_position(const EnvParams& params, bool overload,
                                 RngStream& rng) {
  double sigma =
      overload ? params.pos_sigma_overload : params.pos_sigma_normal;
  std::vector<double> pos(params.pos_dim);
  for (double& v : pos) v = sigma * rng.normal();
  return pos;
}

std::vector<FutureSample> blind_futures(const std::array<double, 6>& context,
                                        int n, double noise_std,
                                        bool with_positions,
                                        const EnvParams& params, bool overload,
                                        RngStream& rng) {
  if (n < 2) {
    throw std::invalid_argument("blind_futures needs n >= 2");
  }
  std::vector<FutureSample> out(n);
  for (auto& sample : out) {
    sample.state.assign(context.begin(), context.end());
    for (double& v : sample.state) v += noise_std * rng.normal();
    if (with_positions) {
      sample.position = gen_position(params, overload, rng);
    }
  }
  return out;
}

SharedTrajectory generate_shared_trajectory(const EnvParams& params,
                                            std::uint64_t seed, int length,
                                            bool with_positions) {
  if (length < 1) {
    throw std::invalid_argument("trajectory length must be >= 1");
  }
  SharedTrajectory traj;
  traj.seed = seed;
  traj.n_futures = params.n_futures;
  traj.state_dim = 6;
  traj.pos_dim = params.pos_dim;
  traj.with_positions = with_positions;
  traj.ticks.reserve(length);
  RngStream rng = RngStream::derive(seed, 0x656e76);
  double fatigue = 0.0;
  for (int t = 0; t < length; ++t) {
    TickDraws d = draw_tick(params, rng, traj.state_dim, with_positions);
    // Freeze the fatigue path under dt_base pacing so every consumer sees
    // the same value regardless of the intervals it actually chooses.
    fatigue = decayed_fatigue(params, fatigue, params.dt_base);
    if (d.overload) fatigue += params.fatigue_bump;
    fatigue = std::clamp(fatigue, 0.0, params.fatigue_max);
    d.frozen_fatigue = fatigue;
    traj.ticks.push_back(std::move(d));
  }
  return traj;
}

std::string SharedTrajectory::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["seed"] = seed;
  j["n_futures"] = n_futures;
  j["state_dim"] = state_dim;
  j["pos_dim"] = pos_dim;
  j["with_positions"] = with_positions;
  nlohmann::json rows = nlohmann::json::array();
  for (const TickDraws& d : ticks) {
    nlohmann::json row;
    row["o"] = d.overload;
    row["p"] = d.priority;
    row["lat"] = d.latency_unit;
    row["dwb"] = d.dwb_unit;
    row["tc"] = d.tc_unit;
    row["noise"] = d.future_noise;
    row["pos"] = d.future_pos;
    row["f"] = d.frozen_fatigue;
    rows.push_back(std::move(row));
  }
  j["ticks"] = std::move(rows);
  return j.dump();
}

SharedTrajectory SharedTrajectory::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("version").get<int>() != 1) {
    throw std::runtime_error("unsupported trajectory file version");
  }
  SharedTrajectory traj;
  traj.seed = j.at("seed").get<std::uint64_t>();
  traj.n_futures = j.at("n_futures").get<int>();
  traj.state_dim = j.at("state_dim").get<int>();
  traj.pos_dim = j.at("pos_dim").get<int>();
  traj.with_positions = j.at("with_positions").get<bool>();
  for (const auto& row : j.at("ticks")) {
    TickDraws d;
    d.overload = row.at("o").get<bool>();
    d.priority = row.at("p").get<double>();
    d.latency_unit = row.at("lat").get<double>();
    d.dwb_unit = row.at("dwb").get<double>();
    d.tc_unit = row.at("tc").get<double>();
    d.future_noise = row.at("noise").get<std::vector<double>>();
    d.future_pos = row.at("pos").get<std::vector<double>>();
    d.frozen_fatigue = row.at("f").get<double>();
    traj.ticks.push_back(std::move(d));
  }
  return traj;
}

Environment::Environment(const EnvParams& params, std::uint64_t seed)
    : params_(params), rng_(RngStream::derive(seed, 0x656e76)) {}

Environment::Environment(const EnvParams& params,
                         const SharedTrajectory* trajectory)
    : params_(params), rng_(0), trajectory_(trajectory) {
  if (trajectory_ == nullptr) {
    throw std::invalid_argument("replay environment needs a trajectory");
  }
}

const TickDraws& Environment::draws() {
  if (trajectory_ != nullptr) {
    if (tick_ >= static_cast<int>(trajectory_->ticks.size())) {
      throw std::out_of_range("trajectory exhausted");
    }
    return trajectory_->ticks[tick_];
  }
  if (!draws_ready_) {
    live_draws_ = draw_tick(params_, rng_, 6, params_.pos_dim > 0);
    draws_ready_ = true;
  }
  return live_draws_;
}

Environment::TickInputs Environment::begin_tick(double dt_prev) {
  draws_ready_ = false;
  const TickDraws& d = draws();
  if (trajectory_ != nullptr) {
    fatigue_ = d.frozen_fatigue;
  } else {
    fatigue_ = decayed_fatigue(params_, fatigue_, dt_prev);
    if (d.overload) fatigue_ += params_.fatigue_bump;
    fatigue_ = std::clamp(fatigue_, 0.0, params_.fatigue_max);
  }
  return TickInputs{d.priority, fatigue_};
}

std::vector<FutureSample> Environment::futures(
    const std::array<double, 6>& context, bool with_positions,
    bool zero_positions) {
  const TickDraws& d = draws();
  if (with_positions && d.future_pos.empty()) {
    throw std::logic_error("trajectory was generated without positions");
  }
  double std_dev =
      params_.noise_scale * (1.0 + params_.noise_fatigue_coeff * fatigue_);
  double pos_sigma =
      d.overload ? params_.pos_sigma_overload : params_.pos_sigma_normal;
  std::vector<FutureSample> out(params_.n_futures);
  for (int i = 0; i < params_.n_futures; ++i) {
    FutureSample& sample = out[i];
    sample.state.assign(context.begin(), context.end());
    for (int k = 0; k < 6; ++k) {
      sample.state[k] += std_dev * d.future_noise[i * 6 + k];
    }
    if (with_positions) {
      std::vector<double> pos(params_.pos_dim, 0.0);
      if (!zero_positions) {
        for (int k = 0; k < params_.pos_dim; ++k) {
          pos[k] = pos_sigma * d.future_pos[i * params_.pos_dim + k];
        }
      }
      sample.position = std::move(pos);
    }
  }
  return out;
}

double Environment::tc_kappa() {
  const TickDraws& d = draws();
  double mu = d.overload ? params_.tc_mu_overload : params_.tc_mu_normal;
  double sigma =
      d.overload ? params_.tc_sigma_overload : params_.tc_sigma_normal;
  return std::max(0.0, mu + sigma * d.tc_unit);
}

TickOutcome Environment::resolve_tick(double dt_chosen) {
  const TickDraws& d = draws();
  TickOutcome out;
  out.overload = d.overload;
  out.priority = d.priority;
  out.fatigue = fatigue_;
  out.latency_ms = latency_from(params_, d.overload, d.priority,
                                d.latency_unit);
  double before = wellbeing_;
  wellbeing_ = clamp01(wellbeing_ + raw_dwb(params_, d.overload, d.dwb_unit));
  out.wellbeing_delta = wellbeing_ - before;
  out.wellbeing = wellbeing_;
  out.success = !d.overload || d.priority > 0.7;
  clock_ += dt_chosen;
  ++tick_;
  draws_ready_ = false;
  return out;
}

}  // namespace atcpg

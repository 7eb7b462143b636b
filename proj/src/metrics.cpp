#include "metrics.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace atcpg {

double efficiency(const std::vector<bool>& successes,
                  const std::vector<double>& intervals) {
  if (successes.size() != intervals.size()) {
    throw std::invalid_argument("successes and intervals differ in length");
  }
  if (successes.empty()) {
    throw std::invalid_argument("efficiency needs at least one tick");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < successes.size(); ++i) {
    if (intervals[i] <= 0.0) {
      throw std::invalid_argument("intervals must be positive");
    }
    if (successes[i]) sum += 1.0 / intervals[i];
  }
  return sum / static_cast<double>(successes.size());
}

std::uint64_t hash_weights(const PolicyWeights& w) {
  // FNV-1a over the raw weight bytes; only used to spot changes in traces.
  const double vals[7] = {w.bias,        w.w_priority,    w.w_fatigue,
                          w.w_wellbeing, w.w_performance, w.w_phase,
                          w.w_kappa};
  std::uint64_t h = 1469598103934665603ull;
  unsigned char bytes[sizeof(vals)];
  std::memcpy(bytes, vals, sizeof(vals));
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

RunResult summarize(const RunTrace& trace) {
  if (trace.ticks.empty()) {
    throw std::invalid_argument("cannot summarise an empty trace");
  }
  RunResult r;
  r.total_ticks = static_cast<int>(trace.ticks.size());
  double inv_sum = 0.0;
  double interval_sum = 0.0;
  double success_sum = 0.0;
  double wb_sum = 0.0;
  double kappa_over = 0.0;
  double kappa_norm = 0.0;
  int n_over = 0;
  int n_norm = 0;
  for (const TickRecord& t : trace.ticks) {
    if (t.success) inv_sum += 1.0 / t.interval;
    interval_sum += t.interval;
    success_sum += t.success ? 1.0 : 0.0;
    wb_sum += t.wellbeing;
    if (t.overload) {
      kappa_over += t.kappa;
      ++n_over;
    } else {
      kappa_norm += t.kappa;
      ++n_norm;
    }
  }
  const double n = static_cast<double>(r.total_ticks);
  r.efficiency = inv_sum / n;
  r.performance_score = success_sum / n;
  r.mean_interval = interval_sum / n;
  const double wb_mean = wb_sum / n;
  double wb_var = 0.0;
  for (const TickRecord& t : trace.ticks) {
    const double d = t.wellbeing - wb_mean;
    wb_var += d * d;
  }
  r.wellbeing_std = std::sqrt(wb_var / n);
  r.kappa_mean_overload = n_over > 0 ? kappa_over / n_over : 0.0;
  r.kappa_mean_normal = n_norm > 0 ? kappa_norm / n_norm : 0.0;
  r.kappa_discriminability = r.kappa_mean_normal > 0.0
                                 ? r.kappa_mean_overload / r.kappa_mean_normal
                                 : 0.0;
  return r;
}

}  // namespace atcpg

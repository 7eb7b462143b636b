#include "geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace atcpg {

namespace {

// acosh(1 + u) without cancellation for small u.
double arccosh1p(double u) {
  if (u < 0) u = 0;  // rounding guard, the argument is 1 + u >= 1 exactly
  return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

void check_pair(const PoincarePoint& x, const PoincarePoint& y) {
  if (x.coords.size() != y.coords.size())
    throw std::invalid_argument("poincare point dimension mismatch");
  if (x.curvature != y.curvature)
    throw std::invalid_argument("poincare point curvature mismatch");
}

}  // namespace

double vec_norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double vec_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

PoincarePoint project(std::vector<double> v, double r_max, double c) {
  if (r_max <= 0 || r_max >= 1) throw std::invalid_argument("r_max must lie in (0,1)");
  if (c <= 0) throw std::invalid_argument("curvature must be positive");
  const double limit = r_max / std::sqrt(c);  // ball radius is 1/sqrt(c)
  const double n = vec_norm(v);
  if (n > limit) {
    const double s = limit / n;
    for (double& x : v) x *= s;
  }
  return PoincarePoint{std::move(v), c};
}

PoincarePoint mobius_add(const PoincarePoint& x, const PoincarePoint& y,
                         double r_max) {
  check_pair(x, y);
  const double c = x.curvature;
  const double xy = vec_dot(x.coords, y.coords);
  const double x2 = vec_dot(x.coords, x.coords);
  const double y2 = vec_dot(y.coords, y.coords);
  const double denom = 1.0 + 2.0 * c * xy + c * c * x2 * y2;
  const double ax = (1.0 + 2.0 * c * xy + c * y2) / denom;
  const double ay = (1.0 - c * x2) / denom;
  std::vector<double> out(x.coords.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = ax * x.coords[i] + ay * y.coords[i];
  // additions near the boundary can overshoot by an ulp; rescale instead of
  // erroring
  if (c * vec_dot(out, out) >= 1.0) return project(std::move(out), r_max, c);
  return PoincarePoint{std::move(out), c};
}

double conformal_factor(const PoincarePoint& x) {
  const double q = 1.0 - x.curvature * vec_dot(x.coords, x.coords);
  if (q <= 0) throw std::invalid_argument("point outside the open ball");
  return 2.0 / q;
}

double poincare_distance(const PoincarePoint& x, const PoincarePoint& y,
                         const GeometryConfig& cfg) {
  check_pair(x, y);
  const double c = x.curvature;
  const double sc = std::sqrt(c);
  if (cfg.distance_form == DistanceForm::ArctanhMobius) {
    PoincarePoint nx = x;
    for (double& v : nx.coords) v = -v;
    double t = sc * vec_norm(mobius_add(nx, y, cfg.r_max).coords);
    if (t >= 1.0) t = cfg.r_max;  // rounding guard at the boundary
    return 2.0 / sc * std::atanh(t);
  }
  // arccosh form, written against the gyrovector identity so it covers c != 1
  double d2 = 0;
  for (size_t i = 0; i < x.coords.size(); ++i) {
    const double d = x.coords[i] - y.coords[i];
    d2 += d * d;
  }
  const double px = 1.0 - c * vec_dot(x.coords, x.coords);
  const double py = 1.0 - c * vec_dot(y.coords, y.coords);
  if (px <= 0 || py <= 0) throw std::invalid_argument("point outside the open ball");
  return arccosh1p(2.0 * c * d2 / (px * py)) / sc;
}

}  // namespace atcpg

#pragma once

#include <vector>

namespace atcpg {

enum class DistanceForm { ArctanhMobius, ArccoshExact };

struct GeometryConfig {
  double c = 1.0;                 // ball curvature parameter, > 0
  double r_max = 1.0 - 1e-5;      // projection radius, keeps atanh/acosh finite
  DistanceForm distance_form = DistanceForm::ArccoshExact;
};

// A point of the open ball, c * ||coords||^2 < 1.
struct PoincarePoint {
  std::vector<double> coords;
  double curvature = 1.0;
};

double vec_norm(const std::vector<double>& v);
double vec_dot(const std::vector<double>& a, const std::vector<double>& b);

// v / max(1, ||v|| / r), r = r_max/sqrt(c): identity inside the ball,
// radial rescale outside. Zero maps to the origin.
PoincarePoint project(std::vector<double> v, double r_max, double c = 1.0);

// Mobius gyrovector addition. Result re-projected to r_max if rounding
// pushes it onto or past the boundary.
PoincarePoint mobius_add(const PoincarePoint& x, const PoincarePoint& y,
                         double r_max = 1.0 - 1e-5);

// Local metric scaling 2 / (1 - c||x||^2).
double conformal_factor(const PoincarePoint& x);

// Geodesic distance; both forms agree, the arccosh form is the stable
// default.
double poincare_distance(const PoincarePoint& x, const PoincarePoint& y,
                         const GeometryConfig& cfg = {});

}  // namespace atcpg

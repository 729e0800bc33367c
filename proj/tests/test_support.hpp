#pragma once

#include <cmath>
#include <random>

#include "rigidplan/planner.hpp"

namespace testsupport {

using namespace rigidplan;

/// The two-agent pipe scenario: unit rod, slide plus -30 degree turn, t_f 1.
inline BoundaryConditions pipe_scenario() {
  return BoundaryConditions{
      {{0.0, 0.0}, {0.0, 1.0}},
      {{0.5, 0.0}, {1.0, 0.8660254037844386}},
      1.0,
      0};
}

/// Random configuration in [-1, 1]^2 with healthy pairwise separation and a
/// usable heading reference (agent 1 away from the com).
inline Configuration random_configuration(std::mt19937_64& rng, int n,
                                          double min_sep_frac = 0.3) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const double sep_frac = std::min(min_sep_frac, 1.2 / n);  // feasible for large n
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Configuration c(n);
    for (Vec2& p : c) p = {coord(rng), coord(rng)};
    if (n == 1) return c;

    const double scale = formation_scale(c);
    if (scale <= 0.0) continue;
    double min_sep = scale;
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j < n; ++j) min_sep = std::min(min_sep, norm(c[i] - c[j]));
    const double l1 = norm(c[0] - center_of_mass(c));
    if (min_sep >= sep_frac * scale && l1 >= 0.15 * scale) return c;
  }
  throw std::runtime_error("random_configuration: rejection sampling failed");
}

/// Global proper map x -> R(angle) x + shift applied to every agent (unlike
/// apply_motion, which rotates about the configuration's own centroid).
inline Configuration transform_globally(const Configuration& config, double angle,
                                        Vec2 shift) {
  const double cs = std::cos(angle), sn = std::sin(angle);
  Configuration out(config.size());
  for (std::size_t i = 0; i < config.size(); ++i)
    out[i] = Vec2{cs * config[i].x - sn * config[i].y,
                  sn * config[i].x + cs * config[i].y} +
             shift;
  return out;
}

/// Random proper rigid motion with |rotation| <= max_angle.
inline RigidMotion random_motion(std::mt19937_64& rng, double max_angle) {
  std::uniform_real_distribution<double> angle(-max_angle, max_angle);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  return RigidMotion{{shift(rng), shift(rng)}, angle(rng), 0};
}

/// Random congruent scenario: a random configuration moved by a random
/// proper rigid motion over a random horizon.
inline BoundaryConditions random_scenario(std::mt19937_64& rng, int n,
                                          double max_angle = 2.6) {
  std::uniform_real_distribution<double> horizon(0.5, 2.0);
  BoundaryConditions bc;
  bc.initial = random_configuration(rng, n);
  bc.terminal = apply_motion(random_motion(rng, max_angle), bc.initial);
  bc.t_f = horizon(rng);
  bc.winding = 0;
  return bc;
}

}  // namespace testsupport

#pragma once

#include <vector>

#include "rigidplan/geometry.hpp"

namespace rigidplan {

/// Time-sampled agent states and controls on [0, t_f]. `controls` may be
/// empty when only the states are known (e.g. paths loaded without
/// velocities); operations that need controls throw MissingControls.
struct Trajectory {
  std::vector<double> times;
  std::vector<Configuration> states;
  std::vector<std::vector<Vec2>> controls;

  int n_agents() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }
  int n_samples() const { return static_cast<int>(times.size()); }
  bool has_controls() const { return !controls.empty(); }
};

/// Largest relative drift of any pairwise distance from its value at the
/// first sample. Distances below 1e-12 are compared against that floor
/// instead, so coincident agents do not divide by zero.
double rigidity_residual(const Trajectory& traj);

}  // namespace rigidplan

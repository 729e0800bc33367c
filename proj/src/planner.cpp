#include "rigidplan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rigidplan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_abs_coordinate(const Configuration& config) {
  double m = 0.0;
  for (const Vec2& p : config) m = std::max({m, std::abs(p.x), std::abs(p.y)});
  return m;
}

FormationShape collapsed_shape(int n) {
  FormationShape shape;
  shape.n_agents = n;
  shape.radii.assign(n, 0.0);
  shape.bearings.assign(n, 0.0);
  shape.inertia = 0.0;
  return shape;
}

}  // namespace

PlanSolution plan(const BoundaryConditions& bc, double tol) {
  if (!(bc.t_f > 0.0) || !std::isfinite(bc.t_f))
    throw InvalidHorizon("plan: t_f must be positive, got " + std::to_string(bc.t_f));

  const RigidMotion motion = congruence_transform(bc.initial, bc.terminal, tol);
  const int n = static_cast<int>(bc.initial.size());

  PlanSolution sol;
  sol.t_f = bc.t_f;
  sol.winding = bc.winding;
  sol.delta_theta = motion.rotation;
  sol.u_c = motion.translation / bc.t_f;

  // A formation collapsed onto its com (or a single agent) has no heading;
  // it plans pure translation.
  if (formation_scale(bc.initial) <= 1e-12 * max_abs_coordinate(bc.initial)) {
    sol.shape = collapsed_shape(n);
    sol.r_c0 = center_of_mass(bc.initial);
    sol.theta0 = 0.0;
    sol.omega = 0.0;
  } else {
    const ShapeFrame frame = extract_shape(bc.initial);
    sol.shape = frame.shape;
    sol.r_c0 = frame.com;
    sol.theta0 = frame.heading;
    sol.omega = (motion.rotation + kTwoPi * bc.winding) / bc.t_f;
  }
  sol.cost = reduced_cost(sol.shape, sol.u_c, sol.omega, sol.t_f);
  return sol;
}

double reduced_cost(const FormationShape& shape, Vec2 u_c, double omega,
                    double t_f) {
  if (!(t_f > 0.0))
    throw InvalidHorizon("reduced_cost: t_f must be positive");
  return (shape.n_agents * norm2(u_c) + shape.inertia * omega * omega) * t_f / 2.0;
}

std::vector<Vec2> agent_controls(const PlanSolution& sol, double t) {
  if (t < 0.0 || t > sol.t_f || !std::isfinite(t))
    throw OutOfHorizon("agent_controls: t = " + std::to_string(t) +
                       " outside [0, " + std::to_string(sol.t_f) + "]");
  const double theta = sol.theta0 + sol.omega * t;
  std::vector<Vec2> controls(sol.shape.n_agents);
  for (int i = 0; i < sol.shape.n_agents; ++i)
    controls[i] = sol.u_c + (sol.shape.radii[i] * sol.omega) *
                                unit_normal(sol.shape.bearings[i] + theta);
  return controls;
}

Trajectory sample_trajectory(const PlanSolution& sol, int n_samples) {
  if (n_samples < 2)
    throw InvalidSampleCount("sample_trajectory: need n_samples >= 2, got " +
                             std::to_string(n_samples));
  Trajectory traj;
  traj.times.reserve(n_samples);
  traj.states.reserve(n_samples);
  traj.controls.reserve(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    // k/(n-1) is exactly 1 at the last sample, so the endpoint time is t_f.
    const double t = sol.t_f * (static_cast<double>(k) / (n_samples - 1));
    traj.times.push_back(t);
    traj.states.push_back(reconstruct_positions(sol.shape, sol.r_c0 + t * sol.u_c,
                                                sol.theta0 + sol.omega * t));
    traj.controls.push_back(agent_controls(sol, t));
  }
  return traj;
}

double evaluate_cost(const Trajectory& traj) {
  if (traj.times.size() < 2)
    throw TooFewSamples("evaluate_cost: need at least 2 samples");
  if (!traj.has_controls() || traj.controls.size() != traj.times.size())
    throw MissingControls("evaluate_cost: trajectory has no control samples");

  const auto kinetic = [&](std::size_t k) {
    double g = 0.0;
    for (const Vec2& u : traj.controls[k]) g += norm2(u);
    return 0.5 * g;
  };

  double cost = 0.0;
  double prev = kinetic(0);
  for (std::size_t k = 1; k < traj.times.size(); ++k) {
    const double cur = kinetic(k);
    cost += (traj.times[k] - traj.times[k - 1]) * 0.5 * (prev + cur);
    prev = cur;
  }
  return cost;
}

Trajectory straight_line_trajectory(const BoundaryConditions& bc, int n_samples) {
  if (n_samples < 2)
    throw InvalidSampleCount("straight_line_trajectory: need n_samples >= 2");
  if (bc.initial.size() != bc.terminal.size() || bc.initial.empty())
    throw Error("straight_line_trajectory: mismatched boundary configurations");
  if (!(bc.t_f > 0.0)) throw InvalidHorizon("straight_line_trajectory: t_f <= 0");

  const std::size_t n = bc.initial.size();
  std::vector<Vec2> velocity(n);
  for (std::size_t i = 0; i < n; ++i)
    velocity[i] = (bc.terminal[i] - bc.initial[i]) / bc.t_f;

  Trajectory traj;
  for (int k = 0; k < n_samples; ++k) {
    const double s = static_cast<double>(k) / (n_samples - 1);
    Configuration state(n);
    for (std::size_t i = 0; i < n; ++i)
      state[i] = bc.initial[i] + s * (bc.terminal[i] - bc.initial[i]);
    traj.times.push_back(s * bc.t_f);
    traj.states.push_back(std::move(state));
    traj.controls.push_back(velocity);
  }
  return traj;
}

}  // namespace rigidplan

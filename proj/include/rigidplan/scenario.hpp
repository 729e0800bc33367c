#pragma once

#include <filesystem>
#include <string>

#include "rigidplan/planner.hpp"

namespace rigidplan {

/// One planning task as read from a scenario file (JSON). `agents_initial`
/// and `agents_terminal` are arrays of [x, y] pairs of equal length >= 1.
struct Scenario {
  std::string name;
  Configuration agents_initial;
  Configuration agents_terminal;
  double t_f = 1.0;
  int winding = 0;
  int samples = 201;
  double tol = 1e-9;
};

/// Parses and validates a scenario document. Throws ScenarioError on
/// malformed syntax or on violated invariants (mismatched lists, non-finite
/// coordinates, t_f <= 0, samples < 2).
Scenario parse_scenario(const std::string& text);

/// Reads a scenario file. Throws IoError when the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

BoundaryConditions boundary_conditions(const Scenario& s);

/// Writes the trajectory as CSV with columns
///   t, x_i, y_i, ux_i, uy_i (per agent), xc, yc, theta
/// where theta = theta0 + omega * t from the plan. Values carry 17
/// significant digits so that doubles round-trip exactly.
void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& traj, const PlanSolution& sol);

/// Reads a trajectory written by write_trajectory_csv (the xc/yc/theta
/// columns are not needed to rebuild states and controls and are skipped).
Trajectory read_trajectory_csv(const std::filesystem::path& path);

/// Plan summary as a JSON document (cost, u_c, omega, delta_theta, n_agents,
/// inertia, rigidity_residual, ...).
std::string summary_json(const std::string& name, const PlanSolution& sol,
                         double rigidity, int samples);

void write_summary_json(const std::filesystem::path& path,
                        const std::string& name, const PlanSolution& sol,
                        double rigidity, int samples);

}  // namespace rigidplan

#pragma once

#include <utility>
#include <vector>

#include "rigidplan/planner.hpp"

namespace rigidplan {

/// The 2N-3 distance-constraint pairs used by the direct solver: a fan
/// triangulation anchored on agents 1 and 2, i.e. (1,2) plus (1,i) and (2,i)
/// for every i >= 3 (0-based indices in the returned pairs).
std::vector<std::pair<int, int>> fan_constraint_pairs(int n_agents);

/// Direct transcription of the full-coordinate constrained problem:
/// piecewise-linear agent paths on `knots` uniform grid points, with the
/// interior knot positions as decision variables and the endpoint knots
/// pinned to the boundary configurations.
struct DiscretizedProblem {
  int knots = 50;  // M >= 3
  BoundaryConditions boundary;
  std::vector<std::pair<int, int>> constraint_pairs;  // 2N-3 pairs for N >= 2
  std::vector<double> penalty_schedule;               // positive, one per outer stage
  int max_iters = 500;       // inner minimizer iterations per stage
  double grad_tol = 1e-5;    // projected-gradient tolerance, relative
  double congruence_tol = 1e-9;
};

/// Builds a DiscretizedProblem with the fan constraint pairs and the default
/// tenfold penalty schedule starting at 1.
DiscretizedProblem make_problem(const BoundaryConditions& bc, int knots);

struct OracleSolution {
  Trajectory trajectory;                 // knot states, interval-velocity controls
  double cost = 0.0;                     // evaluate_cost of `trajectory`
  double max_constraint_violation = 0.0; // max |dist - target| / target over knots
  bool converged = false;
  int iterations = 0;                    // total inner iterations
};

/// Minimizes the transcribed kinetic energy subject to the distance
/// constraints at every knot, via an augmented Lagrangian over the penalty
/// schedule with an L-BFGS inner minimizer. Starts from the straight-line
/// interpolation of the endpoints. Never throws on failure to converge: the
/// best iterate is returned with converged == false.
OracleSolution solve_direct(const DiscretizedProblem& problem);

/// Finite-difference check of the stationarity structure of an optimal
/// trajectory: the com must not accelerate, and the relative acceleration of
/// each constrained pair must stay parallel to its separation.
struct PMPDiagnostics {
  std::vector<std::vector<Vec2>> costates;  // lambda_i = -u_i; empty without controls
  std::vector<double> mu_estimates;         // per sample, from the first constrained pair
  double com_accel_residual = 0.0;          // max |d2/dt2 r_c| * t_f^2 / scale
  double parallelism_residual = 0.0;        // max |d x (a_i - a_j)| * t_f^2 / scale^2

  double mu_mean() const;
  double mu_max_deviation() const;  // max |mu_k - mu_mean|
};

/// Second derivatives by central differences (second-order one-sided at the
/// boundary samples). Requires >= 5 uniformly spaced samples; mu is recovered
/// per sample by scalar least squares from a_i - a_j = 2 mu (r_i - r_j).
PMPDiagnostics pmp_residuals(const Trajectory& traj);

struct ComparisonReport {
  double cost_closed_form = 0.0;
  double cost_oracle = 0.0;
  double cost_gap = 0.0;            // (oracle - closed_form) / closed_form
  double max_path_deviation = 0.0;  // max over knots and agents, position units
  double formation_scale = 0.0;
};

/// Compares an oracle solution against the closed form on the same problem.
/// Throws MismatchedProblems when horizons, agent counts or endpoints differ.
ComparisonReport compare(const PlanSolution& closed_form,
                         const OracleSolution& oracle);

}  // namespace rigidplan

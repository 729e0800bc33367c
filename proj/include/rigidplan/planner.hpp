#pragma once

#include <vector>

#include "rigidplan/geometry.hpp"
#include "rigidplan/trajectory.hpp"

namespace rigidplan {

/// Endpoint configurations, horizon and rotation homotopy class for one
/// planning task. The configurations must be congruent under a proper rigid
/// motion; this is validated when the plan is computed.
struct BoundaryConditions {
  Configuration initial;
  Configuration terminal;
  double t_f = 1.0;
  int winding = 0;  // extra full turns on top of the principal rotation
};

/// The closed-form optimum: the centre of mass translates at constant
/// velocity u_c while the formation spins at constant rate omega.
struct PlanSolution {
  Vec2 u_c;                  // com velocity
  double omega = 0.0;        // angular rate, (delta_theta + 2*pi*winding) / t_f
  double theta0 = 0.0;       // heading at t = 0
  Vec2 r_c0;                 // com at t = 0
  FormationShape shape;
  double cost = 0.0;         // (N |u_c|^2 + I_c omega^2) * t_f / 2
  double t_f = 0.0;
  double delta_theta = 0.0;  // principal rotation in (-pi, pi]
  int winding = 0;
};

/// Computes the optimal constant-velocity plan for the given boundary
/// conditions. `tol` is the congruence tolerance (relative to formation
/// scale). Throws InvalidHorizon, NotCongruent, ReflectionRequired, or
/// DegenerateHeading (agent 1 on the com of a non-collapsed formation).
/// A formation collapsed to a single point plans pure translation (omega 0).
PlanSolution plan(const BoundaryConditions& bc, double tol = 1e-9);

/// Energy of constant controls over [0, t_f]:
/// (N |u_c|^2 + I_c omega^2) * t_f / 2.
double reduced_cost(const FormationShape& shape, Vec2 u_c, double omega,
                    double t_f);

/// Per-agent velocities u_i(t) = u_c + l_i omega unit_normal(alpha_i + theta(t)).
/// Throws OutOfHorizon for t outside [0, t_f].
std::vector<Vec2> agent_controls(const PlanSolution& sol, double t);

/// Samples the planned motion on a uniform grid of n_samples points
/// (n_samples >= 2; endpoints included).
Trajectory sample_trajectory(const PlanSolution& sol, int n_samples);

/// Trapezoidal quadrature of the kinetic energy (1/2) sum_i |u_i(t)|^2 over
/// the trajectory's time grid. Throws MissingControls when the trajectory
/// carries no controls.
double evaluate_cost(const Trajectory& traj);

/// Straight-line interpolation of each agent between its endpoints, with the
/// matching constant controls. Not rigid in general; used as a negative
/// control for the rigidity diagnostics.
Trajectory straight_line_trajectory(const BoundaryConditions& bc, int n_samples);

}  // namespace rigidplan

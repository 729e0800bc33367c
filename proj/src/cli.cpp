#include "rigidplan/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <vector>

#include "rigidplan/oracle.hpp"
#include "rigidplan/scenario.hpp"

namespace rigidplan::cli {

namespace {

void apply_overrides(Scenario& s, const Overrides& o) {
  if (o.samples) s.samples = *o.samples;
  if (o.tol) s.tol = *o.tol;
  if (o.winding) s.winding = *o.winding;
}

// Loads and validates a scenario; on failure writes a message and returns a
// nonzero exit code through `code`.
bool load(const std::string& path, const Overrides& overrides, Scenario& out,
          std::ostream& err, int& code) {
  try {
    out = load_scenario(path);
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitBadScenario;
    return false;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    code = kExitIo;
    return false;
  }
  apply_overrides(out, overrides);
  if (out.samples < 2 || !(out.tol > 0.0)) {
    err << "error: invalid samples/tol override\n";
    code = kExitBadScenario;
    return false;
  }
  return true;
}

// Plans and samples; maps infeasibility to exit 3.
bool plan_scenario(const Scenario& s, PlanSolution& sol, Trajectory& traj,
                   std::ostream& err, int& code) {
  try {
    sol = plan(boundary_conditions(s), s.tol);
    traj = sample_trajectory(sol, s.samples);
  } catch (const ReflectionRequired& e) {
    err << "error: reflection required: " << e.what() << "\n";
    code = kExitInfeasible;
    return false;
  } catch (const NotCongruent& e) {
    err << "error: not congruent: " << e.what() << "\n";
    code = kExitInfeasible;
    return false;
  } catch (const DegenerateHeading& e) {
    err << "error: degenerate heading: " << e.what() << "\n";
    code = kExitInfeasible;
    return false;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kExitBadScenario;
    return false;
  }
  return true;
}

double control_sum_residual(const Trajectory& traj, const PlanSolution& sol) {
  double worst = 0.0;
  for (const auto& controls : traj.controls) {
    Vec2 sum;
    for (const Vec2& u : controls) sum += u;
    worst = std::max(worst, norm(sum - static_cast<double>(sol.shape.n_agents) * sol.u_c));
  }
  return worst;
}

}  // namespace

int cmd_plan(const std::string& scenario_path, const std::string& output_dir,
             const Overrides& overrides, std::ostream& out, std::ostream& err) {
  Scenario s;
  int code = kExitOk;
  if (!load(scenario_path, overrides, s, err, code)) return code;

  PlanSolution sol;
  Trajectory traj;
  if (!plan_scenario(s, sol, traj, err, code)) return code;

  const double rigidity = rigidity_residual(traj);

  namespace fs = std::filesystem;
  try {
    fs::create_directories(output_dir);
    write_trajectory_csv(fs::path(output_dir) / "trajectory.csv", traj, sol);
    write_summary_json(fs::path(output_dir) / "summary.json", s.name, sol, rigidity,
                       s.samples);
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }

  out << std::setprecision(10);
  out << "plan: N=" << sol.shape.n_agents << " t_f=" << sol.t_f
      << " cost=" << sol.cost << " omega=" << sol.omega << " u_c=(" << sol.u_c.x
      << "," << sol.u_c.y << ")\n";
  out << "wrote " << (fs::path(output_dir) / "trajectory.csv").string() << " and "
      << (fs::path(output_dir) / "summary.json").string() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& scenario_path, const Overrides& overrides,
               const VerifyThresholds& thresholds, std::ostream& out,
               std::ostream& err) {
  Scenario s;
  int code = kExitOk;
  if (!load(scenario_path, overrides, s, err, code)) return code;

  PlanSolution sol;
  Trajectory traj;
  if (!plan_scenario(s, sol, traj, err, code)) return code;

  const double rigidity = rigidity_residual(traj);
  const PMPDiagnostics diag = pmp_residuals(traj);
  const double ctrl_sum = control_sum_residual(traj, sol);

  const auto row = [&](const char* name, double value, double limit) {
    const bool ok = value <= limit;
    out << "  " << std::left << std::setw(18) << name << std::scientific
        << std::setprecision(3) << value << "  limit " << limit << "  "
        << (ok ? "ok" : "EXCEEDED") << "\n";
    return ok;
  };

  out << "residuals (" << s.samples << " samples):\n";
  bool all_ok = true;
  all_ok &= row("rigidity", rigidity, thresholds.rigidity);
  all_ok &= row("com-acceleration", diag.com_accel_residual, thresholds.com_accel);
  all_ok &= row("parallelism", diag.parallelism_residual, thresholds.parallelism);
  all_ok &= row("control-sum", ctrl_sum, thresholds.control_sum);
  out << (all_ok ? "verify: all residuals within thresholds\n"
                 : "verify: residuals exceed thresholds\n");
  return all_ok ? kExitOk : kExitResiduals;
}

int cmd_oracle(const std::string& scenario_path, const OracleOptions& options,
               const Overrides& overrides, std::ostream& out, std::ostream& err) {
  Scenario s;
  int code = kExitOk;
  if (!load(scenario_path, overrides, s, err, code)) return code;

  if (options.knots < 3) {
    err << "error: need at least 3 knots, got " << options.knots << "\n";
    return kExitBadScenario;
  }

  PlanSolution sol;
  OracleSolution numeric;
  try {
    sol = plan(boundary_conditions(s), s.tol);
    DiscretizedProblem problem = make_problem(boundary_conditions(s), options.knots);
    problem.congruence_tol = s.tol;
    if (options.max_iters) problem.max_iters = *options.max_iters;
    numeric = solve_direct(problem);
  } catch (const ReflectionRequired& e) {
    err << "error: reflection required: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const NotCongruent& e) {
    err << "error: not congruent: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const DegenerateHeading& e) {
    err << "error: degenerate heading: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadScenario;
  }

  const ComparisonReport report = compare(sol, numeric);
  out << std::setprecision(10);
  out << "closed-form cost   " << report.cost_closed_form << "\n";
  out << "oracle cost        " << report.cost_oracle << " (" << options.knots
      << " knots, " << numeric.iterations << " iterations)\n";
  out << std::scientific << std::setprecision(3);
  out << "relative cost gap  " << report.cost_gap << "\n";
  out << "max path deviation " << report.max_path_deviation << " (formation scale "
      << report.formation_scale << ")\n";
  out << "constraint viol.   " << numeric.max_constraint_violation << "\n";
  out << "converged          " << (numeric.converged ? "yes" : "no") << "\n";

  if (!numeric.converged) return kExitNotConverged;
  return std::abs(report.cost_gap) <= options.gap_threshold ? kExitOk
                                                            : kExitResiduals;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"rigidplan: energy-optimal planar rigid-formation planner"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string output_dir = "out";
  Overrides overrides;
  int samples = 0;
  double tol = 0.0;
  int winding = 0;
  std::vector<double> threshold_values;
  OracleOptions oracle_options;
  int max_iters = 0;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("scenario", scenario_path, "Scenario file (JSON)")->required();
    cmd->add_option("--samples", samples, "Trajectory samples (overrides scenario)");
    cmd->add_option("--tol", tol, "Congruence tolerance (overrides scenario)");
    cmd->add_option("--winding", winding, "Extra full rotations (overrides scenario)");
  };

  CLI::App* plan_cmd = app.add_subcommand("plan", "Plan and write trajectory.csv/summary.json");
  add_common(plan_cmd);
  plan_cmd->add_option("-o,--output", output_dir, "Output directory");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Plan and check optimality residuals");
  add_common(verify_cmd);
  verify_cmd
      ->add_option("--thresholds", threshold_values,
                   "Residual thresholds: one value for all, or "
                   "rigidity,com,parallelism,control-sum")
      ->delimiter(',');

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Cross-check the closed form against the direct solver");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--knots", oracle_options.knots, "Transcription knots (>= 3)");
  oracle_cmd->add_option("--gap-threshold", oracle_options.gap_threshold,
                         "Allowed |relative cost gap| for exit 0");
  oracle_cmd->add_option("--max-iters", max_iters,
                         "Inner iterations per penalty stage");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const auto fill_overrides = [&](CLI::App* cmd) {
    if (cmd->count("--samples")) overrides.samples = samples;
    if (cmd->count("--tol")) overrides.tol = tol;
    if (cmd->count("--winding")) overrides.winding = winding;
  };

  if (plan_cmd->parsed()) {
    fill_overrides(plan_cmd);
    return cmd_plan(scenario_path, output_dir, overrides);
  }
  if (verify_cmd->parsed()) {
    fill_overrides(verify_cmd);
    VerifyThresholds thresholds;
    if (threshold_values.size() == 1) {
      thresholds.rigidity = thresholds.com_accel = thresholds.parallelism =
          thresholds.control_sum = threshold_values[0];
    } else if (threshold_values.size() == 4) {
      thresholds.rigidity = threshold_values[0];
      thresholds.com_accel = threshold_values[1];
      thresholds.parallelism = threshold_values[2];
      thresholds.control_sum = threshold_values[3];
    } else if (!threshold_values.empty()) {
      std::cerr << "error: --thresholds takes 1 or 4 values\n";
      return kExitBadScenario;
    }
    return cmd_verify(scenario_path, overrides, thresholds);
  }
  fill_overrides(oracle_cmd);
  if (oracle_cmd->count("--max-iters")) oracle_options.max_iters = max_iters;
  return cmd_oracle(scenario_path, oracle_options, overrides);
}

}  // namespace rigidplan::cli

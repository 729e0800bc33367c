#pragma once

#include <iostream>
#include <optional>
#include <string>

namespace rigidplan::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;            // unreadable input / unwritable output
inline constexpr int kExitBadScenario = 2;   // malformed scenario or bad parameters
inline constexpr int kExitInfeasible = 3;    // not congruent / reflection / degenerate heading
inline constexpr int kExitResiduals = 4;     // verify: residuals above thresholds
inline constexpr int kExitNotConverged = 5;  // oracle: solver did not converge

/// Command-line overrides that win over scenario file values.
struct Overrides {
  std::optional<int> samples;
  std::optional<double> tol;
  std::optional<int> winding;
};

struct VerifyThresholds {
  double rigidity = 1e-9;
  double com_accel = 1e-8;
  double parallelism = 1e-6;
  double control_sum = 1e-12;
};

struct OracleOptions {
  int knots = 50;
  double gap_threshold = 0.01;      // |relative cost gap| allowed for exit 0
  std::optional<int> max_iters;     // inner iterations per penalty stage
};

int cmd_plan(const std::string& scenario_path, const std::string& output_dir,
             const Overrides& overrides = {}, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

int cmd_verify(const std::string& scenario_path, const Overrides& overrides = {},
               const VerifyThresholds& thresholds = {},
               std::ostream& out = std::cout, std::ostream& err = std::cerr);

int cmd_oracle(const std::string& scenario_path, const OracleOptions& options = {},
               const Overrides& overrides = {}, std::ostream& out = std::cout,
               std::ostream& err = std::cerr);

/// Full argv dispatch; used by the rigidplan executable.
int run(int argc, const char* const* argv);

}  // namespace rigidplan::cli

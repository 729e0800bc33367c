#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rigidplan/scenario.hpp"
#include "test_support.hpp"

using namespace rigidplan;
using testsupport::pipe_scenario;

namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const char* tag) {
  const fs::path dir = fs::temp_directory_path() / (std::string("rigidplan_io_") + tag);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

constexpr const char* kPipeScenario = R"({
  "name": "pipe",
  "agents_initial": [[0.0, 0.0], [0.0, 1.0]],
  "agents_terminal": [[0.5, 0.0], [1.0, 0.8660254037844386]],
  "t_f": 1.0
})";

}  // namespace

TEST_CASE("parse_scenario reads a full document and applies defaults") {
  const Scenario s = parse_scenario(kPipeScenario);
  CHECK(s.name == "pipe");
  CHECK(s.agents_initial.size() == 2);
  CHECK(s.agents_terminal[1].y == 0.8660254037844386);
  CHECK(s.t_f == 1.0);
  CHECK(s.winding == 0);
  CHECK(s.samples == 201);
  CHECK(s.tol == 1e-9);

  const Scenario full = parse_scenario(R"({
    "agents_initial": [[0, 0]], "agents_terminal": [[1, 1]],
    "t_f": 2.0, "winding": -1, "samples": 33, "tol": 1e-7,
    "note": "extra keys are fine"
  })");
  CHECK(full.winding == -1);
  CHECK(full.samples == 33);
  CHECK(full.tol == 1e-7);
}

TEST_CASE("parse_scenario rejects malformed documents") {
  CHECK_THROWS_AS(parse_scenario("not json"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("[1,2,3]"), ScenarioError);
  CHECK_THROWS_AS(
      parse_scenario(R"({"agents_initial": [[0,0]], "agents_terminal": [[1,1]]})"),
      ScenarioError);  // missing t_f
  CHECK_THROWS_AS(parse_scenario(R"({
    "agents_initial": [[0,0],[1,0]], "agents_terminal": [[0,0]], "t_f": 1.0
  })"),
                  ScenarioError);  // mismatched lengths
  CHECK_THROWS_AS(parse_scenario(R"({
    "agents_initial": [], "agents_terminal": [], "t_f": 1.0
  })"),
                  ScenarioError);  // empty
  CHECK_THROWS_AS(parse_scenario(R"({
    "agents_initial": [[0,0]], "agents_terminal": [[1,1]], "t_f": 0.0
  })"),
                  ScenarioError);  // bad horizon
  CHECK_THROWS_AS(parse_scenario(R"({
    "agents_initial": [[0,0]], "agents_terminal": [[1,1]], "t_f": 1.0, "samples": 1
  })"),
                  ScenarioError);  // too few samples
  CHECK_THROWS_AS(parse_scenario(R"({
    "agents_initial": [[0]], "agents_terminal": [[1,1]], "t_f": 1.0
  })"),
                  ScenarioError);  // malformed point
}

TEST_CASE("load_scenario distinguishes missing files from bad content") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/path/scenario.json"), IoError);

  const fs::path dir = temp_dir("load");
  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << "{broken";
  CHECK_THROWS_AS(load_scenario(bad), ScenarioError);

  const fs::path good = dir / "good.json";
  std::ofstream(good) << kPipeScenario;
  CHECK(load_scenario(good).name == "pipe");
}

TEST_CASE("bundled scenario files parse and plan") {
  const fs::path dir = RIGIDPLAN_SCENARIO_DIR;
  for (const char* name :
       {"example1.json", "example2_reconstructed.json", "example3_reconstructed.json"}) {
    const Scenario s = load_scenario(dir / name);
    CHECK_NOTHROW(plan(boundary_conditions(s), s.tol));
  }
}

TEST_CASE("trajectory CSV round-trips bit-exactly") {
  const PlanSolution sol = plan(pipe_scenario());
  const Trajectory traj = sample_trajectory(sol, 57);

  const fs::path dir = temp_dir("csv");
  const fs::path path = dir / "trajectory.csv";
  write_trajectory_csv(path, traj, sol);

  const Trajectory back = read_trajectory_csv(path);
  REQUIRE(back.n_samples() == traj.n_samples());
  REQUIRE(back.n_agents() == traj.n_agents());
  for (int k = 0; k < traj.n_samples(); ++k) {
    CHECK(back.times[k] == traj.times[k]);
    for (int i = 0; i < traj.n_agents(); ++i) {
      CHECK(back.states[k][i].x == traj.states[k][i].x);
      CHECK(back.states[k][i].y == traj.states[k][i].y);
      CHECK(back.controls[k][i].x == traj.controls[k][i].x);
      CHECK(back.controls[k][i].y == traj.controls[k][i].y);
    }
  }

  // Same quadrature on the re-read trajectory.
  CHECK(std::abs(evaluate_cost(back) - evaluate_cost(traj)) == 0.0);
  CHECK(std::abs(evaluate_cost(back) - sol.cost) < 1e-9);

  // Deterministic output: writing again yields identical bytes.
  const fs::path again = dir / "trajectory2.csv";
  write_trajectory_csv(again, traj, sol);
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("summary JSON carries the planned quantities") {
  const PlanSolution sol = plan(pipe_scenario());
  const Trajectory traj = sample_trajectory(sol, 201);
  const std::string text = summary_json("pipe", sol, rigidity_residual(traj), 201);

  CHECK(text.find("\"cost\"") != std::string::npos);
  CHECK(text.find("\"u_c\"") != std::string::npos);
  CHECK(text.find("\"omega\"") != std::string::npos);
  CHECK(text.find("\"delta_theta\"") != std::string::npos);
  CHECK(text.find("\"n_agents\"") != std::string::npos);
  CHECK(text.find("\"inertia\"") != std::string::npos);
  CHECK(text.find("\"rigidity_residual\"") != std::string::npos);
  CHECK(text.find("0.63552621755979") != std::string::npos);

  const fs::path dir = temp_dir("summary");
  write_summary_json(dir / "summary.json", "pipe", sol, rigidity_residual(traj), 201);
  CHECK(slurp(dir / "summary.json") == text);
}

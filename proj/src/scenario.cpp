#include "rigidplan/scenario.hpp"

#include <json.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace rigidplan {

namespace {

using nlohmann::json;

Configuration parse_points(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw ScenarioError("scenario: missing or non-array field '" + key + "'");
  Configuration points;
  for (const json& entry : j.at(key)) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number())
      throw ScenarioError("scenario: '" + key + "' entries must be [x, y] pairs");
    const Vec2 p{entry[0].get<double>(), entry[1].get<double>()};
    if (!is_finite(p))
      throw ScenarioError("scenario: non-finite coordinate in '" + key + "'");
    points.push_back(p);
  }
  return points;
}

// 17 significant digits round-trip an IEEE double exactly.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ScenarioError("scenario: document must be an object");

  Scenario s;
  s.name = j.value("name", std::string{});
  s.agents_initial = parse_points(j, "agents_initial");
  s.agents_terminal = parse_points(j, "agents_terminal");

  if (!j.contains("t_f") || !j.at("t_f").is_number())
    throw ScenarioError("scenario: missing numeric field 't_f'");
  s.t_f = j.at("t_f").get<double>();

  try {
    s.winding = j.value("winding", 0);
    s.samples = j.value("samples", 201);
    s.tol = j.value("tol", 1e-9);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario: bad optional field: ") + e.what());
  }

  if (s.agents_initial.size() != s.agents_terminal.size())
    throw ScenarioError("scenario: agents_initial and agents_terminal lengths differ");
  if (s.agents_initial.empty())
    throw ScenarioError("scenario: need at least one agent");
  if (!(s.t_f > 0.0) || !std::isfinite(s.t_f))
    throw ScenarioError("scenario: t_f must be positive and finite");
  if (s.samples < 2) throw ScenarioError("scenario: samples must be >= 2");
  if (!(s.tol > 0.0)) throw ScenarioError("scenario: tol must be positive");
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read scenario file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading: " + path.string());
  return parse_scenario(buf.str());
}

BoundaryConditions boundary_conditions(const Scenario& s) {
  return BoundaryConditions{s.agents_initial, s.agents_terminal, s.t_f, s.winding};
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& traj, const PlanSolution& sol) {
  if (!traj.has_controls() || traj.controls.size() != traj.times.size())
    throw MissingControls("write_trajectory_csv: trajectory has no control samples");
  std::ofstream out(path);
  if (!out) throw IoError("cannot write trajectory file: " + path.string());

  const int n = traj.n_agents();
  out << "t";
  for (int i = 1; i <= n; ++i)
    out << ",x_" << i << ",y_" << i << ",ux_" << i << ",uy_" << i;
  out << ",xc,yc,theta\n";

  for (int k = 0; k < traj.n_samples(); ++k) {
    const double t = traj.times[k];
    out << fmt(t);
    for (int i = 0; i < n; ++i) {
      const Vec2 p = traj.states[k][i];
      const Vec2 u = traj.controls[k][i];
      out << ',' << fmt(p.x) << ',' << fmt(p.y) << ',' << fmt(u.x) << ',' << fmt(u.y);
    }
    const Vec2 com = sol.r_c0 + t * sol.u_c;
    out << ',' << fmt(com.x) << ',' << fmt(com.y) << ','
        << fmt(sol.theta0 + sol.omega * t) << '\n';
  }
  if (!out) throw IoError("error while writing: " + path.string());
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read trajectory file: " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw IoError("empty trajectory file: " + path.string());

  int columns = 1;
  for (char ch : line) columns += (ch == ',');
  if (columns < 8 || (columns - 4) % 4 != 0)
    throw IoError("unexpected trajectory header: " + path.string());
  const int n = (columns - 4) / 4;

  Trajectory traj;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(row, cell, ',')) {
      try {
        values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw IoError("non-numeric trajectory cell '" + cell + "': " + path.string());
      }
    }
    if (static_cast<int>(values.size()) != columns)
      throw IoError("ragged trajectory row: " + path.string());

    traj.times.push_back(values[0]);
    Configuration state(n);
    std::vector<Vec2> controls(n);
    for (int i = 0; i < n; ++i) {
      state[i] = {values[1 + 4 * i], values[2 + 4 * i]};
      controls[i] = {values[3 + 4 * i], values[4 + 4 * i]};
    }
    traj.states.push_back(std::move(state));
    traj.controls.push_back(std::move(controls));
  }
  if (traj.times.empty()) throw IoError("trajectory file has no samples: " + path.string());
  return traj;
}

std::string summary_json(const std::string& name, const PlanSolution& sol,
                         double rigidity, int samples) {
  json j;
  j["name"] = name;
  j["n_agents"] = sol.shape.n_agents;
  j["t_f"] = sol.t_f;
  j["cost"] = sol.cost;
  j["u_c"] = {sol.u_c.x, sol.u_c.y};
  j["omega"] = sol.omega;
  j["delta_theta"] = sol.delta_theta;
  j["winding"] = sol.winding;
  j["theta0"] = sol.theta0;
  j["inertia"] = sol.shape.inertia;
  j["rigidity_residual"] = rigidity;
  j["samples"] = samples;
  return j.dump(2) + "\n";
}

void write_summary_json(const std::filesystem::path& path, const std::string& name,
                        const PlanSolution& sol, double rigidity, int samples) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write summary file: " + path.string());
  out << summary_json(name, sol, rigidity, samples);
  if (!out) throw IoError("error while writing: " + path.string());
}

}  // namespace rigidplan

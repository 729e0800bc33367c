#include "rigidplan/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

namespace rigidplan {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_coordinate(const Configuration& config) {
  double m = 0.0;
  for (const Vec2& p : config) m = std::max({m, std::abs(p.x), std::abs(p.y)});
  return m;
}

void require_finite(const Configuration& config, const char* who) {
  for (const Vec2& p : config) {
    if (!is_finite(p)) throw Error(std::string(who) + ": non-finite position");
  }
}

Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace

double wrap_angle(double a) {
  // remainder() lands in [-pi, pi]; fold the lower boundary onto +pi.
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Vec2 center_of_mass(const Configuration& config) {
  if (config.empty()) throw InvalidN("center_of_mass: empty configuration");
  Vec2 sum;
  for (const Vec2& p : config) sum += p;
  return sum / static_cast<double>(config.size());
}

double formation_scale(const Configuration& config) {
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < config.size(); ++i)
    for (std::size_t j = i + 1; j < config.size(); ++j)
      scale = std::max(scale, norm(config[i] - config[j]));
  return scale;
}

ShapeFrame extract_shape(const Configuration& config, double tol) {
  if (config.empty()) throw InvalidN("extract_shape: empty configuration");
  require_finite(config, "extract_shape");

  const int n = static_cast<int>(config.size());
  ShapeFrame frame;
  frame.com = center_of_mass(config);

  FormationShape& shape = frame.shape;
  shape.n_agents = n;
  shape.radii.resize(n);
  shape.bearings.resize(n);

  double l_max = 0.0;
  for (int i = 0; i < n; ++i) {
    shape.radii[i] = norm(config[i] - frame.com);
    l_max = std::max(l_max, shape.radii[i]);
  }
  if (n >= 2) {
    const double floor = tol * std::max(l_max, max_abs_coordinate(config));
    if (shape.radii[0] <= floor)
      throw DegenerateHeading(
          "extract_shape: agent 1 coincides with the centre of mass");
  }

  frame.heading =
      (n >= 2) ? wrap_angle(std::atan2(config[0].y - frame.com.y,
                                       config[0].x - frame.com.x))
               : 0.0;

  shape.inertia = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2 d = config[i] - frame.com;
    shape.bearings[i] = (shape.radii[i] > 0.0)
                            ? wrap_angle(std::atan2(d.y, d.x) - frame.heading)
                            : 0.0;
    shape.inertia += shape.radii[i] * shape.radii[i];
  }
  shape.bearings[0] = 0.0;
  return frame;
}

Configuration reconstruct_positions(const FormationShape& shape, Vec2 com,
                                    double heading) {
  Configuration out(shape.n_agents);
  for (int i = 0; i < shape.n_agents; ++i)
    out[i] = com + shape.radii[i] * unit_bearing(shape.bearings[i] + heading);
  return out;
}

void validate(const FormationShape& shape) {
  const int n = shape.n_agents;
  if (n < 1) throw Error("shape: n_agents must be >= 1");
  if (static_cast<int>(shape.radii.size()) != n ||
      static_cast<int>(shape.bearings.size()) != n)
    throw Error("shape: radii/bearings size mismatch");
  if (shape.bearings[0] != 0.0) throw Error("shape: bearings[0] must be 0");

  double l_max = 0.0;
  double inertia = 0.0;
  Vec2 first_moment;
  for (int i = 0; i < n; ++i) {
    const double l = shape.radii[i];
    if (!(l >= 0.0) || !std::isfinite(l) || !std::isfinite(shape.bearings[i]))
      throw Error("shape: radii must be finite and non-negative");
    l_max = std::max(l_max, l);
    inertia += l * l;
    first_moment += l * unit_bearing(shape.bearings[i]);
  }
  if (norm(first_moment) > 1e-9 * std::max(l_max, 1e-300))
    throw Error("shape: radii are not centred on the com");
  if (std::abs(shape.inertia - inertia) > 1e-12 * std::max(inertia, 1e-300))
    throw Error("shape: inertia inconsistent with radii");
}

RigidMotion congruence_transform(const Configuration& initial,
                                 const Configuration& terminal, double tol) {
  if (initial.empty() || terminal.empty())
    throw InvalidN("congruence_transform: empty configuration");
  if (initial.size() != terminal.size())
    throw NotCongruent("congruence_transform: agent counts differ");
  require_finite(initial, "congruence_transform");
  require_finite(terminal, "congruence_transform");

  const int n = static_cast<int>(initial.size());
  const Vec2 cp = center_of_mass(initial);
  const Vec2 cq = center_of_mass(terminal);

  const auto best_rotation = [&](bool mirrored) {
    double s_dot = 0.0, s_cross = 0.0;
    for (int i = 0; i < n; ++i) {
      const Vec2 p = initial[i] - cp;
      Vec2 q = terminal[i] - cq;
      if (mirrored) q.y = -q.y;
      s_dot += dot(p, q);
      s_cross += cross(p, q);
    }
    const double angle =
        (s_dot == 0.0 && s_cross == 0.0) ? 0.0 : std::atan2(s_cross, s_dot);
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
      Vec2 q = terminal[i] - cq;
      if (mirrored) q.y = -q.y;
      resid = std::max(resid, norm(rotate(initial[i] - cp, angle) - q));
    }
    return std::pair<double, double>{angle, resid};
  };

  const auto [angle, resid] = best_rotation(false);
  const double scale = std::max(formation_scale(initial), formation_scale(terminal));
  const double coord = std::max(max_abs_coordinate(initial), max_abs_coordinate(terminal));
  const double threshold =
      std::max(tol * scale, 64.0 * std::numeric_limits<double>::epsilon() * coord);

  if (resid > threshold) {
    const auto [mirror_angle, mirror_resid] = best_rotation(true);
    (void)mirror_angle;
    if (mirror_resid <= threshold)
      throw ReflectionRequired(
          "congruence_transform: configurations match only up to a reflection "
          "(improper alignment residual " + std::to_string(mirror_resid) + ")");
    throw NotCongruent(
        "congruence_transform: configurations are not congruent (alignment "
        "residual " + std::to_string(resid) + " > " + std::to_string(threshold) + ")");
  }
  return RigidMotion{cq - cp, wrap_angle(angle), 0};
}

Configuration apply_motion(const RigidMotion& motion, const Configuration& config) {
  const Vec2 c = center_of_mass(config);
  Configuration out(config.size());
  for (std::size_t i = 0; i < config.size(); ++i)
    out[i] = c + motion.translation + rotate(config[i] - c, motion.rotation);
  return out;
}

int constraint_count(int n_agents) {
  if (n_agents < 2)
    throw InvalidN("constraint_count: need at least 2 agents, got " +
                   std::to_string(n_agents));
  return 2 * n_agents - 3;
}

double rotational_coefficient(const FormationShape& shape) {
  // Sums run over the first N-1 agents of the (com, heading) parameterization;
  // the last agent is the one that closes the centre of mass.
  const int m = shape.n_agents - 1;
  double acc = 0.0;
  for (int i = 0; i < m; ++i) acc += shape.radii[i] * shape.radii[i];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      acc += shape.radii[i] * shape.radii[j] *
             std::cos(shape.bearings[i] - shape.bearings[j]);
  return acc;
}

}  // namespace rigidplan

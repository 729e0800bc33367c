#pragma once

#include <cmath>
#include <vector>

#include "rigidplan/errors.hpp"

namespace rigidplan {

/// Planar point, displacement or velocity.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return s * v; }
inline Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
inline Vec2& operator+=(Vec2& a, Vec2 b) { a = a + b; return a; }
inline Vec2& operator-=(Vec2& a, Vec2 b) { a = a - b; return a; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 v) { return dot(v, v); }
inline double norm(Vec2 v) { return std::sqrt(norm2(v)); }
inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Unit vector at angle `theta` from the horizontal.
inline Vec2 unit_bearing(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// +90 degree rotation of unit_bearing: d/dt unit_bearing(theta(t)) equals
/// theta_dot * unit_normal(theta(t)).
inline Vec2 unit_normal(double theta) { return {-std::sin(theta), std::cos(theta)}; }

/// Wraps an angle into (-pi, pi]; the boundary maps to +pi.
double wrap_angle(double a);

/// Agent positions at one instant, in a fixed agent order.
using Configuration = std::vector<Vec2>;

/// Intrinsic description of a planar rigid formation: per-agent distance from
/// the centre of mass (radii) and bearing relative to agent 1's ray
/// (bearings, with bearings[0] == 0). `inertia` is the sum of squared radii,
/// the moment of inertia about the centre of mass with unit masses.
struct FormationShape {
  int n_agents = 0;
  std::vector<double> radii;
  std::vector<double> bearings;
  double inertia = 0.0;
};

/// Throws Error when the shape invariants do not hold (bearings[0] != 0,
/// radii not centred on the com, or inconsistent inertia).
void validate(const FormationShape& shape);

/// Proper planar rigid motion: rotate by `rotation + 2*pi*winding` about the
/// source centroid, then move the centroid by `translation`.
struct RigidMotion {
  Vec2 translation;
  double rotation = 0.0;  // principal value in (-pi, pi]
  int winding = 0;        // extra full turns
};

/// A configuration factored into intrinsic shape, centre of mass and heading.
struct ShapeFrame {
  FormationShape shape;
  Vec2 com;
  double heading = 0.0;  // bearing of agent 1 as seen from the com
};

/// Unweighted mean of the agent positions.
Vec2 center_of_mass(const Configuration& config);

/// Largest pairwise distance; 0 for a single agent.
double formation_scale(const Configuration& config);

/// Factors a configuration into (shape, com, heading). The heading is the
/// bearing of agent 1 from the com; all other bearings are stored relative to
/// it. Throws DegenerateHeading when N >= 2 and agent 1 lies on the com
/// (within `tol`, relative to the formation and coordinate magnitudes).
ShapeFrame extract_shape(const Configuration& config, double tol = 1e-12);

/// Places every agent at com + radii[i] * unit_bearing(bearings[i] + heading).
Configuration reconstruct_positions(const FormationShape& shape, Vec2 com,
                                    double heading);

/// Least-squares proper rigid motion taking `initial` onto `terminal`,
/// computed in closed form from the centred point sets. Throws NotCongruent
/// when no proper motion fits within tol * formation scale, and
/// ReflectionRequired when only an improper (mirrored) alignment fits.
RigidMotion congruence_transform(const Configuration& initial,
                                 const Configuration& terminal,
                                 double tol = 1e-9);

/// Applies a rigid motion: rotate about the configuration's centroid, then
/// translate.
Configuration apply_motion(const RigidMotion& motion, const Configuration& config);

/// Minimum number of distance constraints that make N planar agents rigid:
/// 2N - 3. Throws InvalidN for N < 2.
int constraint_count(int n_agents);

/// Coefficient of omega^2 in the reduced energy, written as the double sum
/// over the first N-1 agents. Equals `shape.inertia` identically: the double
/// sum collapses to the squared radius of the closing agent.
double rotational_coefficient(const FormationShape& shape);

}  // namespace rigidplan

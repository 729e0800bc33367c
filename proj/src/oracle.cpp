#include "rigidplan/oracle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>
#include <utility>

namespace rigidplan {

namespace {

using Eigen::VectorXd;

// Decision vector layout: interior knots k = 1..M-2, agent i, coordinates
// (x, y) at z[((k-1)*N + i)*2 + {0,1}]. Knots 0 and M-1 are pinned.
struct Transcription {
  int n = 0;
  int knots = 0;
  double h = 0.0;
  Configuration p0, pf;
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> target;  // rest length per pair

  int interior() const { return knots - 2; }
  int n_pairs() const { return static_cast<int>(pairs.size()); }
  int dim() const { return 2 * n * interior(); }
  int var(int k, int i) const { return ((k - 1) * n + i) * 2; }

  Vec2 pos(const VectorXd& z, int k, int i) const {
    if (k == 0) return p0[i];
    if (k == knots - 1) return pf[i];
    const int v = var(k, i);
    return {z[v], z[v + 1]};
  }

  // Kinetic energy of the piecewise-linear path: sum |dp|^2 / (2h).
  double objective(const VectorXd& z, VectorXd* grad) const {
    if (grad) grad->setZero();
    double f = 0.0;
    for (int k = 0; k + 1 < knots; ++k) {
      for (int i = 0; i < n; ++i) {
        const Vec2 d = pos(z, k + 1, i) - pos(z, k, i);
        f += norm2(d) / (2.0 * h);
        if (grad) {
          if (k >= 1) {
            const int v = var(k, i);
            (*grad)[v] -= d.x / h;
            (*grad)[v + 1] -= d.y / h;
          }
          if (k + 1 <= knots - 2) {
            const int v = var(k + 1, i);
            (*grad)[v] += d.x / h;
            (*grad)[v + 1] += d.y / h;
          }
        }
      }
    }
    return f;
  }

  // Constraint residual c = |r_i - r_j| - L and its separation direction.
  std::pair<double, Vec2> residual(const VectorXd& z, int k, int c) const {
    const Vec2 d = pos(z, k, pairs[c].first) - pos(z, k, pairs[c].second);
    const double len = norm(d);
    const Vec2 dir = (len > 1e-30) ? d / len : Vec2{1.0, 0.0};
    return {len - target[c], dir};
  }

  double augmented(const VectorXd& z, const VectorXd& nu, double rho,
                   VectorXd* grad) const {
    double value = objective(z, grad);
    const int np = n_pairs();
    for (int k = 1; k <= knots - 2; ++k) {
      for (int c = 0; c < np; ++c) {
        const auto [cv, dir] = residual(z, k, c);
        const double mult = nu[(k - 1) * np + c];
        value += mult * cv + 0.5 * rho * cv * cv;
        if (grad) {
          const double coeff = mult + rho * cv;
          const int vi = var(k, pairs[c].first);
          const int vj = var(k, pairs[c].second);
          (*grad)[vi] += coeff * dir.x;
          (*grad)[vi + 1] += coeff * dir.y;
          (*grad)[vj] -= coeff * dir.x;
          (*grad)[vj + 1] -= coeff * dir.y;
        }
      }
    }
    return value;
  }

  void constraints(const VectorXd& z, VectorXd& c) const {
    const int np = n_pairs();
    c.resize(interior() * np);
    for (int k = 1; k <= knots - 2; ++k)
      for (int p = 0; p < np; ++p) c[(k - 1) * np + p] = residual(z, k, p).first;
  }

  double max_violation_rel(const VectorXd& z) const {
    double worst = 0.0;
    for (int k = 1; k <= knots - 2; ++k) {
      for (int c = 0; c < n_pairs(); ++c) {
        const double cv = std::abs(residual(z, k, c).first);
        worst = std::max(worst, cv / std::max(target[c], 1e-12));
      }
    }
    return worst;
  }

  // Objective gradient projected onto the constraint tangent space (the
  // constraints are knot-local, so the projection decouples per knot).
  // Reported relative to max(|grad f|, characteristic velocity).
  double projected_gradient_rel(const VectorXd& z) const {
    VectorXd g(dim());
    objective(z, &g);

    const double scale_char =
        std::max(formation_scale(p0), norm(center_of_mass(pf) - center_of_mass(p0)));
    const double v_char = std::max(scale_char / (h * (knots - 1)), 1e-12);
    const double ref = std::max(g.lpNorm<Eigen::Infinity>(), v_char);

    const int np = n_pairs();
    double pg = 0.0;
    if (np == 0) {
      pg = g.lpNorm<Eigen::Infinity>();
    } else {
      Eigen::MatrixXd J(np, 2 * n);
      for (int k = 1; k <= knots - 2; ++k) {
        J.setZero();
        for (int c = 0; c < np; ++c) {
          const Vec2 dir = residual(z, k, c).second;
          const int i = 2 * pairs[c].first;
          const int j = 2 * pairs[c].second;
          J(c, i) = dir.x;
          J(c, i + 1) = dir.y;
          J(c, j) = -dir.x;
          J(c, j + 1) = -dir.y;
        }
        const VectorXd gk = g.segment(var(k, 0), 2 * n);
        Eigen::MatrixXd gram = J * J.transpose();
        gram.diagonal().array() += 1e-12 * std::max(1.0, gram.trace() / np);
        const VectorXd y = gram.llt().solve(J * gk);
        const VectorXd tangential = gk - J.transpose() * y;
        pg = std::max(pg, tangential.lpNorm<Eigen::Infinity>());
      }
    }
    return pg / ref;
  }

  Trajectory to_trajectory(const VectorXd& z) const {
    const double t_f = h * (knots - 1);
    Trajectory traj;
    traj.times.reserve(knots);
    traj.states.reserve(knots);
    for (int k = 0; k < knots; ++k) {
      traj.times.push_back(t_f * (static_cast<double>(k) / (knots - 1)));
      Configuration state(n);
      for (int i = 0; i < n; ++i) state[i] = pos(z, k, i);
      traj.states.push_back(std::move(state));
    }
    // Interval velocities: the path is piecewise linear, so the control at
    // knot k is the velocity of interval [k, k+1) (last knot: last interval).
    traj.controls.resize(knots);
    for (int k = 0; k < knots; ++k) {
      const int a = (k < knots - 1) ? k : knots - 2;
      std::vector<Vec2> u(n);
      for (int i = 0; i < n; ++i)
        u[i] = (traj.states[a + 1][i] - traj.states[a][i]) / h;
      traj.controls[k] = std::move(u);
    }
    return traj;
  }
};

// Inverse of the transcription's objective Hessian, used as the initial
// matrix of the inner minimizer: per agent coordinate the Hessian is
// tridiag(-1,2,-1)/h on the interior knots, so applying the inverse is one
// Thomas solve per coordinate column.
class LaplacianPreconditioner {
 public:
  LaplacianPreconditioner(int interior_knots, int columns, double h)
      : rows_(interior_knots), cols_(columns), h_(h), pivot_(interior_knots) {
    double d = 2.0;
    for (int k = 0; k < rows_; ++k) {
      pivot_[k] = d;
      d = 2.0 - 1.0 / d;
    }
  }

  // out = h * T^{-1} q, column by column (entries strided by `columns`).
  void apply(const VectorXd& q, VectorXd& out) const {
    out.resize(q.size());
    forward_.resize(rows_);
    for (int c = 0; c < cols_; ++c) {
      double carry = 0.0;
      for (int k = 0; k < rows_; ++k) {
        forward_[k] = h_ * q[k * cols_ + c] + carry;
        carry = forward_[k] / pivot_[k];
      }
      double x = forward_[rows_ - 1] / pivot_[rows_ - 1];
      out[(rows_ - 1) * cols_ + c] = x;
      for (int k = rows_ - 2; k >= 0; --k) {
        x = (forward_[k] + x) / pivot_[k];
        out[k * cols_ + c] = x;
      }
    }
  }

 private:
  int rows_;
  int cols_;
  double h_;
  std::vector<double> pivot_;
  mutable std::vector<double> forward_;
};

// Minimizes eval(z, &grad) with limited-memory BFGS, the Laplacian inverse as
// the initial matrix, and an Armijo backtracking line search. Returns the
// iteration count.
template <typename F>
int lbfgs_minimize(F&& eval, const LaplacianPreconditioner& precond, VectorXd& z,
                   int max_iters, double gtol) {
  constexpr int kMemory = 10;
  constexpr double kArmijo = 1e-4;

  std::deque<VectorXd> s_hist, y_hist;
  std::deque<double> rho_hist;

  VectorXd g(z.size()), g_new(z.size()), d(z.size()), z_new(z.size()), wq(z.size());
  double f = eval(z, &g);
  double gamma = 1.0;  // scale on the preconditioner, from the latest pair

  int it = 0;
  for (; it < max_iters; ++it) {
    if (g.lpNorm<Eigen::Infinity>() <= gtol) break;

    // Two-loop recursion with H0 = gamma * (objective Hessian)^{-1}.
    d = -g;
    const int m = static_cast<int>(s_hist.size());
    std::vector<double> alpha(m);
    for (int i = m - 1; i >= 0; --i) {
      alpha[i] = rho_hist[i] * s_hist[i].dot(d);
      d -= alpha[i] * y_hist[i];
    }
    precond.apply(d, wq);
    d = gamma * wq;
    for (int i = 0; i < m; ++i) {
      const double beta = rho_hist[i] * y_hist[i].dot(d);
      d += (alpha[i] - beta) * s_hist[i];
    }

    double dg = g.dot(d);
    if (!(dg < 0.0)) {  // not a descent direction; restart from the metric step
      precond.apply(g, wq);
      d = -wq;
      dg = g.dot(d);
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      if (!(dg < 0.0)) break;  // numerically stuck
    }

    double step = 1.0;
    double f_new = f;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      z_new = z + step * d;
      f_new = eval(z_new, &g_new);
      if (std::isfinite(f_new) && f_new <= f + kArmijo * step * dg) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    VectorXd s = z_new - z;
    VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-10 * s.norm() * y.norm()) {
      precond.apply(y, wq);
      const double ywy = y.dot(wq);
      if (ywy > 0.0) gamma = sy / ywy;
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > kMemory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    z.swap(z_new);
    g.swap(g_new);
    f = f_new;
  }
  return it;
}

void validate_constraint_pairs(const std::vector<std::pair<int, int>>& pairs, int n) {
  if (n < 2) {
    if (!pairs.empty()) throw Error("solve_direct: constraints given for N < 2");
    return;
  }
  if (static_cast<int>(pairs.size()) != constraint_count(n))
    throw Error("solve_direct: expected " + std::to_string(constraint_count(n)) +
                " constraint pairs, got " + std::to_string(pairs.size()));

  std::set<std::pair<int, int>> edges;
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw Error("solve_direct: constraint pair out of range");
    edges.insert({std::min(i, j), std::max(i, j)});
  }
  // Rigidity of the induced graph: a fan triangulation anchored on the first
  // two agents. With exactly 2N-3 distinct edges this forces the fan.
  if (static_cast<int>(edges.size()) != constraint_count(n))
    throw Error("solve_direct: duplicate constraint pairs");
  auto require = [&](int i, int j) {
    if (!edges.count({i, j}))
      throw Error("solve_direct: constraint graph is not a fan anchored on agents 1,2 "
                  "(missing pair " + std::to_string(i + 1) + "-" + std::to_string(j + 1) + ")");
  };
  require(0, 1);
  for (int i = 2; i < n; ++i) {
    require(0, i);
    require(1, i);
  }
}

}  // namespace

std::vector<std::pair<int, int>> fan_constraint_pairs(int n_agents) {
  if (n_agents < 1) throw InvalidN("fan_constraint_pairs: need at least 1 agent");
  std::vector<std::pair<int, int>> pairs;
  if (n_agents >= 2) {
    pairs.emplace_back(0, 1);
    for (int i = 2; i < n_agents; ++i) {
      pairs.emplace_back(0, i);
      pairs.emplace_back(1, i);
    }
  }
  return pairs;
}

DiscretizedProblem make_problem(const BoundaryConditions& bc, int knots) {
  DiscretizedProblem problem;
  problem.knots = knots;
  problem.boundary = bc;
  problem.constraint_pairs = fan_constraint_pairs(static_cast<int>(bc.initial.size()));
  problem.penalty_schedule = {1e0, 1e1, 1e2, 1e3, 1e4};
  return problem;
}

OracleSolution solve_direct(const DiscretizedProblem& problem) {
  const BoundaryConditions& bc = problem.boundary;
  if (problem.knots < 3)
    throw InvalidKnotCount("solve_direct: need at least 3 knots, got " +
                           std::to_string(problem.knots));
  if (!(bc.t_f > 0.0) || !std::isfinite(bc.t_f))
    throw InvalidHorizon("solve_direct: t_f must be positive");
  if (problem.penalty_schedule.empty())
    throw Error("solve_direct: empty penalty schedule");
  for (double rho : problem.penalty_schedule)
    if (!(rho > 0.0)) throw Error("solve_direct: penalties must be positive");

  // Feasibility gate; throws NotCongruent / ReflectionRequired.
  congruence_transform(bc.initial, bc.terminal, problem.congruence_tol);

  const int n = static_cast<int>(bc.initial.size());
  validate_constraint_pairs(problem.constraint_pairs, n);

  Transcription tr;
  tr.n = n;
  tr.knots = problem.knots;
  tr.h = bc.t_f / (problem.knots - 1);
  tr.p0 = bc.initial;
  tr.pf = bc.terminal;
  tr.pairs = problem.constraint_pairs;
  tr.target.reserve(tr.pairs.size());
  for (auto [i, j] : tr.pairs) tr.target.push_back(norm(bc.initial[i] - bc.initial[j]));

  const LaplacianPreconditioner precond(tr.interior(), 2 * n, tr.h);
  VectorXd z(tr.dim());
  VectorXd nu(tr.interior() * tr.n_pairs());
  VectorXd c;
  VectorXd g0(tr.dim());
  int total_iters = 0;

  const auto run_schedule = [&](const std::vector<double>& schedule) {
    // Straight-line interpolation of the endpoints (generally infeasible).
    for (int k = 1; k <= problem.knots - 2; ++k) {
      const double s = static_cast<double>(k) / (problem.knots - 1);
      for (int i = 0; i < n; ++i) {
        const Vec2 p = bc.initial[i] + s * (bc.terminal[i] - bc.initial[i]);
        z[tr.var(k, i)] = p.x;
        z[tr.var(k, i) + 1] = p.y;
      }
    }
    nu.setZero();

    // Each subproblem only needs a rough re-minimization: the multiplier
    // updates across stages carry the violation down. Once the schedule is
    // exhausted, a few extra outer iterations at the final penalty let the
    // multipliers finish without the ill-conditioning of ever-larger
    // penalties.
    constexpr int kExtraMultiplierUpdates = 6;
    constexpr double kViolationTarget = 1e-8;
    const int stages = static_cast<int>(schedule.size());
    for (int stage = 0; stage < stages + kExtraMultiplierUpdates; ++stage) {
      const double rho = schedule[std::min(stage, stages - 1)];
      const auto eval = [&](const VectorXd& x, VectorXd* grad) {
        return tr.augmented(x, nu, rho, grad);
      };
      eval(z, &g0);
      const double gtol = std::max(1e-13, 1e-3 * g0.lpNorm<Eigen::Infinity>());
      const int iters = lbfgs_minimize(eval, precond, z, problem.max_iters, gtol);
      total_iters += iters;

      tr.constraints(z, c);
      nu += rho * c;
      if (std::getenv("RIGIDPLAN_DEBUG_SOLVER")) {
        std::fprintf(stderr, "stage %2d rho=%.0e iters=%4d gtol=%.1e viol=%.2e pg=%.2e\n",
                     stage, rho, iters, gtol, tr.max_violation_rel(z),
                     tr.projected_gradient_rel(z));
      }
      if (tr.max_violation_rel(z) <= kViolationTarget &&
          tr.projected_gradient_rel(z) <= 0.5 * problem.grad_tol)
        break;
    }
  };

  // The fan constraints admit folded embeddings: a knot configuration can
  // flip part of the formation across the anchor axis while keeping every fan
  // distance. Paths that collapse far enough during the loose early stages
  // occasionally re-inflate folded, which the full-pairwise distances expose
  // macroscopically. A stiffer continuation keeps the path near-rigid
  // throughout; retry with one at most twice and keep the best attempt.
  OracleSolution best;
  double best_score = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<double> schedule;
    const double stiffen = std::pow(100.0, attempt);
    const double cap = problem.penalty_schedule.back();
    for (double rho : problem.penalty_schedule) {
      const double scaled = rho * stiffen;
      if (scaled <= cap || schedule.empty()) schedule.push_back(std::min(scaled, cap));
    }
    run_schedule(schedule);

    OracleSolution out;
    out.iterations = total_iters;
    out.max_constraint_violation = tr.max_violation_rel(z);
    out.trajectory = tr.to_trajectory(z);
    out.cost = evaluate_cost(out.trajectory);
    const double full_pairwise = rigidity_residual(out.trajectory);
    const bool folded = n >= 3 && full_pairwise > 1e-3;
    out.converged = out.max_constraint_violation <= 1e-6 &&
                    tr.projected_gradient_rel(z) <= problem.grad_tol && !folded;
    if (out.converged) return out;

    const double score = std::max(full_pairwise, out.max_constraint_violation);
    if (score < best_score) {
      best_score = score;
      best = std::move(out);
    }
  }
  best.iterations = total_iters;
  return best;
}

double PMPDiagnostics::mu_mean() const {
  if (mu_estimates.empty()) return 0.0;
  double sum = 0.0;
  for (double mu : mu_estimates) sum += mu;
  return sum / static_cast<double>(mu_estimates.size());
}

double PMPDiagnostics::mu_max_deviation() const {
  const double mean = mu_mean();
  double dev = 0.0;
  for (double mu : mu_estimates) dev = std::max(dev, std::abs(mu - mean));
  return dev;
}

PMPDiagnostics pmp_residuals(const Trajectory& traj) {
  const int m = traj.n_samples();
  if (m < 5) throw TooFewSamples("pmp_residuals: need at least 5 samples, got " +
                                 std::to_string(m));
  const int n = traj.n_agents();
  if (static_cast<int>(traj.states.size()) != m || n < 1)
    throw Error("pmp_residuals: states and times disagree");
  for (const Configuration& s : traj.states)
    if (static_cast<int>(s.size()) != n)
      throw Error("pmp_residuals: inconsistent agent count");

  const double t_span = traj.times.back() - traj.times.front();
  const double h = t_span / (m - 1);
  if (!(h > 0.0)) throw NonUniformGrid("pmp_residuals: degenerate time grid");
  for (int k = 0; k + 1 < m; ++k) {
    const double dt = traj.times[k + 1] - traj.times[k];
    if (std::abs(dt - h) > 1e-9 * h)
      throw NonUniformGrid("pmp_residuals: sample spacing varies by more than 1e-9");
  }

  // Second derivatives: central in the interior, one-sided second order at
  // the boundary samples.
  const double inv_h2 = 1.0 / (h * h);
  const auto& st = traj.states;
  std::vector<std::vector<Vec2>> acc(m, std::vector<Vec2>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k + 1 < m; ++k)
      acc[k][i] = inv_h2 * ((st[k + 1][i] - st[k][i]) + (st[k - 1][i] - st[k][i]));
    acc[0][i] = inv_h2 * (2.0 * (st[0][i] - st[1][i]) - 3.0 * (st[1][i] - st[2][i]) +
                          (st[2][i] - st[3][i]));
    acc[m - 1][i] =
        inv_h2 * (2.0 * (st[m - 1][i] - st[m - 2][i]) -
                  3.0 * (st[m - 2][i] - st[m - 3][i]) + (st[m - 3][i] - st[m - 4][i]));
  }

  const double scale = std::max(formation_scale(st.front()), 1e-12);

  PMPDiagnostics diag;

  double com_worst = 0.0;
  for (int k = 0; k < m; ++k) {
    Vec2 a_c;
    for (int i = 0; i < n; ++i) a_c += acc[k][i];
    a_c = a_c / static_cast<double>(n);
    com_worst = std::max(com_worst, norm(a_c));
  }
  diag.com_accel_residual = com_worst * t_span * t_span / scale;

  if (n >= 2) {
    const auto pairs = fan_constraint_pairs(n);
    double par_worst = 0.0;
    for (int k = 0; k < m; ++k) {
      for (auto [i, j] : pairs) {
        const Vec2 d = st[k][i] - st[k][j];
        const Vec2 rel = acc[k][i] - acc[k][j];
        par_worst = std::max(par_worst, std::abs(cross(d, rel)));
      }
    }
    diag.parallelism_residual = par_worst * t_span * t_span / (scale * scale);

    diag.mu_estimates.resize(m);
    const auto [i, j] = pairs.front();
    for (int k = 0; k < m; ++k) {
      const Vec2 d = st[k][i] - st[k][j];
      const Vec2 rel = acc[k][i] - acc[k][j];
      diag.mu_estimates[k] = dot(rel, d) / (2.0 * std::max(norm2(d), 1e-24));
    }
  }

  if (traj.has_controls() && static_cast<int>(traj.controls.size()) == m) {
    diag.costates.resize(m);
    for (int k = 0; k < m; ++k) {
      diag.costates[k].resize(n);
      for (int i = 0; i < n; ++i) diag.costates[k][i] = -traj.controls[k][i];
    }
  }
  return diag;
}

ComparisonReport compare(const PlanSolution& closed_form,
                         const OracleSolution& oracle) {
  const Trajectory& tr = oracle.trajectory;
  if (tr.n_samples() < 2)
    throw MismatchedProblems("compare: oracle trajectory has no samples");
  if (tr.n_agents() != closed_form.shape.n_agents)
    throw MismatchedProblems("compare: agent counts differ");

  const double t_f = closed_form.t_f;
  if (std::abs(tr.times.front()) > 1e-9 * t_f ||
      std::abs(tr.times.back() - t_f) > 1e-9 * t_f)
    throw MismatchedProblems("compare: horizons differ");

  const Configuration cf_initial =
      reconstruct_positions(closed_form.shape, closed_form.r_c0, closed_form.theta0);
  const double scale = std::max(formation_scale(cf_initial), 1e-12);

  const auto max_deviation = [](const Configuration& a, const Configuration& b) {
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, norm(a[i] - b[i]));
    return dev;
  };

  const Configuration cf_terminal = reconstruct_positions(
      closed_form.shape, closed_form.r_c0 + t_f * closed_form.u_c,
      closed_form.theta0 + closed_form.omega * t_f);
  if (max_deviation(tr.states.front(), cf_initial) > 1e-6 * scale ||
      max_deviation(tr.states.back(), cf_terminal) > 1e-6 * scale)
    throw MismatchedProblems("compare: boundary configurations differ");

  ComparisonReport report;
  report.cost_closed_form = closed_form.cost;
  report.cost_oracle = oracle.cost;
  report.formation_scale = formation_scale(cf_initial);

  const double energy_floor = 1e-15 * std::max(1.0, scale * scale / t_f);
  if (closed_form.cost <= energy_floor && oracle.cost <= energy_floor)
    report.cost_gap = 0.0;
  else
    report.cost_gap =
        (oracle.cost - closed_form.cost) / std::max(closed_form.cost, energy_floor);

  double dev = 0.0;
  for (int k = 0; k < tr.n_samples(); ++k) {
    const double t = tr.times[k];
    const Configuration ref = reconstruct_positions(
        closed_form.shape, closed_form.r_c0 + t * closed_form.u_c,
        closed_form.theta0 + closed_form.omega * t);
    dev = std::max(dev, max_deviation(tr.states[k], ref));
  }
  report.max_path_deviation = dev;
  return report;
}

}  // namespace rigidplan

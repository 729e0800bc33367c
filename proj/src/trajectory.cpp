#include "rigidplan/trajectory.hpp"

#include <algorithm>

namespace rigidplan {

double rigidity_residual(const Trajectory& traj) {
  if (traj.states.size() < 2)
    throw TooFewSamples("rigidity_residual: need at least 2 samples");

  const Configuration& first = traj.states.front();
  const std::size_t n = first.size();
  constexpr double kScaleFloor = 1e-12;

  std::vector<double> reference;
  reference.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      reference.push_back(norm(first[i] - first[j]));

  double worst = 0.0;
  for (const Configuration& state : traj.states) {
    if (state.size() != n)
      throw Error("rigidity_residual: inconsistent agent count across samples");
    std::size_t idx = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++idx) {
        const double d0 = reference[idx];
        const double drift = std::abs(norm(state[i] - state[j]) - d0);
        worst = std::max(worst, drift / std::max(d0, kScaleFloor));
      }
    }
  }
  return worst;
}

}  // namespace rigidplan

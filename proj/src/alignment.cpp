#include "swingcmp/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "swingcmp/error.hpp"

namespace swingcmp {

AlignmentPath dtw_align(const DistanceMatrix& d, double step_penalty) {
  if (d.empty()) throw Error(ErrorCode::EmptyMatrix, "cannot align an empty distance matrix");
  if (!std::isfinite(step_penalty) || step_penalty < 0) {
    throw Error(ErrorCode::InvalidParams, "step penalty must be finite and non-negative");
  }

  const std::size_t n = d.rows();
  const std::size_t m = d.cols();
  std::vector<double> cost(n * m);
  std::vector<StepKind> from(n * m, StepKind::Diagonal);
  auto at = [m](std::size_t i, std::size_t j) { return i * m + j; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == 0 && j == 0) {
        cost[0] = d(0, 0);
        continue;
      }
      double best = std::numeric_limits<double>::infinity();
      StepKind kind = StepKind::Diagonal;
      // Candidates are visited in tie-break order; only a strictly smaller
      // cost replaces the current choice.
      for (StepKind k : tiebreak_backtrack_order()) {
        double c = std::numeric_limits<double>::infinity();
        switch (k) {
          case StepKind::Diagonal:
            if (i > 0 && j > 0) c = cost[at(i - 1, j - 1)];
            break;
          case StepKind::Up:
            if (i > 0) c = cost[at(i - 1, j)] + step_penalty;
            break;
          case StepKind::Left:
            if (j > 0) c = cost[at(i, j - 1)] + step_penalty;
            break;
        }
        if (c < best) {
          best = c;
          kind = k;
        }
      }
      cost[at(i, j)] = d(i, j) + best;
      from[at(i, j)] = kind;
    }
  }

  AlignmentPath path;
  path.total_cost = cost[at(n - 1, m - 1)];
  std::size_t i = n - 1;
  std::size_t j = m - 1;
  path.steps.push_back({i, j});
  while (i > 0 || j > 0) {
    switch (from[at(i, j)]) {
      case StepKind::Diagonal: --i; --j; break;
      case StepKind::Up: --i; break;
      case StepKind::Left: --j; break;
    }
    path.steps.push_back({i, j});
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

bool path_is_valid(const AlignmentPath& path, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || path.steps.empty()) return false;
  if (path.steps.front() != PathStep{0, 0}) return false;
  if (path.steps.back() != PathStep{rows - 1, cols - 1}) return false;
  for (std::size_t s = 1; s < path.steps.size(); ++s) {
    const auto& a = path.steps[s - 1];
    const auto& b = path.steps[s];
    if (b.i < a.i || b.j < a.j) return false;
    const std::size_t di = b.i - a.i;
    const std::size_t dj = b.j - a.j;
    if (di > 1 || dj > 1 || (di == 0 && dj == 0)) return false;
  }
  return true;
}

SyncMap sync_map(const AlignmentPath& path, const DistanceMatrix& d) {
  if (!path_is_valid(path, d.rows(), d.cols())) {
    throw Error(ErrorCode::PathShapeMismatch, "alignment path does not fit the distance matrix",
                {{"rows", std::to_string(d.rows())}, {"cols", std::to_string(d.cols())}});
  }
  SyncMap out;
  out.expert_for_user.assign(d.rows(), 0);
  out.aligned_distance.assign(d.rows(), std::numeric_limits<double>::infinity());
  for (const auto& step : path.steps) {
    // Steps arrive with j increasing within a row, so strict < keeps the smallest j.
    if (d(step.i, step.j) < out.aligned_distance[step.i]) {
      out.aligned_distance[step.i] = d(step.i, step.j);
      out.expert_for_user[step.i] = step.j;
    }
  }
  return out;
}

}  // namespace swingcmp

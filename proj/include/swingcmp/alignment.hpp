#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "swingcmp/embedding.hpp"

namespace swingcmp {

struct PathStep {
  std::size_t i = 0;  // user frame
  std::size_t j = 0;  // expert frame

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct AlignmentPath {
  std::vector<PathStep> steps;
  double total_cost = 0.0;

  friend bool operator==(const AlignmentPath&, const AlignmentPath&) = default;
};

struct SyncMap {
  std::vector<std::size_t> expert_for_user;
  std::vector<double> aligned_distance;

  friend bool operator==(const SyncMap&, const SyncMap&) = default;
};

enum class StepKind { Diagonal, Up, Left };

// Backtracking preference applied when accumulated costs tie exactly:
// diagonal (i-1, j-1), then up (i-1, j), then left (i, j-1).
constexpr std::array<StepKind, 3> tiebreak_backtrack_order() {
  return {StepKind::Diagonal, StepKind::Up, StepKind::Left};
}

// Minimum-cost monotone alignment with an additive penalty on every
// non-diagonal step:
//   cost(i,j) = d(i,j) + min(cost(i-1,j-1), cost(i-1,j) + p, cost(i,j-1) + p)
// Throws EmptyMatrix for a 0-sized matrix, InvalidParams for a negative or
// non-finite penalty.
AlignmentPath dtw_align(const DistanceMatrix& d, double step_penalty = 0.0);

// True when the path starts at (0,0), ends at (rows-1, cols-1) and only uses
// unit steps.
bool path_is_valid(const AlignmentPath& path, std::size_t rows, std::size_t cols);

// Per user frame, the expert frame on the path with the smallest distance
// (smallest index on ties). Throws PathShapeMismatch for an invalid path.
SyncMap sync_map(const AlignmentPath& path, const DistanceMatrix& d);

}  // namespace swingcmp

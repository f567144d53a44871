#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace swingcmp {

struct Segment {
  std::size_t start = 0;  // inclusive
  std::size_t end = 0;    // inclusive

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct DiscrepancyResult {
  double threshold = 0.0;
  std::vector<Segment> flagged_segments;
  std::vector<std::size_t> key_frames;  // one per segment

  friend bool operator==(const DiscrepancyResult&, const DiscrepancyResult&) = default;
};

inline constexpr double kDefaultThresholdK = 1.0;
inline constexpr std::size_t kDefaultMinGap = 3;

// mean(signal) + k * population standard deviation (variance divided by N).
// Throws EmptySignal / NonFiniteValue.
double adaptive_threshold(std::span<const double> signal, double k = kDefaultThresholdK);

// Maximal runs strictly above threshold, with runs separated by fewer than
// min_gap sub-threshold frames merged. Each segment's key frame is its
// arg-max (smallest index on ties).
DiscrepancyResult detect_discrepant_frames(std::span<const double> signal, double threshold,
                                           std::size_t min_gap = kDefaultMinGap);

}  // namespace swingcmp
